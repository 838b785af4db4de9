#pragma once

// Random test inputs shared by the unit and acceptance suites.

#include <random>

#include "slicebound/seifert.hpp"

namespace slicebound::testing {

/// Random unimodular integer matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 12) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const Integer m = mult(rng);
    for (std::size_t r = 0; r < n; ++r) p(r, i) += m * p(r, j);
  }
  return p;
}

/// Random valid Seifert matrix of size 2g: a symplectic base plus a random
/// symmetric integer matrix (which leaves S - S^T unchanged).
inline SeifertMatrix random_seifert(std::size_t g, std::mt19937& rng, int range = 2) {
  const std::size_t n = 2 * g;
  IntMatrix s(n, n);
  for (std::size_t i = 0; i < g; ++i) s(2 * i, 2 * i + 1) = 1;
  std::uniform_int_distribution<int> e(-range, range);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Integer v = e(rng);
      s(i, j) += v;
      if (i != j) s(j, i) += v;
    }
  return SeifertMatrix(s, "random");
}

inline std::vector<SeifertMatrix> catalog_sample() {
  return {catalog("unknot"),      catalog("trefoil"),    catalog("figure-eight"), catalog("torus(2,5)"),
          catalog("torus(2,7)"),  catalog("twist(2)"),   catalog("twist(-3)"),    catalog("twist(5)")};
}

}  // namespace slicebound::testing
