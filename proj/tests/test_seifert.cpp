#include "doctest.h"
#include "generators.hpp"
#include "slicebound/seifert.hpp"

using namespace slicebound;
using slicebound::testing::catalog_sample;
using slicebound::testing::random_seifert;
using slicebound::testing::random_unimodular;

namespace {

LaurentPoly poly(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return LaurentPoly(0, v);
}

SeifertMatrix trefoil() { return catalog("trefoil"); }

// 2x2 determinant oracle for det(tS - S^T).
LaurentPoly det2(const SeifertMatrix& s) {
  auto e = [&](std::size_t i, std::size_t j) {
    return LaurentPoly::monomial(Rational(s(i, j)), 1) - LaurentPoly(Rational(s(j, i)));
  };
  return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
}

}  // namespace

TEST_CASE("construction validates det(S - S^T)") {
  CHECK_NOTHROW(SeifertMatrix(IntMatrix(2, 2, {-1, 1, 0, -1})));
  try {
    SeifertMatrix(IntMatrix(2, 2, {1, 2, 0, 1}));
    FAIL("expected InvalidSeifertMatrix");
  } catch (const InvalidSeifertMatrix& e) {
    REQUIRE(e.determinant().has_value());
    CHECK(*e.determinant() == 4);
  }
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix(1, 1, {0})), InvalidSeifertMatrix);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix(2, 3)), InvalidSeifertMatrix);
}

TEST_CASE("alexander polynomial examples") {
  CHECK(alexander_polynomial(trefoil()).representative() == poly({1, -1, 1}));
  CHECK(unit_equivalent(det2(trefoil()), poly({1, -1, 1})));
  CHECK(alexander_polynomial(catalog("unknot")).representative() == LaurentPoly(1));
  auto d = alexander_polynomial(trefoil()).representative();
  CHECK(alexander_polynomial(block_sum(trefoil(), trefoil())) == unit_normalize(d * d));
  CHECK(alexander_polynomial(catalog("figure-eight")).representative() == poly({1, -3, 1}));
}

TEST_CASE("alexander polynomial matches the 2x2 oracle on random matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_seifert(1, rng, 5);
    CHECK(alexander_polynomial(s) == unit_normalize(det2(s)));
  }
}

TEST_CASE("block_sum") {
  auto s = catalog("torus(2,5)");
  CHECK(block_sum(catalog("unknot"), s) == s);
  CHECK(block_sum(trefoil(), s).size() == 6);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_seifert(1, rng), b = random_seifert(2, rng);
    auto prod = alexander_polynomial(a).representative() * alexander_polynomial(b).representative();
    CHECK(alexander_polynomial(block_sum(a, b)) == unit_normalize(prod));
  }
}

TEST_CASE("concordance inverse") {
  CHECK(concordance_inverse(trefoil()).entries() == IntMatrix(2, 2, {1, -1, 0, 1}));
  CHECK(mirror(trefoil()).entries() == IntMatrix(2, 2, {1, 0, -1, 1}));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_seifert(1 + trial % 3, rng);
    auto sum = block_sum(s, concordance_inverse(s));
    CHECK(metabolizer_check(sum, diagonal_metabolizer(s.size())));
  }
}

TEST_CASE("metabolizer_check examples and errors") {
  auto sum = block_sum(trefoil(), concordance_inverse(trefoil()));
  MetabolizerCertificate diag{{{1, 0, 1, 0}, {0, 1, 0, 1}}};
  CHECK(metabolizer_check(sum, diag));
  CHECK_FALSE(metabolizer_check(trefoil(), MetabolizerCertificate{{{1, 0}}}));
  CHECK(metabolizer_check(catalog("unknot"), MetabolizerCertificate{}));

  CHECK_THROWS_AS(metabolizer_check(sum, MetabolizerCertificate{{{1, 0, 1, 0}}}), DomainError);
  CHECK_THROWS_AS(metabolizer_check(sum, MetabolizerCertificate{{{1, 0, 1, 0}, {2, 0, 2, 0}}}), DomainError);
  CHECK_THROWS_AS(metabolizer_check(sum, MetabolizerCertificate{{{1, 0, 1}, {0, 1, 0, 1}}}), DomainError);

  // (2,0,2,0), (0,1,0,1): the form vanishes but the span has index 2.
  MetabolizerCertificate scaled{{{2, 0, 2, 0}, {0, 1, 0, 1}}};
  CHECK_FALSE(metabolizer_check(sum, scaled));
  CHECK(metabolizer_check(sum, scaled, SummandMode::rational));
}

TEST_CASE("fox_milnor_check") {
  auto phi6 = cyclotomic(6);
  CHECK(fox_milnor_check(unit_normalize(phi6 * phi6), phi6));
  CHECK_FALSE(fox_milnor_check(unit_normalize(phi6), LaurentPoly(1)));
  CHECK(fox_milnor_check(unit_normalize(LaurentPoly(1)), LaurentPoly(1)));
}

TEST_CASE("realize_alexander") {
  auto s = realize_alexander(poly({1, -1, 1}));
  CHECK(alexander_polynomial(s).representative() == poly({1, -1, 1}));

  auto s30 = realize_alexander(cyclotomic(30));
  CHECK(s30.size() == 8);
  CHECK(alexander_polynomial(s30) == unit_normalize(cyclotomic(30)));

  CHECK(realize_alexander(LaurentPoly(-1)).size() == 0);
  CHECK_THROWS_WITH_AS(realize_alexander(poly({-1, 1})), doctest::Contains("normalization"), DomainError);
  CHECK_THROWS_WITH_AS(realize_alexander(poly({-1, 1, 1})), doctest::Contains("symmetry"), DomainError);
  CHECK_THROWS_AS(realize_alexander(LaurentPoly(0, {make_rational(1, 2), Rational(0), make_rational(1, 2)})),
                  DomainError);
  CHECK_THROWS_AS(realize_alexander(cyclotomic(9)), DomainError);
}

TEST_CASE("realize_alexander round-trips Alexander polynomials of random knots") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto delta = alexander_polynomial(random_seifert(1 + trial % 3, rng)).representative();
    // Shift and negate: the contract is up to +-t^k.
    auto s = realize_alexander(-delta.shifted(trial % 5 - 2));
    CHECK(alexander_polynomial(s) == unit_normalize(delta));
  }
  for (std::uint64_t n : {6, 10, 15, 21, 30, 42, 60, 105}) {
    auto s = realize_alexander(cyclotomic(n));
    CHECK(alexander_polynomial(s) == unit_normalize(cyclotomic(n)));
    CHECK(s.size() == euler_phi(n));
  }
}

TEST_CASE("catalog") {
  CHECK(catalog("trefoil").entries() == IntMatrix(2, 2, {-1, 1, 0, -1}));
  CHECK(catalog("unknot").size() == 0);
  auto t25 = catalog("torus(2,5)");
  CHECK(t25.size() == 4);
  CHECK(alexander_polynomial(t25) == unit_normalize(cyclotomic(10)));
  CHECK(catalog("torus", {2, 7}) == catalog("torus(2,7)"));
  CHECK(alexander_polynomial(catalog("twist(2)")).representative() == poly({2, -5, 2}));
  CHECK_THROWS_AS(catalog("granny"), DomainError);
  CHECK_THROWS_AS(catalog("torus(3,4)"), DomainError);
  CHECK_THROWS_AS(catalog("torus(2,4)"), DomainError);
  CHECK_THROWS_AS(catalog("twist"), DomainError);
}

TEST_CASE("genus_from_matrix") {
  CHECK(genus_from_matrix(catalog("unknot")) == 0);
  CHECK(genus_from_matrix(trefoil()) == 1);
  CHECK(genus_from_matrix(repeat(trefoil(), 4)) == 4);
}

TEST_CASE("Alexander polynomial invariants under congruence") {
  std::mt19937 rng(31);
  for (const auto& s : catalog_sample()) {
    auto d = alexander_polynomial(s).representative();
    CHECK(abs(d.eval(1)) == 1);
    CHECK(is_symmetric(d));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = catalog_sample()[1 + trial % 7];
    auto p = random_unimodular(base.size(), rng);
    auto s = congruent(base, p);
    auto d = alexander_polynomial(s);
    CHECK(d == alexander_polynomial(base));
    CHECK(abs(d.representative().eval(1)) == 1);
    CHECK(is_symmetric(d.representative()));
  }
  for (int trial = 0; trial < 30; ++trial) {
    auto s = random_seifert(1 + trial % 4, rng, 3);
    CHECK(is_symmetric(alexander_polynomial(s).representative()));
  }
}

TEST_CASE("metabolizer of S + (-S) for catalog entries") {
  for (const auto& s : catalog_sample())
    CHECK(metabolizer_check(block_sum(s, concordance_inverse(s)), diagonal_metabolizer(s.size())));
}

TEST_CASE("interpolated Alexander polynomial matches polynomial Bareiss") {
  std::mt19937 rng(31);
  std::vector<SeifertMatrix> knots = catalog_sample();
  for (int i = 0; i < 12; ++i) knots.push_back(random_seifert(1 + i % 3, rng));
  knots.push_back(repeat(catalog("torus(2,5)"), 2));
  for (const auto& s : knots) {
    if (s.size() == 0) continue;
    CHECK(unit_normalize(determinant(alexander_presentation(s))) == alexander_polynomial(s));
  }
}
