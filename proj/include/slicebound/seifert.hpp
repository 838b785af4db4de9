#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicebound/matrix.hpp"
#include "slicebound/ring.hpp"

namespace slicebound {

/// Square integer matrix S of even size with det(S - S^T) = +-1.
class SeifertMatrix {
 public:
  /// The unknot's empty matrix.
  SeifertMatrix() = default;
  /// Validates the unimodularity of S - S^T; throws InvalidSeifertMatrix.
  explicit SeifertMatrix(IntMatrix entries, std::string name = {});

  const IntMatrix& entries() const { return entries_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return entries_.rows(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  SeifertMatrix renamed(std::string name) const;

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.entries_ == b.entries_; }

 private:
  IntMatrix entries_;
  std::string name_;
};

class InvalidSeifertMatrix : public DomainError {
 public:
  InvalidSeifertMatrix(const std::string& what, std::optional<Integer> determinant)
      : DomainError(what), determinant_(std::move(determinant)) {}
  /// det(S - S^T) when the matrix was square and even-sized.
  const std::optional<Integer>& determinant() const { return determinant_; }

 private:
  std::optional<Integer> determinant_;
};

/// Basis of a candidate metabolizer: r integer vectors of length 2r.
struct MetabolizerCertificate {
  std::vector<std::vector<Integer>> basis;
};

/// det(tS - S^T) up to +-t^k.
UnitClass alexander_polynomial(const SeifertMatrix& s);

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix block_sum(const std::vector<SeifertMatrix>& parts);
/// k-fold block sum.
SeifertMatrix repeat(const SeifertMatrix& s, std::size_t k);

/// -S: the inverse in the concordance group (S # -S admits the diagonal
/// metabolizer).
SeifertMatrix concordance_inverse(const SeifertMatrix& s);
/// -S^T: the mirror image without reversing orientation.
SeifertMatrix mirror(const SeifertMatrix& s);

/// Integral congruence P^T S P; P must be unimodular.
SeifertMatrix congruent(const SeifertMatrix& s, const IntMatrix& p);

enum class SummandMode {
  integral,  // elementary divisors of the basis matrix all equal to 1
  rational,  // rank only
};

/// v^T S w = 0 on the basis and the basis spans a half-rank direct summand.
/// Throws DomainError on wrong cardinality, wrong vector length or
/// linearly dependent vectors.
bool metabolizer_check(const SeifertMatrix& s, const MetabolizerCertificate& m,
                       SummandMode mode = SummandMode::integral);

/// Diagonal basis {(x, x)} of a block sum A + (-A) where A has size n.
MetabolizerCertificate diagonal_metabolizer(std::size_t n);

/// delta ~ f(t) f(t^-1) up to +-t^k.
bool fox_milnor_check(const UnitClass& delta, const LaurentPoly& f);

/// A Seifert matrix with Alexander polynomial ~ delta.  delta must be
/// integral, symmetric and satisfy delta(1) = +-1.
SeifertMatrix realize_alexander(const LaurentPoly& delta);

/// unknot, trefoil, figure-eight, torus(2,2k+1), twist(k).
SeifertMatrix catalog(const std::string& name, const std::vector<long>& params = {});
std::vector<std::string> catalog_names();

/// size/2, an upper bound for the Seifert genus of any realizing knot.
std::size_t genus_from_matrix(const SeifertMatrix& s);

/// tS - S^T.
PolyMatrix alexander_presentation(const SeifertMatrix& s);

}  // namespace slicebound
