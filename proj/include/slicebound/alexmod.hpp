#pragma once

// Rational Alexander modules over the PID R = Q[t, t^-1].
//
// A module is the cokernel of a presentation matrix P acting on column
// vectors: M = R^n / P R^n.  Elements are represented by vectors in R^n.

#include <string>
#include <vector>

#include "slicebound/matrix.hpp"
#include "slicebound/seifert.hpp"

namespace slicebound {

struct PresentationMatrix {
  PolyMatrix entries;
  std::size_t generators() const { return entries.rows(); }
};

/// tS - S^T.
PresentationMatrix present(const SeifertMatrix& s);

struct AlexanderModule {
  /// Non-unit invariant factors d_1 | d_2 | ..., each a primitive integral
  /// polynomial with nonzero constant term and positive leading coefficient.
  std::vector<LaurentPoly> invariant_factors;
};

/// Nonzero diagonal of a Smith form of an arbitrary matrix over R, in
/// divisibility order and including units (normalized to 1).
std::vector<LaurentPoly> smith_diagonal(const PolyMatrix& m);

/// Throws DomainError when the presentation is not square or singular.
AlexanderModule smith_form(const PresentationMatrix& p);

std::size_t min_generators(const AlexanderModule& a);

/// True iff the module cannot be generated by beta2 elements.
bool extension_gate(const AlexanderModule& a, std::size_t beta2);

/// Element of Q(t) / Q[t, t^-1], kept as num/den with den a primitive
/// polynomial with nonzero constant term, deg num < deg den and
/// gcd(num, den) = 1.  Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  /// Reduces num/den modulo Q[t, t^-1].
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// f(t^-1).
  RationalFunction involute() const;
  std::string to_string() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  LaurentPoly num_;
  LaurentPoly den_;
};

using ModuleElement = std::vector<LaurentPoly>;

struct Submodule {
  std::vector<ModuleElement> generators;
};

/// Blanchfield pairing Bl(x, y) = conj(x)^T G y with G = (1 - t) P^-1 on
/// the standard generators of the module presented by P = tS - S^T.
class BlanchfieldForm {
 public:
  const PresentationMatrix& presentation() const { return presentation_; }
  std::size_t size() const { return presentation_.generators(); }
  const Matrix<RationalFunction>& gram() const { return gram_; }
  /// det P, the common denominator of P^-1.
  const LaurentPoly& determinant() const { return det_; }
  /// adj P = det(P) P^-1.
  const PolyMatrix& adjugate() const { return adjugate_; }

  RationalFunction pair(const ModuleElement& x, const ModuleElement& y) const;
  /// Whether x lies in P R^n, i.e. represents 0 in the module.
  bool is_zero_element(const ModuleElement& x) const;
  /// Whether x lies in the submodule spanned by P and the generators of b.
  bool contains(const Submodule& b, const ModuleElement& x) const;
  /// Whether b is a proper submodule.
  bool is_proper(const Submodule& b) const;

 private:
  friend BlanchfieldForm blanchfield(const SeifertMatrix& s);
  PresentationMatrix presentation_;
  LaurentPoly det_;
  PolyMatrix adjugate_;
  Matrix<RationalFunction> gram_;
};

BlanchfieldForm blanchfield(const SeifertMatrix& s);

/// Adjugate of a square matrix with polynomial entries (no negative
/// exponents), by evaluation and interpolation.
PolyMatrix adjugate(const PolyMatrix& m);

/// Orthogonal complement {y : Bl(x, y) = 0 for all x in b}.
Submodule perp(const BlanchfieldForm& form, const Submodule& b);

}  // namespace slicebound
