#pragma once

// Levine-Tristram signature functions and the integral rho-invariant.
//
// Points of the unit circle are parametrized rationally,
//   omega(s) = ((1 - s^2) + 2 s i) / (1 + s^2),
// so every signature evaluation stays in exact rational arithmetic.  The
// signature function only jumps at unit-circle roots of the Alexander
// polynomial; these are located as real roots x = omega + omega^-1 in
// (-2, 2) of the trace polynomial and isolated by Sturm sequences.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slicebound/ring.hpp"
#include "slicebound/seifert.hpp"

namespace slicebound {

class CirclePoint {
 public:
  /// omega(s) for rational s.
  static CirclePoint from_parameter(const Rational& s) { return CirclePoint(s); }
  /// omega = -1, the limit s -> infinity.
  static CirclePoint minus_one() { return CirclePoint(std::nullopt); }
  static CirclePoint one() { return CirclePoint(Rational(0)); }

  bool is_minus_one() const { return !s_.has_value(); }
  bool is_one() const { return s_.has_value() && *s_ == 0; }
  const std::optional<Rational>& parameter() const { return s_; }
  Rational real() const;
  Rational imag() const;
  /// omega + conj(omega) = 2 Re(omega), in [-2, 2].
  Rational trace() const { return 2 * real(); }
  CirclePoint conjugate() const { return s_ ? CirclePoint(-*s_) : *this; }

 private:
  explicit CirclePoint(std::optional<Rational> s) : s_(std::move(s)) {}
  std::optional<Rational> s_;
};

struct HermitianSignature {
  long value = 0;
  std::size_t nullity = 0;
  /// Set at omega = 1, where the form vanishes identically.
  bool degenerate = false;
  /// Set when the value is the mean of the two adjacent arcs (evaluation on
  /// a jump of the signature function).
  bool averaged = false;
};

/// Exact signature of (1 - omega) S + (1 - conj omega) S^T.
HermitianSignature hermitian_signature_at(const SeifertMatrix& s, const CirclePoint& omega);

/// Open interval (lo, hi) with rational non-root endpoints containing exactly
/// one root of a squarefree polynomial; lo == hi marks an exact rational root.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo == hi ? x == lo : (lo < x && x < hi); }
  Rational width() const { return hi - lo; }
};

/// Number of distinct real roots of p in the open interval (a, b); p(a), p(b)
/// must be nonzero.
std::size_t sturm_count(const LaurentPoly& p, const Rational& a, const Rational& b);

/// Isolating intervals of the real roots of p inside (a, b), sorted
/// decreasingly.  p must be squarefree with p(a), p(b) nonzero.
std::vector<IsolatingInterval> isolate_real_roots(const LaurentPoly& p, const Rational& a, const Rational& b);

/// Halves an isolating interval of the squarefree polynomial p.
IsolatingInterval bisect(const LaurentPoly& p, const IsolatingInterval& iv);

LaurentPoly squarefree_part(const LaurentPoly& p);

/// Squarefree trace polynomial of Delta_S, whose roots in (-2, 2) are the
/// jump locations x = omega + omega^-1.
LaurentPoly jump_polynomial(const SeifertMatrix& s);

/// Isolating intervals of the jump locations, sorted by decreasing x
/// (increasing angle on the upper semicircle).
std::vector<IsolatingInterval> jump_locus(const SeifertMatrix& s);

/// Piecewise-constant signature function on the upper semicircle; the lower
/// half follows by conjugation symmetry.  Arc 0 touches omega = 1; the last
/// arc contains omega = -1.
class SignatureFunction {
 public:
  const std::vector<IsolatingInterval>& jumps() const { return jumps_; }
  const std::vector<long>& arc_values() const { return arc_values_; }
  const LaurentPoly& jump_polynomial() const { return poly_; }

  bool identically_zero() const;
  /// Value at the point with trace x in [-2, 2]; at a jump the mean of the
  /// adjacent arcs is returned with `averaged` set.
  HermitianSignature value_at_trace(const Rational& x) const;

 private:
  friend SignatureFunction signature_function(const SeifertMatrix& s);
  std::vector<IsolatingInterval> jumps_;
  std::vector<long> arc_values_;
  LaurentPoly poly_;
};

/// Thrown when two sample points of the same arc disagree.
class ArcConstancyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

SignatureFunction signature_function(const SeifertMatrix& s);

/// Rational point strictly inside the open trace range (lo, hi), lo < hi.
CirclePoint circle_point_with_trace_in(const Rational& lo, const Rational& hi);

/// coefficient * arccos(x / 2) / pi with x the root isolated by `interval`
/// (a root of `poly`).  A null poly means x is exactly interval.lo.
struct RhoTerm {
  long coefficient = 0;
  IsolatingInterval interval;
  std::shared_ptr<const LaurentPoly> poly;
};

/// Certified real number: |value - true value| <= error_bound.
class RhoValue {
 public:
  RhoValue() = default;
  static RhoValue exact(const Rational& v);
  /// The enclosure [v - error, v + error] with no symbolic form.
  static RhoValue with_error(const Rational& v, const Rational& error);

  const Rational& value() const { return value_; }
  const Rational& error_bound() const { return error_; }
  Rational lower() const { return value_ - error_; }
  Rational upper() const { return value_ + error_; }
  /// Lower and upper bounds for |true value|.
  Rational abs_lower() const;
  Rational abs_upper() const;
  /// Symbolic form sum_i c_i arccos(x_i / 2) / pi plus a rational constant.
  const std::vector<RhoTerm>& exact_form() const { return terms_; }
  const Rational& constant() const { return constant_; }

  /// Recomputes the enclosure after bisecting until error_bound <= precision.
  RhoValue refined(const Rational& precision) const;

  friend RhoValue operator+(const RhoValue& a, const RhoValue& b);
  friend RhoValue operator*(long k, const RhoValue& r);
  RhoValue operator-() const { return -1 * *this; }

 private:
  friend RhoValue rho_integral(const SeifertMatrix& s, const Rational& precision);
  void recompute();

  Rational value_;
  Rational error_;
  Rational constant_;
  std::vector<RhoTerm> terms_;
  /// Error carried by values built with with_error; never refined.
  Rational opaque_error_;
};

/// Enclosure [lo, hi] of arccos(x / 2) / pi over x in [x_lo, x_hi].
std::pair<Rational, Rational> normalized_arccos_enclosure(const Rational& x_lo, const Rational& x_hi);

/// Integral of the signature function over the unit circle normalized to
/// length 1, with error_bound <= precision.
RhoValue rho_integral(const SeifertMatrix& s, const Rational& precision);

/// Sum of the individual rho-invariants; total error_bound <= precision.
RhoValue rho_of_connected_sum(const std::vector<SeifertMatrix>& knots, const Rational& precision);

inline const Rational kDefaultPrecision = make_rational(1, 1000000);

}  // namespace slicebound
