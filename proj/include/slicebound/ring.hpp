#pragma once

// Exact arithmetic: rationals, Laurent polynomials over Q, cyclotomic
// polynomials and the unit conventions used across the library.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace slicebound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an operation receives input outside its domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer& num, const Integer& den = 1);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Decimal rendering with `digits` digits after the point, rounded toward
/// the nearest representable value.
std::string to_decimal(const Rational& q, int digits);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Element of Q[t, t^-1], stored as t^low * (c_0 + c_1 t + ... + c_k t^k)
/// with c_0 and c_k nonzero.  The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT
  LaurentPoly(long low, std::vector<Rational> coefficients);

  static LaurentPoly monomial(const Rational& c, long exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1 && (is_zero() || low_ == 0); }
  /// True for nonzero c*t^k, the units of Q[t, t^-1].
  bool is_unit() const { return coeffs_.size() == 1; }

  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  /// Degree span high - low; the Euclidean norm on Q[t, t^-1].  -1 for zero.
  long span() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(long exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }

  bool has_integer_coefficients() const;

  Rational eval(const Rational& x) const;
  /// p(t^-1).
  LaurentPoly involute() const;
  /// t^k * p.
  LaurentPoly shifted(long k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  long low_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// Euclidean division in Q[t, t^-1]: a = q*b + r with span(r) < span(b).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Throws DomainError unless b divides a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Canonical associate under all units c*t^k of Q[t, t^-1]: integral
/// coefficients with gcd 1, lowest exponent 0, positive leading coefficient.
LaurentPoly primitive_associate(const LaurentPoly& p);

/// Greatest common divisor, returned as its primitive associate.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Division and gcd in Q[x] for polynomials without negative exponents; here
/// x is not a unit, unlike in the Laurent ring.
std::pair<LaurentPoly, LaurentPoly> polynomial_divmod(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

struct Bezout {
  LaurentPoly g, u, v;  // u*a + v*b = g
};
Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Equivalence class of a nonzero Laurent polynomial under p ~ +-t^k p.
/// Rational scalars other than -1 are not quotiented out.
class UnitClass {
 public:
  explicit UnitClass(const LaurentPoly& p);
  const LaurentPoly& representative() const { return rep_; }
  friend bool operator==(const UnitClass& a, const UnitClass& b) { return a.rep_ == b.rep_; }
  std::string to_string() const { return rep_.to_string(); }

 private:
  LaurentPoly rep_;
};

UnitClass unit_normalize(const LaurentPoly& p);
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// p(t^-1) = +-t^k p(t) for some k.
bool is_symmetric(const LaurentPoly& p);

Rational eval_at_one(const LaurentPoly& p);

struct Factorization {
  std::map<std::uint64_t, unsigned> primes;  // prime -> exponent
  bool prime_power = false;
  std::size_t distinct() const { return primes.size(); }
};

inline constexpr std::uint64_t kFactorizationLimit = 1'000'000;

/// Trial division.  n in [2, kFactorizationLimit].
Factorization factorize(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Phi_n(t), n in [1, kFactorizationLimit].
LaurentPoly cyclotomic(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// The polynomial of degree < xs.size() through the points (xs[i], ys[i]).
LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// p(q(t)) for an ordinary polynomial p (no negative exponents).
LaurentPoly compose(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly derivative(const LaurentPoly& p);

/// For p with p(t^-1) = t^k p(t) and even span 2m, the ordinary polynomial
/// q of degree m with t^-m t^(-low) p(t) = q(t + t^-1).  Throws DomainError
/// for odd span or when p is anti-symmetric.
LaurentPoly trace_polynomial(const LaurentPoly& p);

}  // namespace slicebound
