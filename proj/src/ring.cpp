#include "slicebound/ring.hpp"

#include <algorithm>
#include <sstream>

namespace slicebound {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n = floor(scaled);
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (q < 0 && n != 0) s.insert(0, "-");
  return s;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coefficients)
    : low_(low), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  return LaurentPoly(exponent, {c});
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  low_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(long exponent) const {
  if (exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw DomainError("evaluation of a Laurent polynomial with negative exponents at 0");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational xk = 1;
  if (low_ >= 0) {
    for (long i = 0; i < low_; ++i) xk *= x;
  } else {
    for (long i = 0; i < -low_; ++i) xk /= x;
  }
  return acc * xk;
}

LaurentPoly LaurentPoly::involute() const {
  if (is_zero()) return {};
  std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (is_zero() || o.is_zero()) return *this = LaurentPoly{};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  low_ += o.low_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_mag = mag == 1;
    if (!unit_mag || e == 0) {
      os << mag.get_str();
      if (e != 0) os << "*";
    }
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result = 1;
  LaurentPoly base = p;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Euclidean structure

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {LaurentPoly{}, LaurentPoly{}};
  // Work with ordinary polynomials A = t^-low(a) a, B = t^-low(b) b.
  std::vector<Rational> rem = a.coefficients();
  const std::vector<Rational>& div = b.coefficients();
  const std::size_t db = div.size() - 1;
  if (rem.size() - 1 < db) return {LaurentPoly{}, a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / div.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational c = rem[k] * inv_lead;
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * div[j];
  }
  rem.resize(db);
  LaurentPoly q(a.low() - b.low(), std::move(quot));
  LaurentPoly r(a.low(), std::move(rem));
  return {q, r};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact division: " + a.to_string() + " / " + b.to_string());
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

LaurentPoly primitive_associate(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    Integer n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (p.leading() < 0) scale = -scale;
  std::vector<Rational> cs;
  cs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) cs.push_back(c * scale);
  return LaurentPoly(0, std::move(cs));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a;
  LaurentPoly y = b;
  while (!y.is_zero()) {
    LaurentPoly r = divmod(x, y).second;
    x = std::move(y);
    y = primitive_associate(r);
  }
  return primitive_associate(x);
}

namespace {

std::vector<Rational> dense(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (p.low() < 0) throw DomainError("polynomial division: negative exponent in " + p.to_string());
  std::vector<Rational> v(static_cast<std::size_t>(p.low()), Rational(0));
  v.insert(v.end(), p.coefficients().begin(), p.coefficients().end());
  return v;
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> polynomial_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  std::vector<Rational> rem = dense(a);
  const std::vector<Rational> div = dense(b);
  const std::size_t db = div.size() - 1;
  if (rem.size() <= db) return {LaurentPoly{}, a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational inv_lead = 1 / div.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    Rational c = rem[k] * inv_lead;
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * div[j];
  }
  rem.resize(db);
  return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a;
  LaurentPoly y = b;
  while (!y.is_zero()) {
    LaurentPoly r = polynomial_divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r * Rational(1 / r.leading());
  }
  if (x.is_zero()) return x;
  // primitive_associate strips powers of x; put them back.
  return primitive_associate(x).shifted(x.low());
}

Bezout extended_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
  LaurentPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    LaurentPoly s2 = s0 - q * s1;
    LaurentPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    r1 = std::move(r);
    s1 = std::move(s2);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {LaurentPoly{}, LaurentPoly{}, LaurentPoly{}};
  // Rescale so that g is the primitive associate.
  LaurentPoly g = primitive_associate(r0);
  LaurentPoly unit = exact_div(g, r0);
  return {g, s0 * unit, t0 * unit};
}

// ---------------------------------------------------------------------------
// Units

UnitClass::UnitClass(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no unit class");
  rep_ = p.shifted(-p.low());
  if (rep_.leading() < 0) rep_ = -rep_;
}

UnitClass unit_normalize(const LaurentPoly& p) { return UnitClass(p); }

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return UnitClass(a) == UnitClass(b);
}

bool is_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("is_symmetric: zero polynomial");
  return unit_equivalent(p, p.involute());
}

Rational eval_at_one(const LaurentPoly& p) {
  Rational s = 0;
  for (const auto& c : p.coefficients()) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// Integers

Factorization factorize(std::uint64_t n) {
  if (n < 2 || n > kFactorizationLimit)
    throw DomainError("factorize: n must lie in [2, " + std::to_string(kFactorizationLimit) + "]");
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f.primes[p];
      n /= p;
    }
  }
  if (n > 1) ++f.primes[n];
  f.prime_power = f.primes.size() == 1;
  return f;
}

bool is_prime_power(std::uint64_t n) { return factorize(n).prime_power; }

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n).primes) phi = phi / p * (p - 1);
  return phi;
}

namespace {

using IntPoly = std::vector<Integer>;  // constant term first

// Exact division by a monic integer polynomial.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t d = den.size() - 1;
  IntPoly q(num.size() - d);
  for (std::size_t k = num.size(); k-- > d;) {
    const Integer c = num[k];
    if (c == 0) continue;
    q[k - d] = c;
    for (std::size_t j = 0; j <= d; ++j) num[k - d + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < d; ++j)
    if (num[j] != 0) throw std::logic_error("cyclotomic: inexact division");
  return q;
}

IntPoly substitute_power(const IntPoly& p, std::uint64_t k) {
  IntPoly r((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) r[i * k] = p[i];
  return r;
}

}  // namespace

LaurentPoly cyclotomic(std::uint64_t n) {
  if (n < 1 || n > kFactorizationLimit)
    throw DomainError("cyclotomic: n must lie in [1, " + std::to_string(kFactorizationLimit) + "]");
  // Phi_{mp}(t) = Phi_m(t^p) / Phi_m(t) for a prime p not dividing m, and
  // Phi_n(t) = Phi_rad(n)(t^(n / rad(n))).
  IntPoly phi = {-1, 1};
  std::uint64_t rad = 1;
  if (n > 1) {
    for (const auto& [p, e] : factorize(n).primes) {
      phi = divide_monic(substitute_power(phi, p), phi);
      rad *= p;
    }
  }
  phi = substitute_power(phi, n / rad);
  std::vector<Rational> cs(phi.begin(), phi.end());
  return LaurentPoly(0, std::move(cs));
}

}  // namespace slicebound

namespace slicebound {

LaurentPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, then nested expansion.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  LaurentPoly p;
  for (std::size_t i = n; i-- > 0;) p = p * (LaurentPoly::t() - LaurentPoly(xs[i])) + LaurentPoly(dd[i]);
  return p;
}

LaurentPoly compose(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return p;
  if (p.low() < 0) throw DomainError("compose: outer polynomial has negative exponents");
  LaurentPoly acc;
  for (long e = p.high(); e >= 0; --e) acc = acc * q + LaurentPoly(p.coeff(e));
  return acc;
}

}  // namespace slicebound

namespace slicebound {

LaurentPoly derivative(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  std::vector<Rational> cs(p.coefficients().size());
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = p.coefficients()[i] * (p.low() + static_cast<long>(i));
  return LaurentPoly(p.low() - 1, std::move(cs));
}

LaurentPoly trace_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  if (p.span() % 2 != 0) throw DomainError("trace_polynomial: odd span for " + p.to_string());
  const LaurentPoly d = p.shifted(-p.low());
  if (!(d.involute().shifted(d.high()) == d))
    throw DomainError("trace_polynomial: " + p.to_string() + " is not palindromic");
  const long m = d.high() / 2;
  // D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}, so that D_j(t + 1/t) = t^j + t^-j.
  const LaurentPoly x = LaurentPoly::t();
  LaurentPoly q = d.coeff(m);
  LaurentPoly prev = 2, cur = x;
  for (long j = 1; j <= m; ++j) {
    q += LaurentPoly(d.coeff(m + j)) * cur;
    LaurentPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

}  // namespace slicebound
