#include "slicebound/signatures.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>

namespace slicebound {

Rational CirclePoint::real() const {
  if (!s_) return -1;
  const Rational s2 = *s_ * *s_;
  return (1 - s2) / (1 + s2);
}

Rational CirclePoint::imag() const {
  if (!s_) return 0;
  return 2 * *s_ / (1 + *s_ * *s_);
}

HermitianSignature hermitian_signature_at(const SeifertMatrix& s, const CirclePoint& omega) {
  const std::size_t n = s.size();
  HermitianSignature out;
  if (omega.is_one()) {
    out.nullity = n;
    out.degenerate = true;
    return out;
  }
  if (n == 0) return out;
  const IntMatrix sym = s.entries() + s.entries().transpose();
  if (omega.is_minus_one()) {
    // H(-1) = 2 (S + S^T)
    const Inertia in = inertia(to_rational(sym));
    out.value = in.signature();
    out.nullity = in.zero;
    return out;
  }
  // With s = p/q, (1 + s^2) q^2 / (2|p|) * H = A + iB where
  // A = |p| (S + S^T) and B = -sgn(p) q (S - S^T).  The real symmetric
  // doubling [[A, -B], [B, A]] has twice the inertia of A + iB.
  const Rational& param = *omega.parameter();
  const Integer p = abs(param.get_num());
  const Integer q = param.get_den();
  const Integer bscale = param > 0 ? Integer(-q) : q;
  const IntMatrix skew = s.entries() - s.entries().transpose();
  RatMatrix d(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a(p * sym(i, j));
      const Rational b(bscale * skew(i, j));
      d(i, j) = a;
      d(n + i, n + j) = a;
      d(i, n + j) = -b;
      d(n + i, j) = b;
    }
  const Inertia in = inertia(std::move(d));
  out.value = in.signature() / 2;
  out.nullity = in.zero / 2;
  return out;
}

// ---------------------------------------------------------------------------
// Real root isolation

namespace {

int sign_of(const Rational& q) { return sgn(q); }

class SturmSequence {
 public:
  explicit SturmSequence(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    seq_.push_back(p);
    LaurentPoly d = derivative(p);
    while (!d.is_zero()) {
      seq_.push_back(d);
      const auto& a = seq_[seq_.size() - 2];
      LaurentPoly r = -polynomial_divmod(a, d).second;
      // Positive rescaling keeps sign variations and tames coefficients.
      if (!r.is_zero()) {
        LaurentPoly prim = primitive_associate(r).shifted(r.low());
        if (sgn(r.leading()) != sgn(prim.leading())) prim = -prim;
        r = prim;
      }
      d = r;
    }
  }

  std::size_t variations(const Rational& x) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& f : seq_) {
      int sg = sign_of(f.eval(x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++v;
      last = sg;
    }
    return v;
  }

 private:
  std::vector<LaurentPoly> seq_;
};

// A split point of (a, b) at which p does not vanish.
Rational split_point(const LaurentPoly& p, const Rational& a, const Rational& b) {
  for (long den = 2;; ++den)
    for (long num = den / 2; num >= 1; --num) {
      for (long k : {num, den - num}) {
        Rational m = a + (b - a) * make_rational(k, den);
        if (p.eval(m) != 0) return m;
      }
    }
}

void isolate(const LaurentPoly& p, const SturmSequence& sturm, const Rational& a, const Rational& b,
             std::vector<IsolatingInterval>& out) {
  const std::size_t count = sturm.variations(a) - sturm.variations(b);
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  const Rational m = split_point(p, a, b);
  isolate(p, sturm, m, b, out);
  isolate(p, sturm, a, m, out);
}

}  // namespace

std::size_t sturm_count(const LaurentPoly& p, const Rational& a, const Rational& b) {
  if (p.eval(a) == 0 || p.eval(b) == 0) throw DomainError("sturm_count: endpoint is a root");
  SturmSequence sturm(p);
  return sturm.variations(a) - sturm.variations(b);
}

std::vector<IsolatingInterval> isolate_real_roots(const LaurentPoly& p, const Rational& a, const Rational& b) {
  if (p.eval(a) == 0 || p.eval(b) == 0) throw DomainError("isolate_real_roots: endpoint is a root");
  std::vector<IsolatingInterval> out;
  if (p.span() <= 0 && p.low() == 0) return out;  // nonzero constant
  SturmSequence sturm(p);
  isolate(p, sturm, a, b, out);
  return out;
}

IsolatingInterval bisect(const LaurentPoly& p, const IsolatingInterval& iv) {
  if (iv.lo == iv.hi) return iv;
  const Rational m = (iv.lo + iv.hi) / 2;
  const int sm = sign_of(p.eval(m));
  if (sm == 0) return {m, m};
  if (sign_of(p.eval(iv.lo)) != sm) return {iv.lo, m};
  return {m, iv.hi};
}

LaurentPoly squarefree_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const LaurentPoly d = derivative(p);
  if (d.is_zero()) return primitive_associate(p).shifted(p.low());
  const LaurentPoly q = polynomial_divmod(p, polynomial_gcd(p, d)).first;
  return primitive_associate(q).shifted(q.low());
}

LaurentPoly jump_polynomial(const SeifertMatrix& s) {
  return squarefree_part(trace_polynomial(alexander_polynomial(s).representative()));
}

std::vector<IsolatingInterval> jump_locus(const SeifertMatrix& s) {
  const LaurentPoly p = jump_polynomial(s);
  if (p.eval(2) == 0 || p.eval(-2) == 0)
    throw std::logic_error("jump_locus: Alexander polynomial vanishes at t = +-1");
  return isolate_real_roots(p, -2, 2);
}

// ---------------------------------------------------------------------------
// Signature function

CirclePoint circle_point_with_trace_in(const Rational& lo, const Rational& hi) {
  if (!(lo < hi) || hi > 2 || lo < -2) throw DomainError("circle_point_with_trace_in: bad range");
  auto trace_at = [](const Rational& s) -> Rational {
    const Rational s2 = s * s;
    return 2 * (1 - s2) / (1 + s2);
  };
  auto inside = [&](const Rational& x) { return lo < x && x < hi; };
  // trace_at decreases from 2 (s = 0) towards -2 (s -> infinity).
  Rational s_hi = 1;
  while (trace_at(s_hi) >= hi) s_hi *= 2;
  if (inside(trace_at(s_hi))) return CirclePoint::from_parameter(s_hi);
  Rational s_lo = s_hi == 1 ? Rational(0) : s_hi / 2;
  while (true) {
    const Rational mid = (s_lo + s_hi) / 2;
    const Rational x = trace_at(mid);
    if (inside(x)) return CirclePoint::from_parameter(mid);
    if (x >= hi)
      s_lo = mid;
    else
      s_hi = mid;
  }
}

bool SignatureFunction::identically_zero() const {
  return std::all_of(arc_values_.begin(), arc_values_.end(), [](long v) { return v == 0; });
}

HermitianSignature SignatureFunction::value_at_trace(const Rational& x) const {
  if (x > 2 || x < -2) throw DomainError("value_at_trace: trace outside [-2, 2]");
  HermitianSignature out;
  if (x == 2) {
    out.degenerate = true;
    return out;
  }
  std::size_t arc = 0;
  for (std::size_t j = 0; j < jumps_.size(); ++j) {
    IsolatingInterval iv = jumps_[j];
    while (iv.contains(x) && iv.lo != iv.hi) {
      if (poly_.eval(x) == 0) {
        out.value = (arc_values_[j] + arc_values_[j + 1]) / 2;
        out.averaged = true;
        return out;
      }
      iv = bisect(poly_, iv);
    }
    if (iv.lo == iv.hi && iv.lo == x) {
      out.value = (arc_values_[j] + arc_values_[j + 1]) / 2;
      out.averaged = true;
      return out;
    }
    if (iv.hi <= x || (iv.lo == iv.hi && iv.lo < x)) break;  // this root lies below x
    arc = j + 1;
  }
  out.value = arc_values_[arc];
  return out;
}

SignatureFunction signature_function(const SeifertMatrix& s) {
  SignatureFunction f;
  f.poly_ = jump_polynomial(s);
  f.jumps_ = s.size() == 0 ? std::vector<IsolatingInterval>{} : isolate_real_roots(f.poly_, -2, 2);
  auto& jumps = f.jumps_;
  const std::size_t k = jumps.size();
  for (std::size_t arc = 0; arc <= k; ++arc) {
    // Open trace range of the arc, free of roots.
    auto bounds = [&]() -> std::pair<Rational, Rational> {
      Rational hi = arc == 0 ? Rational(2) : jumps[arc - 1].lo;
      Rational lo = arc == k ? Rational(-2) : jumps[arc].hi;
      return {lo, hi};
    };
    auto [lo, hi] = bounds();
    while (!(lo < hi)) {
      if (arc > 0) jumps[arc - 1] = bisect(f.poly_, jumps[arc - 1]);
      if (arc < k) jumps[arc] = bisect(f.poly_, jumps[arc]);
      std::tie(lo, hi) = bounds();
    }
    const Rational mid = (lo + hi) / 2;
    const long first = hermitian_signature_at(s, circle_point_with_trace_in(lo, mid)).value;
    const long second = hermitian_signature_at(s, circle_point_with_trace_in(mid, hi)).value;
    if (first != second)
      throw ArcConstancyError("signature differs inside arc " + std::to_string(arc) + ": " +
                              std::to_string(first) + " vs " + std::to_string(second));
    f.arc_values_.push_back(first);
  }
  return f;
}

// ---------------------------------------------------------------------------
// rho

namespace {

constexpr mpfr_prec_t kBits = 256;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kBits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

// arccos(y) / pi with y rounded in `dir_in` and the result rounded in `dir_out`.
// Rational values of x/2 = cos(q pi) with q rational are 0, +-1/2, +-1
// (Niven); there arccos(x/2)/pi is known exactly.
std::optional<Rational> exact_normalized_arccos(const Rational& x) {
  if (x == 2) return Rational(0);
  if (x == 1) return make_rational(1, 3);
  if (x == 0) return make_rational(1, 2);
  if (x == -1) return make_rational(2, 3);
  if (x == -2) return Rational(1);
  return std::nullopt;
}

Rational normalized_arccos(const Rational& x, mpfr_rnd_t up_or_down) {
  if (auto exact = exact_normalized_arccos(x)) return *exact;
  const bool want_upper = up_or_down == MPFR_RNDU;
  Mpfr y, acos_y, pi, out;
  // arccos is decreasing: an upper bound needs y rounded down.
  mpfr_set_q(y.get(), Rational(x / 2).get_mpq_t(), want_upper ? MPFR_RNDD : MPFR_RNDU);
  if (mpfr_cmp_si(y.get(), 1) > 0) mpfr_set_si(y.get(), 1, MPFR_RNDN);
  if (mpfr_cmp_si(y.get(), -1) < 0) mpfr_set_si(y.get(), -1, MPFR_RNDN);
  mpfr_acos(acos_y.get(), y.get(), want_upper ? MPFR_RNDU : MPFR_RNDD);
  mpfr_const_pi(pi.get(), want_upper ? MPFR_RNDD : MPFR_RNDU);
  mpfr_div(out.get(), acos_y.get(), pi.get(), want_upper ? MPFR_RNDU : MPFR_RNDD);
  return out.to_rational();
}

}  // namespace

std::pair<Rational, Rational> normalized_arccos_enclosure(const Rational& x_lo, const Rational& x_hi) {
  return {normalized_arccos(x_hi, MPFR_RNDD), normalized_arccos(x_lo, MPFR_RNDU)};
}

RhoValue RhoValue::exact(const Rational& v) {
  RhoValue r;
  r.value_ = v;
  r.constant_ = v;
  return r;
}

RhoValue RhoValue::with_error(const Rational& v, const Rational& error) {
  if (error < 0) throw DomainError("RhoValue: negative error bound");
  RhoValue r = exact(v);
  r.error_ = error;
  r.opaque_error_ = error;
  return r;
}

Rational RhoValue::abs_lower() const {
  if (lower() > 0) return lower();
  if (upper() < 0) return -upper();
  return 0;
}

Rational RhoValue::abs_upper() const { return std::max(abs(lower()), abs(upper())); }

void RhoValue::recompute() {
  Rational lo = constant_, hi = constant_;
  for (const auto& term : terms_) {
    auto [a, b] = normalized_arccos_enclosure(term.interval.lo, term.interval.hi);
    if (term.coefficient >= 0) {
      lo += term.coefficient * a;
      hi += term.coefficient * b;
    } else {
      lo += term.coefficient * b;
      hi += term.coefficient * a;
    }
  }
  value_ = (lo + hi) / 2;
  error_ = (hi - lo) / 2 + opaque_error_;
}

RhoValue RhoValue::refined(const Rational& precision) const {
  if (precision <= 0) throw DomainError("precision must be positive");
  RhoValue r = *this;
  r.recompute();
  while (r.error_ > precision) {
    // Bisect the widest refinable contribution.
    std::optional<std::size_t> widest;
    Rational widest_width = -1;
    for (std::size_t i = 0; i < r.terms_.size(); ++i) {
      const auto& term = r.terms_[i];
      if (!term.poly || term.interval.lo == term.interval.hi) continue;
      auto [a, b] = normalized_arccos_enclosure(term.interval.lo, term.interval.hi);
      Rational w = (b - a) * std::abs(term.coefficient);
      if (w > widest_width) {
        widest_width = w;
        widest = i;
      }
    }
    if (!widest) throw std::logic_error("RhoValue::refined: requested precision is below what the enclosure can reach");
    auto& term = r.terms_[*widest];
    // Several bisections per pass; each recompute costs a few MPFR calls.
    for (int step = 0; step < 8; ++step) term.interval = bisect(*term.poly, term.interval);
    r.recompute();
  }
  return r;
}

RhoValue operator+(const RhoValue& a, const RhoValue& b) {
  RhoValue r;
  r.value_ = a.value_ + b.value_;
  r.error_ = a.error_ + b.error_;
  r.constant_ = a.constant_ + b.constant_;
  r.opaque_error_ = a.opaque_error_ + b.opaque_error_;
  r.terms_ = a.terms_;
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  return r;
}

RhoValue operator*(long k, const RhoValue& v) {
  RhoValue r = v;
  r.value_ *= k;
  r.error_ *= std::abs(k);
  r.opaque_error_ *= std::abs(k);
  r.constant_ *= k;
  for (auto& term : r.terms_) term.coefficient *= k;
  if (k == 0) r.terms_.clear();
  return r;
}

RhoValue rho_integral(const SeifertMatrix& s, const Rational& precision) {
  if (precision <= 0) throw DomainError("precision must be positive");
  const SignatureFunction f = signature_function(s);
  const auto& v = f.arc_values();
  const auto poly = std::make_shared<const LaurentPoly>(f.jump_polynomial());
  auto pin_exact = [&](IsolatingInterval iv) {
    for (long x : {-1, 0, 1})
      if (iv.contains(x) && poly->eval(x) == 0) return IsolatingInterval{Rational(x), Rational(x)};
    return iv;
  };
  // rho = v_k + sum_i (v_{i-1} - v_i) theta_i / pi over the upper semicircle.
  RhoValue r;
  r.constant_ = v.back();
  for (std::size_t i = 0; i < f.jumps().size(); ++i) {
    const long c = v[i] - v[i + 1];
    if (c == 0) continue;
    r.terms_.push_back({c, pin_exact(f.jumps()[i]), poly});
  }
  return r.refined(precision);
}

RhoValue rho_of_connected_sum(const std::vector<SeifertMatrix>& knots, const Rational& precision) {
  if (precision <= 0) throw DomainError("precision must be positive");
  RhoValue total = RhoValue::exact(0);
  if (knots.empty()) return total;
  const Rational each = precision / static_cast<long>(knots.size());
  for (const auto& k : knots) total = total + rho_integral(k, each);
  return total;
}

}  // namespace slicebound
