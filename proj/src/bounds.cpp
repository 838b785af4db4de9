#include "slicebound/bounds.hpp"

#include <algorithm>

namespace slicebound {

bool rho_betti_bound(const RhoValue& rho, std::size_t beta2) { return rho.abs_lower() <= Rational(2 * beta2); }

std::size_t surface_bordism_betti(std::size_t beta2_w, std::size_t g, bool character_nontrivial) {
  if (g == 0 && !character_nontrivial)
    throw DomainError("surface_bordism_betti: needs g >= 1 or a nontrivial character");
  if (beta2_w + 2 * g == 0) throw DomainError("surface_bordism_betti: beta2 would be negative");
  return beta2_w + 2 * g - 1;
}

std::size_t slice_bordism_betti(std::size_t g_h) { return 2 * g_h; }

std::optional<long> lee_wilczynski(long beta2_x, long sign_x, long self_int, long d) {
  if (d < 1) throw DomainError("lee_wilczynski: d must be positive");
  if (beta2_x < 0) throw DomainError("lee_wilczynski: beta2 must be nonnegative");
  Rational best = 0;
  for (long j = 0; j < d; ++j) {
    const Rational term = abs(Rational(sign_x) - make_rational(2 * j * (d - j), d * d) * self_int);
    best = std::max(best, term);
  }
  const Rational rhs = best - beta2_x;
  if (rhs <= 0) return std::nullopt;
  return ceil(rhs / 2).get_si();
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes:
      return "true";
    case Decision::no:
      return "false";
    case Decision::undecidable:
      return "undecidable";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::certified:
      return "certified";
    case Outcome::refuted:
      return "refuted";
    case Outcome::undecidable:
      return "undecidable";
  }
  return "?";
}

Decision decide_at_least(const Rational& lhs_lo, const Rational& lhs_hi, const Rational& rhs_lo,
                         const Rational& rhs_hi) {
  if (lhs_lo >= rhs_hi) return Decision::yes;
  if (lhs_hi < rhs_lo) return Decision::no;
  return Decision::undecidable;
}

Rational PatternInterval::min_abs() const {
  if (lo <= 0 && hi >= 0) return 0;
  return std::min(abs(lo), abs(hi));
}

std::vector<PatternInterval> enumerate_patterns(const Rational& c, std::size_t g, const RhoValue& rho_j,
                                                const RhoValue& rho_jp) {
  if (g > kMaxEnumerationGenus) throw DomainError("enumerate_patterns: g too large for exhaustive enumeration");
  std::vector<PatternInterval> out;
  const std::uint64_t total = std::uint64_t{1} << (2 * g);
  out.reserve(total - 1);
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    PatternInterval p;
    p.n.resize(g);
    p.m.resize(g);
    long a = 0, b = 0;
    for (std::size_t i = 0; i < g; ++i) {
      p.n[i] = static_cast<int>((bits >> i) & 1U);
      p.m[i] = static_cast<int>((bits >> (g + i)) & 1U);
      a += p.n[i];
      b += p.m[i];
    }
    const RhoValue center = a * rho_j + (-b) * rho_jp;
    p.lo = center.lower() - c;
    p.hi = center.upper() + c;
    out.push_back(std::move(p));
  }
  return out;
}

Rational two_case_bound(const Rational& c, std::size_t g, const Rational& rho_j, const Rational& rho_jp) {
  const Rational no_m = abs(rho_j) - c;
  const Rational some_m = abs(rho_jp) - Rational(g) * abs(rho_j) - c;
  return std::min(no_m, some_m);
}

namespace {

std::string dec(const Rational& q) { return to_decimal(q, 6); }

std::string enclosure(const Rational& lo, const Rational& hi) {
  return lo == hi ? dec(lo) : "[" + dec(lo) + ", " + dec(hi) + "]";
}

const char* const kRuleI = "condition (i)";
const char* const kRuleII = "condition (ii)";
const char* const kRulePatterns = "pattern minimum";

FiredRule rule_i(const Rational& c, std::size_t g, const RhoValue& rho_j) {
  const Rational rhs = c + 4 * g;
  FiredRule r{kRuleI, "|rho(J)| >= C + 4g", "", Decision::undecidable};
  r.instantiation = "|rho(J)| in " + enclosure(rho_j.abs_lower(), rho_j.abs_upper()) + " >= " + dec(rhs);
  r.holds = decide_at_least(rho_j.abs_lower(), rho_j.abs_upper(), rhs, rhs);
  return r;
}

FiredRule rule_ii(const Rational& c, std::size_t g, const RhoValue& rho_j, const RhoValue& rho_jp) {
  const Rational base = c + 4 * g;
  const Rational rhs_lo = base + Rational(g) * rho_j.abs_lower();
  const Rational rhs_hi = base + Rational(g) * rho_j.abs_upper();
  FiredRule r{kRuleII, "|rho(J')| >= C + 4g + g |rho(J)|", "", Decision::undecidable};
  r.instantiation = "|rho(J')| in " + enclosure(rho_jp.abs_lower(), rho_jp.abs_upper()) + " >= " +
                    enclosure(rhs_lo, rhs_hi);
  r.holds = decide_at_least(rho_jp.abs_lower(), rho_jp.abs_upper(), rhs_lo, rhs_hi);
  return r;
}

struct PatternSummary {
  FiredRule rule;
  std::size_t count = 0;
  Rational minimum;
};

PatternSummary rule_patterns(const Rational& c, std::size_t g, const RhoValue& rho_j, const RhoValue& rho_jp) {
  const auto patterns = enumerate_patterns(c, g, rho_j, rho_jp);
  // Certified lower bound and an upper bound for the true minimum.
  Rational lower, upper;
  bool first = true;
  for (const auto& p : patterns) {
    const Rational center_lo = p.lo + c, center_hi = p.hi - c;
    Rational worst = std::max(abs(center_lo), abs(center_hi)) - c;
    if (worst < 0) worst = 0;
    const Rational best = p.min_abs();
    if (first || best < lower) lower = best;
    if (first || worst < upper) upper = worst;
    first = false;
  }
  const Rational target = 4 * g;
  PatternSummary s;
  s.count = patterns.size();
  s.minimum = lower;
  s.rule = FiredRule{kRulePatterns,
                     "min over nonzero (n, m) in {0,1}^2g of |rho(M', phi') + sum n_i rho(J) - sum m_i rho(J')| >= 4g "
                     "for all |rho(M', phi')| <= C",
                     "", Decision::undecidable};
  s.rule.instantiation = "min over " + std::to_string(s.count) + " patterns in " + enclosure(lower, upper) +
                         " >= " + dec(target);
  s.rule.holds = decide_at_least(lower, upper, target, target);
  return s;
}

}  // namespace

BoundReport certify_family_genus(const Rational& c, std::size_t g, const RhoValue& rho_j, const RhoValue& rho_jp) {
  if (g == 0) throw DomainError("certify_family_genus: g must be positive");
  if (c <= 0) throw DomainError("certify_family_genus: C must be positive");
  if (g > kMaxEnumerationGenus) throw DomainError("certify_family_genus: g too large for exhaustive enumeration");
  BoundReport r;
  r.c = c;
  r.g = g;
  r.rho_j = rho_j;
  r.rho_jp = rho_jp;
  r.conclusion = "no information";

  r.fired_rules.push_back(rule_i(c, g, rho_j));
  r.fired_rules.push_back(rule_ii(c, g, rho_j, rho_jp));
  for (const auto& rule : r.fired_rules) {
    if (rule.holds == Decision::no) {
      r.outcome = Outcome::refuted;
      r.diagnostic = rule.name + " fails: " + rule.instantiation;
      return r;
    }
  }
  for (const auto& rule : r.fired_rules) {
    if (rule.holds == Decision::undecidable) {
      r.outcome = Outcome::undecidable;
      r.diagnostic = rule.name + " undecidable at the current precision (" + rule.instantiation +
                     "); refine the rho enclosures";
      return r;
    }
  }

  auto summary = rule_patterns(c, g, rho_j, rho_jp);
  r.patterns_checked = summary.count;
  r.pattern_minimum = summary.minimum;
  r.fired_rules.push_back(summary.rule);
  switch (summary.rule.holds) {
    case Decision::yes:
      r.outcome = Outcome::certified;
      r.genus_lower_bound = g;
      r.conclusion = "g_*^h(K) >= " + std::to_string(g) + "; with the construction's upper bound g_*^s(K) <= " +
                     std::to_string(g) + ", g_*^h(K) = " + std::to_string(g);
      break;
    case Decision::no:
      r.outcome = Outcome::refuted;
      r.diagnostic = "pattern minimum below 4g: " + summary.rule.instantiation;
      break;
    case Decision::undecidable:
      r.outcome = Outcome::undecidable;
      r.diagnostic = "pattern minimum undecidable at the current precision; refine the rho enclosures";
      break;
  }
  return r;
}

bool recheck(const BoundReport& report) {
  for (const auto& rule : report.fired_rules) {
    FiredRule again;
    if (rule.name == kRuleI)
      again = rule_i(report.c, report.g, report.rho_j);
    else if (rule.name == kRuleII)
      again = rule_ii(report.c, report.g, report.rho_j, report.rho_jp);
    else if (rule.name == kRulePatterns)
      again = rule_patterns(report.c, report.g, report.rho_j, report.rho_jp).rule;
    else
      return false;
    if (again.holds != rule.holds || again.instantiation != rule.instantiation || again.anchor != rule.anchor)
      return false;
  }
  if (report.outcome == Outcome::certified) {
    if (report.fired_rules.size() != 3 || !report.genus_lower_bound || *report.genus_lower_bound != report.g)
      return false;
    return std::all_of(report.fired_rules.begin(), report.fired_rules.end(),
                       [](const FiredRule& r) { return r.holds == Decision::yes; });
  }
  return !report.genus_lower_bound.has_value();
}

std::string KnotDescription::to_string() const {
  return "#^" + std::to_string(copies) + " " + (seed.name().empty() ? std::string("seed") : seed.name());
}

JSequence build_J_sequence(const Rational& c, std::size_t g, const SeifertMatrix& seed, const Rational& precision) {
  if (g == 0) throw DomainError("build_J_sequence: g must be positive");
  if (c <= 0) throw DomainError("build_J_sequence: C must be positive");
  RhoValue rho = rho_integral(seed, precision);
  Rational prec = precision;
  const Rational floor_precision = make_rational(1, Integer("1000000000000000000000000000000"));
  while (rho.abs_lower() == 0 && rho.error_bound() > 0 && prec > floor_precision) {
    prec /= 1000000;
    try {
      rho = rho.refined(prec);
    } catch (const std::logic_error&) {
      break;
    }
  }
  if (rho.abs_lower() == 0) throw DomainError("build_J_sequence: rho of the seed is not certified nonzero");
  const Rational lo = rho.abs_lower(), hi = rho.abs_upper();
  const Rational base = c + 4 * g;
  const Integer k = std::max(Integer(1), ceil(base / lo));
  const Integer kp = std::max(Integer(1), ceil((base + Rational(g) * Rational(k) * hi) / lo));
  if (!k.fits_slong_p() || !kp.fits_slong_p()) throw DomainError("build_J_sequence: multiplicities overflow");
  JSequence out{{seed, k.get_ui(), k.get_si() * rho}, {seed, kp.get_ui(), kp.get_si() * rho}};
  return out;
}

}  // namespace slicebound
