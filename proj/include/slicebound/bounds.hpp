#pragma once

// Genus lower bounds from rho-invariants, certified on RhoValue enclosures.
//
// An inequality between enclosures is decided only when the whole enclosure
// lies on one side; otherwise the answer is "undecidable at this precision".

#include <optional>
#include <string>
#include <vector>

#include "slicebound/signatures.hpp"

namespace slicebound {

/// False only when |rho| > 2 beta2 is certain from the enclosure.
bool rho_betti_bound(const RhoValue& rho, std::size_t beta2);

/// beta2 of the bordism built from an embedded genus-g surface:
/// beta2_W + 2g - 1.  Needs g >= 1 or a nontrivial character.
std::size_t surface_bordism_betti(std::size_t beta2_w, std::size_t g, bool character_nontrivial = false);

/// Betti budget 2 g_h of a genus-g_h surface.
std::size_t slice_bordism_betti(std::size_t g_h);

/// ceil(RHS / 2) with RHS = -beta2_X + max_{0 <= j < d} |sign_X - 2j(d-j)/d^2 * self_int|;
/// nullopt ("no information") when RHS <= 0.
std::optional<long> lee_wilczynski(long beta2_x, long sign_x, long self_int, long d);

enum class Decision { yes, no, undecidable };

std::string to_string(Decision d);

/// Truth of lhs >= rhs for the enclosures [lhs_lo, lhs_hi], [rhs_lo, rhs_hi].
Decision decide_at_least(const Rational& lhs_lo, const Rational& lhs_hi, const Rational& rhs_lo, const Rational& rhs_hi);

/// (n_1..n_g, m_1..m_g) in {0,1}^{2g} and the interval
/// [-C, C] + sum n_i rho(J) - sum m_i rho(J') built on the enclosures.
struct PatternInterval {
  std::vector<int> n;
  std::vector<int> m;
  Rational lo;
  Rational hi;
  /// min |x| over the interval.
  Rational min_abs() const;
};

inline constexpr std::size_t kMaxEnumerationGenus = 10;

/// All 2^{2g} - 1 nonzero patterns, in binary counting order.
std::vector<PatternInterval> enumerate_patterns(const Rational& c, std::size_t g, const RhoValue& rho_j,
                                                const RhoValue& rho_jp);

/// Lower bound on min |.| over patterns from the two cases of the argument:
/// all m_i = 0 gives |rho(J)| - C; some m_i != 0 gives
/// |rho(J')| - g |rho(J)| - C.  Exact inputs expected.
Rational two_case_bound(const Rational& c, std::size_t g, const Rational& rho_j, const Rational& rho_jp);

struct FiredRule {
  std::string name;
  /// The inequality being applied, in symbols.
  std::string anchor;
  /// The inequality with numbers substituted.
  std::string instantiation;
  Decision holds = Decision::undecidable;
};

enum class Outcome { certified, refuted, undecidable };

std::string to_string(Outcome o);

struct BoundReport {
  // Inputs, echoed.
  Rational c;
  std::size_t g = 0;
  RhoValue rho_j;
  RhoValue rho_jp;

  std::vector<FiredRule> fired_rules;
  Outcome outcome = Outcome::undecidable;
  /// Lower bound on the genus; nullopt means "no information".
  std::optional<std::size_t> genus_lower_bound;
  std::string conclusion;
  /// Why certification failed or what precision is missing.
  std::string diagnostic;
  std::size_t patterns_checked = 0;
  /// Certified lower bound on min |.| over all patterns, when enumerated.
  std::optional<Rational> pattern_minimum;
};

/// Decides conditions (i) |rho(J)| >= C + 4g and
/// (ii) |rho(J')| >= C + 4g + g |rho(J)|, then checks every pattern.
BoundReport certify_family_genus(const Rational& c, std::size_t g, const RhoValue& rho_j, const RhoValue& rho_jp);

/// Re-evaluates every fired rule from the echoed inputs.
bool recheck(const BoundReport& report);

struct KnotDescription {
  SeifertMatrix seed;
  std::size_t copies = 0;
  RhoValue rho;
  std::string to_string() const;
  /// Seifert matrix of the connected sum of `copies` seeds.
  SeifertMatrix materialize() const { return repeat(seed, copies); }
};

struct JSequence {
  KnotDescription j;
  KnotDescription jp;
};

/// Smallest multiplicities k, k' making #^k seed and #^k' seed satisfy (i)
/// and (ii) under the certified enclosure of rho(seed).
JSequence build_J_sequence(const Rational& c, std::size_t g, const SeifertMatrix& seed,
                           const Rational& precision = kDefaultPrecision);

}  // namespace slicebound
