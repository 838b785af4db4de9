#pragma once

// The example family K = #^g (K_s(eta, J) # -K_s(eta, J')) built on a knot
// K_s with Alexander polynomial Phi_n.
//
// Infection along an axis of winding number zero leaves the Seifert form
// unchanged, so the family is modeled by its Seifert matrix together with a
// ledger of the infections, which only enters through rho.

#include <string>
#include <vector>

#include "slicebound/alexmod.hpp"
#include "slicebound/bounds.hpp"

namespace slicebound {

struct InfectionDescriptor {
  SeifertMatrix base;
  /// Asserted: the axis class generates the Alexander module of the base
  /// (automatic when Delta_base is irreducible and [eta] != 0).
  std::string axis_class;
  SeifertMatrix infection_knot;
  long winding = 0;
};

/// The Seifert matrix of the base; throws DomainError unless winding == 0.
SeifertMatrix infected_seifert(const InfectionDescriptor& d);

struct FamilyDescriptor {
  std::size_t g = 0;
  std::uint64_t n = 0;
  KnotDescription j;
  KnotDescription jp;
};

/// Throws DomainError when n is a prime power (Phi_n(1) = p) or has fewer
/// than three distinct prime factors.
void check_family_parameter(std::uint64_t n);

struct LedgerEntry {
  /// Index of the summand K_s(eta, .) or -K_s(eta, .) in the connected sum.
  std::size_t summand = 0;
  std::string axis_class;
  KnotDescription infection;
  /// +1 for an infection by J, -1 for J' (carried by a mirrored summand).
  int sign = 1;
};

struct Family {
  FamilyDescriptor descriptor;
  SeifertMatrix base;     // K_s, realizing Phi_n
  SeifertMatrix seifert;  // block sum of g copies of (S_s + -S_s)
  std::vector<LedgerEntry> ledger;
};

Family build_family(const FamilyDescriptor& f);

/// Diagonal metabolizer of every S_s + -S_s block, checked integrally.
/// Throws std::logic_error if the check fails.
MetabolizerCertificate verify_p3(const Family& family);

/// The pattern intervals [-C, C] + sum n_i rho(J) - sum m_i rho(J'); empty
/// when the ledger is.
std::vector<PatternInterval> rho_obstruction_set(const Family& family, const Rational& c);

}  // namespace slicebound
