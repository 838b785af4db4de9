#include "slicebound/construct.hpp"

namespace slicebound {

SeifertMatrix infected_seifert(const InfectionDescriptor& d) {
  if (d.winding != 0)
    throw DomainError("infected_seifert: winding number " + std::to_string(d.winding) +
                      " != 0 changes the Seifert form");
  return d.base;
}

void check_family_parameter(std::uint64_t n) {
  if (n < 2) throw DomainError("family: n must be at least 2");
  const Factorization f = factorize(n);
  if (f.prime_power)
    throw DomainError("family: n = " + std::to_string(n) + " is a prime power, so Phi_n(1) = " +
                      std::to_string(f.primes.begin()->first) + " != +-1 and Phi_n is not an Alexander polynomial");
  if (f.distinct() < 3)
    throw DomainError("family: n = " + std::to_string(n) +
                      " has fewer than three distinct prime factors (Casson-Gordon vanishing gate)");
}

Family build_family(const FamilyDescriptor& f) {
  if (f.g == 0) throw DomainError("family: g must be positive");
  check_family_parameter(f.n);
  Family out;
  out.descriptor = f;
  out.base = realize_alexander(cyclotomic(f.n)).renamed("K_s(" + std::to_string(f.n) + ")");
  const SeifertMatrix inverse = concordance_inverse(out.base);
  std::vector<SeifertMatrix> parts;
  const std::string axis = "[eta] generates A(K_s): Phi_" + std::to_string(f.n) + " irreducible";
  for (std::size_t i = 0; i < f.g; ++i) {
    parts.push_back(out.base);
    parts.push_back(inverse);
    if (f.j.copies > 0 && f.j.seed.size() > 0) out.ledger.push_back({2 * i, axis, f.j, 1});
    if (f.jp.copies > 0 && f.jp.seed.size() > 0) out.ledger.push_back({2 * i + 1, axis, f.jp, -1});
  }
  out.seifert = block_sum(parts).renamed("family(g=" + std::to_string(f.g) + ", n=" + std::to_string(f.n) + ")");
  return out;
}

MetabolizerCertificate verify_p3(const Family& family) {
  const std::size_t m = family.base.size();
  const std::size_t total = family.seifert.size();
  MetabolizerCertificate cert;
  for (std::size_t block = 0; block * 2 * m < total; ++block) {
    const std::size_t offset = block * 2 * m;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Integer> v(total);
      v[offset + i] = 1;
      v[offset + m + i] = 1;
      cert.basis.push_back(std::move(v));
    }
  }
  if (!metabolizer_check(family.seifert, cert))
    throw std::logic_error("verify_p3: diagonal metabolizer check failed for " + family.seifert.name());
  return cert;
}

std::vector<PatternInterval> rho_obstruction_set(const Family& family, const Rational& c) {
  if (family.ledger.empty()) return {};
  return enumerate_patterns(c, family.descriptor.g, family.descriptor.j.rho, family.descriptor.jp.rho);
}

}  // namespace slicebound
