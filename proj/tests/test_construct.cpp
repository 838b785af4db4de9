#include "doctest.h"
#include "slicebound/construct.hpp"

using namespace slicebound;

namespace {

const Rational kEps = make_rational(1, 1000000);

KnotDescription trefoils(std::size_t k) {
  auto tref = catalog("trefoil");
  return {tref, k, static_cast<long>(k) * rho_integral(tref, kEps)};
}

Family family(std::size_t g, std::uint64_t n) { return build_family({g, n, trefoils(14), trefoils(42)}); }

}  // namespace

TEST_CASE("infected_seifert") {
  auto ks = realize_alexander(cyclotomic(30));
  InfectionDescriptor d{ks, "eta", catalog("trefoil"), 0};
  CHECK(infected_seifert(d) == ks);
  CHECK(alexander_polynomial(infected_seifert(d)) == alexander_polynomial(ks));
  d.infection_knot = catalog("unknot");
  CHECK(infected_seifert(d) == ks);
  d.winding = 1;
  CHECK_THROWS_AS(infected_seifert(d), DomainError);
}

TEST_CASE("build_family examples") {
  auto f1 = family(1, 30);
  CHECK(f1.seifert.size() == 16);
  CHECK(alexander_polynomial(f1.seifert) == unit_normalize(pow(cyclotomic(30), 2)));
  CHECK(f1.ledger.size() == 2);
  CHECK(f1.ledger[0].sign == 1);
  CHECK(f1.ledger[1].sign == -1);
  CHECK(f1.ledger[1].infection.copies == 42);

  auto f2 = family(2, 30);
  CHECK(alexander_polynomial(f2.seifert) == unit_normalize(pow(cyclotomic(30), 4)));
  CHECK(min_generators(smith_form(present(f2.seifert))) == 4);

  CHECK_THROWS_WITH_AS(family(1, 9), doctest::Contains("prime power"), DomainError);
  CHECK_THROWS_WITH_AS(family(1, 6), doctest::Contains("three distinct"), DomainError);
  CHECK_THROWS_AS(family(0, 30), DomainError);
  CHECK_THROWS_AS(family(1, 1), DomainError);

  auto plain = build_family({1, 30, {catalog("unknot"), 0, RhoValue::exact(0)}, {catalog("unknot"), 0, RhoValue::exact(0)}});
  CHECK(plain.ledger.empty());
  CHECK(rho_obstruction_set(plain, 10).empty());
}

TEST_CASE("verify_p3") {
  auto c1 = verify_p3(family(1, 30));
  CHECK(c1.basis.size() == 8);
  auto c3 = verify_p3(family(3, 30));
  CHECK(c3.basis.size() == 24);
  CHECK(metabolizer_check(family(3, 30).seifert, c3));
}

TEST_CASE("rho_obstruction_set") {
  auto f = build_family({1, 30, trefoils(14), trefoils(42)});
  auto set = rho_obstruction_set(f, 10);
  REQUIRE(set.size() == 3);
  // Pattern (1, 0): [-10, 10] - 56/3 excludes (-4, 4).
  CHECK(set[0].n == std::vector<int>{1});
  CHECK(set[0].min_abs() >= 4);
  for (std::size_t g = 1; g <= 3; ++g) {
    auto fg = build_family({g, 30, trefoils(14), trefoils(42)});
    CHECK(rho_obstruction_set(fg, 10).size() == (std::size_t{1} << (2 * g)) - 1);
  }
}

TEST_CASE("family invariants") {
  for (std::uint64_t n : {30, 42, 60}) {
    for (std::size_t g = 1; g <= 3; ++g) {
      auto f = family(g, n);
      INFO("n = " << n << ", g = " << g);
      CHECK(alexander_polynomial(f.seifert) == unit_normalize(pow(cyclotomic(n), static_cast<unsigned>(2 * g))));
      auto module = smith_form(present(f.seifert));
      CHECK(min_generators(module) == 2 * g);
      for (std::size_t beta2 = 0; beta2 <= 2 * g + 1; ++beta2) CHECK(extension_gate(module, beta2) == (beta2 < 2 * g));
      CHECK_NOTHROW(verify_p3(f));
    }
  }
}

TEST_CASE("family signature function vanishes") {
  for (std::size_t g = 1; g <= 2; ++g) {
    auto f = family(g, 30);
    CHECK(signature_function(f.seifert).identically_zero());
  }
  CHECK(signature_function(family(1, 42).seifert).identically_zero());
}
