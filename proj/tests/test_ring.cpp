#include <random>

#include "doctest.h"
#include "slicebound/ring.hpp"

using namespace slicebound;

namespace {

LaurentPoly poly(std::initializer_list<long> coeffs_low_to_high, long low = 0) {
  std::vector<Rational> cs;
  for (long c : coeffs_low_to_high) cs.emplace_back(c);
  return LaurentPoly(low, cs);
}

// Oracle: Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d by schoolbook long
// division on machine integers, independent of the library's recursion.
std::vector<long> oracle_cyclotomic(int n, std::vector<std::vector<long>>& memo) {
  if (!memo[n].empty()) return memo[n];
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto den = oracle_cyclotomic(d, memo);
    std::size_t dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long c = num[k];
      q[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = q;
  }
  memo[n] = num;
  return num;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), coef(-6, 6), low(-3, 3), den(1, 4);
  std::vector<Rational> cs;
  int l = len(rng);
  for (int i = 0; i < l; ++i) cs.push_back(make_rational(coef(rng), den(rng)));
  return LaurentPoly(low(rng), cs);
}

}  // namespace

TEST_CASE("cyclotomic small cases") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(30) == poly({1, 1, 0, -1, -1, -1, 0, 1, 1}));
  CHECK(cyclotomic(9) == poly({1, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("cyclotomic agrees with the long-division oracle") {
  std::vector<std::vector<long>> memo(401);
  for (int n = 1; n <= 400; ++n) {
    auto expected = oracle_cyclotomic(n, memo);
    std::vector<Rational> cs(expected.begin(), expected.end());
    INFO("n = " << n);
    CHECK(cyclotomic(n) == LaurentPoly(0, cs));
  }
}

TEST_CASE("cyclotomic degree and product identity") {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    INFO("n = " << n);
    LaurentPoly phi = cyclotomic(n);
    CHECK(phi.high() == static_cast<long>(euler_phi(n)));
    LaurentPoly prod = 1;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == LaurentPoly::monomial(1, static_cast<long>(n)) - LaurentPoly(1));
  }
}

TEST_CASE("eval_at_one") {
  CHECK(eval_at_one(cyclotomic(9)) == 3);
  CHECK(eval_at_one(cyclotomic(30)) == 1);
  CHECK(eval_at_one(poly({-1, 1})) == 0);
}

TEST_CASE("factorization and prime powers") {
  auto f8 = factorize(8);
  CHECK(f8.prime_power);
  CHECK(f8.primes == std::map<std::uint64_t, unsigned>{{2, 3}});
  auto f30 = factorize(30);
  CHECK_FALSE(f30.prime_power);
  CHECK(f30.distinct() == 3);
  CHECK(f30.primes == std::map<std::uint64_t, unsigned>{{2, 1}, {3, 1}, {5, 1}});
  auto f2 = factorize(2);
  CHECK(f2.prime_power);
  CHECK(f2.primes == std::map<std::uint64_t, unsigned>{{2, 1}});
  CHECK_THROWS_AS(factorize(1), DomainError);
  CHECK_THROWS_AS(factorize(kFactorizationLimit + 1), DomainError);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(poly({1, -1, 1})));
  CHECK_FALSE(is_symmetric(poly({-1, 1, 1})));
  CHECK(is_symmetric(LaurentPoly(1)));
  CHECK(is_symmetric(poly({-1, 0, 1})));  // t^2 - 1 is anti-palindromic: p(1/t) = -t^-2 p(t)
  CHECK_THROWS_AS(is_symmetric(LaurentPoly()), DomainError);
}

TEST_CASE("unit_normalize") {
  CHECK(unit_normalize(poly({-1, 1, -1}, -1)).representative() == poly({1, -1, 1}));
  CHECK(unit_normalize(LaurentPoly::monomial(1, 5)).representative() == LaurentPoly(1));
  CHECK(unit_normalize(poly({-3, 3})).representative() == poly({-3, 3}));
  CHECK_THROWS_AS(unit_normalize(LaurentPoly()), DomainError);
}

TEST_CASE("unit_normalize is idempotent and constant on orbits") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> shift(-10, 10), sign(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    UnitClass c = unit_normalize(p);
    CHECK(unit_normalize(c.representative()) == c);
    LaurentPoly q = p.shifted(shift(rng));
    if (sign(rng) != 0) q = -q;
    CHECK(unit_normalize(q) == c);
  }
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("Euclidean division and gcd") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.span() < b.span());
    auto bz = extended_gcd(a, b);
    CHECK(bz.u * a + bz.v * b == bz.g);
    CHECK(divides(bz.g, a));
    CHECK(divides(bz.g, b));
  }
  CHECK(gcd(cyclotomic(6) * cyclotomic(10), cyclotomic(6) * cyclotomic(15)) == cyclotomic(6));
}

TEST_CASE("trace polynomial") {
  CHECK(trace_polynomial(poly({1, -1, 1})) == poly({-1, 1}));   // x - 1
  CHECK(trace_polynomial(poly({-1, 3, -1})) == poly({3, -1}));  // -(x - 3)
  CHECK(trace_polynomial(LaurentPoly(1)) == LaurentPoly(1));
  CHECK_THROWS_AS(trace_polynomial(poly({1, 1})), DomainError);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(make_rational(-4, 3), 4) == "-1.3333");
  CHECK(to_decimal(make_rational(2, 3), 2) == "0.67");
  CHECK(to_decimal(Rational(0), 3) == "0.000");
  CHECK(to_decimal(make_rational(1, 200), 2) == "0.01");
}
