#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "quadrature.hpp"
#include "slicebound/signatures.hpp"

using namespace slicebound;
using slicebound::testing::catalog_sample;
using slicebound::testing::float_quadrature;
using slicebound::testing::random_seifert;

namespace {

const Rational kEps = make_rational(1, 1000000);

bool within(const RhoValue& r, const Rational& target, const Rational& tol) { return abs(r.value() - target) <= tol; }

}  // namespace

TEST_CASE("circle points lie on the unit circle") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-50, 50), e(1, 30);
  for (int i = 0; i < 50; ++i) {
    auto w = CirclePoint::from_parameter(make_rational(d(rng), e(rng)));
    CHECK(w.real() * w.real() + w.imag() * w.imag() == 1);
  }
  CHECK(CirclePoint::minus_one().real() == -1);
  CHECK(CirclePoint::one().trace() == 2);
}

TEST_CASE("hermitian_signature_at examples") {
  auto tref = catalog("trefoil");
  // H(-1) = 2(S + S^T) = [[-4, 2], [2, -4]] is negative definite.
  CHECK(hermitian_signature_at(tref, CirclePoint::minus_one()).value == -2);
  auto at_one = hermitian_signature_at(tref, CirclePoint::one());
  CHECK(at_one.value == 0);
  CHECK(at_one.degenerate);

  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-40, 40), e(1, 20);
  for (int i = 0; i < 30; ++i) {
    auto a = random_seifert(1, rng), b = random_seifert(2, rng);
    auto w = CirclePoint::from_parameter(make_rational(d(rng), e(rng)));
    CHECK(hermitian_signature_at(block_sum(a, b), w).value ==
          hermitian_signature_at(a, w).value + hermitian_signature_at(b, w).value);
  }
}

TEST_CASE("exact signatures agree with floating-point eigenvalues off the jump locus") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> theta(0.05, 3.1);
  for (const auto& s : catalog_sample()) {
    for (int i = 0; i < 20; ++i) {
      double th = theta(rng);
      Rational param(std::tan(th / 2));
      auto w = CirclePoint::from_parameter(param);
      auto exact = hermitian_signature_at(s, w);
      if (exact.nullity != 0) continue;
      double angle = std::atan2(w.imag().get_d(), w.real().get_d());
      CHECK(exact.value == slicebound::testing::float_signature(s, angle));
    }
  }
}

TEST_CASE("Sturm root isolation") {
  // (x - 1)(x + 1/2)(x - 3/2): three roots in (-2, 2).
  LaurentPoly p = (LaurentPoly::t() - LaurentPoly(1)) * (LaurentPoly::t() + LaurentPoly(make_rational(1, 2))) *
                  (LaurentPoly::t() - LaurentPoly(make_rational(3, 2)));
  CHECK(sturm_count(p, -2, 2) == 3);
  CHECK(sturm_count(p, 0, 2) == 2);
  auto ivs = isolate_real_roots(p, -2, 2);
  REQUIRE(ivs.size() == 3);
  CHECK(ivs[0].contains(make_rational(3, 2)));
  CHECK(ivs[1].contains(1));
  CHECK(ivs[2].contains(make_rational(-1, 2)));
  // x^2 - 2: bisection converges on sqrt(2).
  LaurentPoly q = LaurentPoly::t() * LaurentPoly::t() - LaurentPoly(2);
  auto iv = isolate_real_roots(q, 0, 2);
  REQUIRE(iv.size() == 1);
  for (int i = 0; i < 40; ++i) iv[0] = bisect(q, iv[0]);
  CHECK(iv[0].width() < make_rational(1, 1000000000));
  CHECK(iv[0].lo * iv[0].lo < 2);
  CHECK(iv[0].hi * iv[0].hi > 2);
  // x is not a unit here: x^3 - x has three roots, one at 0.
  LaurentPoly cubic = LaurentPoly::t() * q + LaurentPoly::t();
  CHECK(sturm_count(LaurentPoly::t() * LaurentPoly::t() * LaurentPoly::t() - LaurentPoly::t(), -2, 2) == 3);
  CHECK(squarefree_part(pow(LaurentPoly::t(), 2) * pow(LaurentPoly::t() - LaurentPoly(1), 3)) ==
        LaurentPoly::t() * (LaurentPoly::t() - LaurentPoly(1)));
  CHECK(sturm_count(cubic, make_rational(-1, 2), 2) == 2);
}

TEST_CASE("jump_locus examples") {
  auto tref = jump_locus(catalog("trefoil"));
  REQUIRE(tref.size() == 1);
  CHECK(tref[0].contains(1));
  CHECK(jump_locus(catalog("unknot")).empty());
  CHECK(jump_locus(catalog("figure-eight")).empty());
  // Phi_10: x^2 - x - 1, roots (1 +- sqrt 5)/2, both in (-2, 2).
  CHECK(jump_locus(catalog("torus(2,5)")).size() == 2);
}

TEST_CASE("signature_function examples") {
  auto tref = signature_function(catalog("trefoil"));
  CHECK(tref.arc_values() == std::vector<long>{0, -2});
  CHECK(tref.value_at_trace(make_rational(3, 2)).value == 0);
  CHECK(tref.value_at_trace(-2).value == -2);
  auto at_jump = tref.value_at_trace(1);
  CHECK(at_jump.averaged);
  CHECK(at_jump.value == -1);
  CHECK(tref.value_at_trace(2).degenerate);

  CHECK(signature_function(catalog("unknot")).identically_zero());
  CHECK(signature_function(catalog("figure-eight")).identically_zero());
  CHECK(signature_function(catalog("torus(2,5)")).arc_values() == std::vector<long>{0, -2, -4});
}

TEST_CASE("signature function invariants") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-60, 60), e(1, 25);
  std::vector<SeifertMatrix> knots = catalog_sample();
  for (int i = 0; i < 6; ++i) knots.push_back(random_seifert(1 + i % 3, rng));
  for (const auto& s : knots) {
    auto f = signature_function(s);  // throws on arc inconsistency
    CHECK(f.arc_values().size() == f.jumps().size() + 1);
    CHECK(f.arc_values().front() == 0);
    for (long v : f.arc_values()) CHECK(v % 2 == 0);
  }
  for (int i = 0; i < 50; ++i) {
    const auto& s = knots[static_cast<std::size_t>(i) % knots.size()];
    auto w = CirclePoint::from_parameter(make_rational(d(rng), e(rng)));
    CHECK(hermitian_signature_at(s, w).value == hermitian_signature_at(s, w.conjugate()).value);
  }
}

TEST_CASE("rho_integral examples") {
  auto tref = rho_integral(catalog("trefoil"), kEps);
  CHECK(tref.error_bound() <= kEps);
  CHECK(tref.lower() <= make_rational(-4, 3));
  CHECK(tref.upper() >= make_rational(-4, 3));

  auto unknot = rho_integral(catalog("unknot"), kEps);
  CHECK(unknot.value() == 0);
  CHECK(unknot.error_bound() == 0);

  for (long k = 1; k <= 4; ++k) {
    auto r = rho_integral(repeat(catalog("trefoil"), static_cast<std::size_t>(k)), kEps);
    CHECK(within(r, make_rational(-4 * k, 3), kEps));
  }
  // Symbolic form of the trefoil: -2 + 2 * arccos(x/2)/pi with x = 1.
  REQUIRE(tref.exact_form().size() == 1);
  CHECK(tref.exact_form()[0].coefficient == 2);
  CHECK(tref.constant() == -2);
  // arccos(1/2)/pi = 1/3 is rational, so the trefoil value is exact.
  CHECK(tref.value() == make_rational(-4, 3));
  CHECK(tref.error_bound() == 0);
  auto [lo, hi] = normalized_arccos_enclosure(make_rational(1, 2), make_rational(1, 2));
  CHECK(lo <= hi);
  CHECK(hi - lo < make_rational(1, 1000000000));
  CHECK(lo.get_d() == doctest::Approx(std::acos(0.25) / std::acos(-1.0)).epsilon(1e-12));
}

TEST_CASE("rho refinement shrinks the error bound") {
  auto coarse = rho_integral(catalog("torus(2,7)"), make_rational(1, 100));
  auto fine = coarse.refined(Rational(1) / Rational(1000000) / Rational(1000000));
  CHECK(fine.error_bound() <= Rational(1) / Rational(1000000) / Rational(1000000));
  CHECK(abs(fine.value() - coarse.value()) <= coarse.error_bound() + fine.error_bound());
}

TEST_CASE("rho_of_connected_sum") {
  auto tref = catalog("trefoil");
  auto two = rho_of_connected_sum({tref, tref}, kEps);
  CHECK(within(two, make_rational(-8, 3), kEps));
  auto direct = rho_integral(block_sum(tref, tref), kEps);
  CHECK(abs(two.value() - direct.value()) <= two.error_bound() + direct.error_bound());

  auto t7 = catalog("torus(2,7)");
  auto cancel = rho_of_connected_sum({t7, concordance_inverse(t7)}, kEps);
  CHECK(abs(cancel.value()) <= cancel.error_bound());

  auto none = rho_of_connected_sum({}, kEps);
  CHECK(none.value() == 0);
  CHECK(none.error_bound() == 0);
}

TEST_CASE("rho additivity and mirror antisymmetry") {
  std::mt19937 rng(6);
  auto sample = catalog_sample();
  std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
  for (int i = 0; i < 15; ++i) {
    const auto& a = sample[pick(rng)];
    const auto& b = sample[pick(rng)];
    auto ra = rho_integral(a, kEps), rb = rho_integral(b, kEps), rab = rho_integral(block_sum(a, b), kEps);
    CHECK(abs(rab.value() - ra.value() - rb.value()) <= ra.error_bound() + rb.error_bound() + rab.error_bound());
  }
  for (const auto& s : sample) {
    auto r = rho_integral(s, kEps), m = rho_integral(concordance_inverse(s), kEps);
    CHECK(abs(r.value() + m.value()) <= r.error_bound() + m.error_bound());
  }
}

TEST_CASE("rho agrees with floating-point quadrature on catalog knots") {
  for (const auto& s : catalog_sample()) {
    auto r = rho_integral(s, kEps);
    double q = float_quadrature(s, 100000);
    INFO(s.name());
    CHECK(std::abs(r.value().get_d() - q) <= 1e-3);
  }
}
