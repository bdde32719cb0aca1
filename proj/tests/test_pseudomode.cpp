#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steppot/bounds.hpp"
#include "steppot/fd_oracle.hpp"
#include "steppot/pseudomode.hpp"
#include "test_oracles.hpp"

using namespace steppot;
using doctest::Approx;

namespace {
const StepPotential kModel{{0.0, 1.0}, {0.0, -1.0}};
const StepPotential kTilted{{1.0, 1.0}, {0.0, -1.0}};  // Re-asymmetric variant
const Interaction kNone{};

double quadrature_norm2(const PseudomodeCoeffs& c) {
  const double span_minus = 60.0 / c.k.re_k_minus;
  const double span_plus = 60.0 / c.k.re_k_plus;
  const double osc = 3.14159265358979323846 /
                     (2.0 * std::max(1.0, std::max(std::abs(c.k.k_plus), std::abs(c.k.k_minus))));
  const auto density = [&](double x) { return std::norm(pseudomode_eval(c, x)); };
  return test_oracles::adaptive_quadrature(density, -span_minus, 0.0, 1e-13, osc) +
         test_oracles::adaptive_quadrature(density, 0.0, span_plus, 1e-13, osc);
}

double closed_form_norm2(const PseudomodeCoeffs& c) {
  return (std::norm(c.n1) + std::norm(c.n2)) / (2.0 * c.k.re_k_minus) +
         (c.n1 * std::conj(c.n2) / c.k.k_minus).real() +
         (std::norm(c.p1) + std::norm(c.p2)) / (2.0 * c.k.re_k_plus) +
         (c.p1 * std::conj(c.p2) / c.k.k_plus).real();
}

}  // namespace

TEST_CASE("pseudomode_coeffs: frozen values for the step model") {
  const auto mid = pseudomode_coeffs(kModel, kNone, SpectralPoint{5.0, 0.0});
  CHECK(mid.n2 == cplx{-1.0, 0.0});
  CHECK(mid.p2 == cplx{1.0, 0.0});

  const auto c = pseudomode_coeffs(kModel, kNone, SpectralPoint{0.0, 0.0});
  CHECK(std::abs(c.n1 - cplx{1.0, 2.0}) < 1e-14);
  const auto [continuity, jump] = check_domain_conditions(c);
  CHECK(continuity < 1e-14);
  CHECK(jump < 1e-14);
}

TEST_CASE("pseudomode_coeffs: degenerate imaginary part flags a zero function") {
  const auto c = pseudomode_coeffs(StepPotential{{0.5, 0.3}, {-0.2, 0.3}}, kNone,
                                   SpectralPoint{-1.0, 0.3});
  CHECK(c.degenerate_im_v);
  CHECK(c.n2 == cplx{0.0, 0.0});
  CHECK(c.p2 == cplx{0.0, 0.0});
  CHECK(std::abs(c.n1) == 0.0);
  CHECK(std::abs(c.p1) == 0.0);
}

TEST_CASE("pseudomode_coeffs: eigenvalue hit") {
  CHECK_THROWS_AS(pseudomode_coeffs(kModel, Interaction{{-1.0, 0.0}}, SpectralPoint{0.75, 0.0}),
                  EigenvalueHitError);
}

TEST_CASE("pseudomode_eval: boundary value and decay") {
  const auto c = pseudomode_coeffs(kModel, kNone, SpectralPoint{0.0, 0.0});
  CHECK(pseudomode_eval(c, 0.0) == c.p1 + c.p2);
  CHECK(std::abs((c.p1 + c.p2) - (c.n1 + c.n2)) < 1e-14);
  CHECK(std::abs(pseudomode_eval(c, 1.0)) < std::abs(c.p1) + std::abs(c.p2));
  const cplx direct = c.p1 * std::exp(-c.k.k_plus) + c.p2 * std::exp(-std::conj(c.k.k_plus));
  CHECK(std::abs(pseudomode_eval(c, 1.0) - direct) == 0.0);
  CHECK(std::abs(pseudomode_eval(c, 40.0)) < 1e-10);
}

TEST_CASE("domain conditions hold for random constructed coefficients") {
  test_oracles::Rng rng(606);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const StepPotential pot{rng.box(-2, 2), rng.box(-2, 2)};
    const Interaction inter{trial % 2 ? rng.box(-2, 2) : cplx{0, 0}};
    try {
      const auto c = pseudomode_coeffs(pot, inter, SpectralPoint{rng.box(-6, 6)});
      const auto [continuity, jump] = check_domain_conditions(c);
      REQUIRE(continuity < 1e-12);
      REQUIRE(jump < 1e-10);
      ++checked;
    } catch (const Error&) {
      continue;
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("domain conditions respond linearly to perturbation") {
  auto c = pseudomode_coeffs(kModel, kNone, SpectralPoint{3.0, 0.2});
  const double scale = std::max({std::abs(c.n1), std::abs(c.n2), std::abs(c.p1), std::abs(c.p2)});
  c.n1 += 1.0;
  const auto [continuity, jump] = check_domain_conditions(c);
  CHECK(continuity == Approx(1.0 / std::max(scale, std::abs(c.n1))).epsilon(0.05));

  // alpha-coefficients tested against the interaction-free jump formula
  const Interaction delta{{0.4, -0.3}};
  auto cd = pseudomode_coeffs(kModel, delta, SpectralPoint{3.0, 0.2});
  const cplx boundary = cd.p1 + cd.p2;
  cd.alpha = cplx{0, 0};
  const auto [cont2, jump2] = check_domain_conditions(cd);
  const double scale2 =
      std::max({std::abs(cd.n1), std::abs(cd.n2), std::abs(cd.p1), std::abs(cd.p2)});
  CHECK(cont2 < 1e-13);
  CHECK(jump2 == Approx(std::abs(delta.alpha * boundary) / scale2).epsilon(1e-6));
}

TEST_CASE("closed-form norm agrees with adaptive quadrature") {
  // the validation gate for the cross-term algebra
  struct Case { StepPotential pot; cplx alpha; cplx z; };
  const std::vector<Case> cases{
      {kModel, {0, 0}, {25.0, 0.0}},
      {kModel, {0, 0}, {10.0, 0.5}},
      {kModel, {0.0, 0.5}, {25.0, -0.3}},
      {kModel, {-2.0, 0.0}, {30.0, 0.3}},
      {kTilted, {0, 0}, {20.0, -0.2}},
      {StepPotential{{2.0, 3.0}, {0.0, -1.0}}, {1.0, 0.5}, {15.0, 1.0}},
      {StepPotential{{2.0, 3.0}, {0.0, -1.0}}, {0, 0}, {-4.0, 0.8}},
  };
  for (const auto& tc : cases) {
    const auto c = pseudomode_coeffs(tc.pot, Interaction{tc.alpha}, SpectralPoint{tc.z});
    const double closed = closed_form_norm2(c);
    const double quad = quadrature_norm2(c);
    REQUIRE(closed == Approx(quad).epsilon(1e-10));
  }
}

TEST_CASE("quotient_exact: frozen value at tau = 100") {
  const double q = pseudomode_quotient_exact(kModel, kNone, SpectralPoint{100.0, 0.0});
  CHECK(q == Approx(0.005).epsilon(0.02));
  CHECK(q == Approx(0.0049997813).epsilon(1e-6));
}

TEST_CASE("quotient_exact: degenerate potential is rejected") {
  CHECK_THROWS_AS(pseudomode_quotient_exact(StepPotential{{1, 0}, {0, 0}}, kNone,
                                            SpectralPoint{10.0, 0.0}),
                  DegenerateImVError);
}

TEST_CASE("quotient_asymptotic: printed values and reciprocity") {
  CHECK(pseudomode_quotient_asymptotic(kModel, kNone, SpectralPoint{100.0, 0.0}) == Approx(0.005));
  CHECK(pseudomode_quotient_asymptotic(kModel, kNone, SpectralPoint{100.0, 0.5}) ==
        Approx(0.00375));
  test_oracles::Rng rng(2210);
  for (int trial = 0; trial < 200; ++trial) {
    const StepPotential pot{rng.box(-2, 2), rng.box(-2, 2)};
    if (pot.is_im_constant()) continue;
    const double lo = std::min(pot.v_plus.imag(), pot.v_minus.imag());
    const double hi = std::max(pot.v_plus.imag(), pot.v_minus.imag());
    const SpectralPoint z{rng.uniform(1.0, 1e4), lo + (hi - lo) * rng.uniform(0.05, 0.95)};
    const Interaction inter{trial % 2 ? rng.box(-2, 2) : cplx{0, 0}};
    if (!inter.zero() && inter.alpha == cplx{0, 0}) continue;
    const double product = pseudomode_quotient_asymptotic(pot, inter, z) *
                           resolvent_norm_asymptotic(pot, inter, z);
    REQUIRE(product == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("quotient approaches the asymptote at the stated rates") {
  const std::vector<double> taus{1e2, 1e3, 1e4};
  for (double delta : {0.0, 0.5, -0.5, 0.25, -0.7}) {
    std::vector<double> dev;
    for (double tau : taus) {
      const SpectralPoint z{tau, delta};
      dev.push_back(std::abs(pseudomode_quotient_exact(kTilted, kNone, z) /
                                 pseudomode_quotient_asymptotic(kTilted, kNone, z) -
                             1.0));
    }
    CHECK(test_oracles::loglog_slope(taus, dev) == Approx(-1.0).epsilon(0.15));
  }
  for (cplx alpha : {cplx{0.0, 0.5}, cplx{-2.0, 0.0}}) {
    const Interaction inter{alpha};
    for (double delta : {0.0, 0.5, -0.5}) {
      std::vector<double> dev;
      for (double tau : taus) {
        const SpectralPoint z{tau, delta};
        dev.push_back(std::abs(pseudomode_quotient_exact(kTilted, inter, z) /
                                   pseudomode_quotient_asymptotic(kTilted, inter, z) -
                               1.0));
      }
      CHECK(test_oracles::loglog_slope(taus, dev) == Approx(-0.5).epsilon(0.3));
    }
  }
}

TEST_CASE("tail ratio minimizes the evaluated quotient") {
  const SpectralPoint z{1000.0, 0.3};
  const double x0 = -std::abs(kModel.v_plus.imag() - z.delta) /
                    std::abs(kModel.v_minus.imag() - z.delta);
  const double q0 = pseudomode_quotient_exact(
      pseudomode_coeffs_for(kModel, kNone, z, cplx{x0, 0.0}, cplx{1.0, 0.0}), kModel, z);
  double best_sampled = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const double x = -50.0 + 100.0 * i / 999.0;
    const auto c = pseudomode_coeffs_for(kModel, kNone, z, cplx{x, 0.0}, cplx{1.0, 0.0});
    const double q = pseudomode_quotient_exact(c, kModel, z);
    best_sampled = std::min(best_sampled, q);
    REQUIRE(q >= q0 * (1.0 - 1e-6));
  }
  CHECK(q0 <= best_sampled);
  // and the public constructor uses exactly that ratio
  const double q_public = pseudomode_quotient_exact(kModel, kNone, z);
  CHECK(q_public == Approx(q0).epsilon(1e-12));
}

TEST_CASE("reciprocity against the finite-difference oracle at moderate tau") {
  const SpectralPoint z{50.0, 0.0};
  const double q = pseudomode_quotient_exact(kModel, kNone, z);
  std::vector<double> deviations;
  for (double h : {0.04, 0.02}) {
    const auto disc = build_discretization(kModel, kNone, 270.0, h);
    const double oracle = oracle_resolvent_norm(disc, z, 20000, 1e-13);
    deviations.push_back(std::abs(q * oracle - 1.0));
  }
  CHECK(deviations[1] < deviations[0]);  // finer grid moves the product toward 1
  CHECK(deviations[1] < 0.02);
}
