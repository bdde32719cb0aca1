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
const StepPotential kFree{};
const Interaction kNone{};
}  // namespace

TEST_CASE("separable_bound_terms: frozen values") {
  const auto t = separable_bound_terms(kFree, kNone, SpectralPoint{-1.0, 0.0});
  CHECK(t.a == 0.0);
  CHECK(t.c == 0.0);
  CHECK(t.b == 0.0);
  CHECK(t.b_tilde == 0.0);
  CHECK(t.d == Approx(1.0 / 16.0));

  // leading order ~ tau^2 for the step model on the real axis
  const auto big = separable_bound_terms(kModel, kNone, SpectralPoint{100.0, 0.0});
  CHECK(big.a == Approx(1e4).epsilon(0.10));
  CHECK(big.c == Approx(1e4).epsilon(0.10));
  CHECK(big.d == Approx(1e4).epsilon(0.10));
}

TEST_CASE("separable_bound_terms: |b_tilde| <= b on random inputs") {
  test_oracles::Rng rng(5523);
  for (int trial = 0; trial < 20000; ++trial) {
    const StepPotential pot{rng.box(-2, 2), rng.box(-2, 2)};
    const Interaction inter{trial % 2 ? rng.box(-2, 2) : cplx{0, 0}};
    try {
      const auto t = separable_bound_terms(pot, inter, SpectralPoint{rng.box(-6, 6)});
      REQUIRE(std::abs(t.b_tilde) <= t.b * (1.0 + 1e-12) + 1e-300);
      REQUIRE(t.a >= 0.0);
      REQUIRE(t.c >= 0.0);
      REQUIRE(t.d >= 0.0);
      REQUIRE(std::isfinite(t.a + t.b + t.c + t.d));
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("separable_norm_bracket: collapse cases") {
  // cross-term-only kernel: both sides equal the exact rank-two norm 1/4
  const auto free = separable_norm_bracket(separable_bound_terms(kFree, kNone, SpectralPoint{-1.0, 0.0}));
  CHECK(free.lower == Approx(0.25).epsilon(1e-14));
  CHECK(free.upper == Approx(0.25).epsilon(1e-14));

  SeparableBoundTerms same{1.0, 0.7, 0.7, 2.0, 0.3};
  const auto b = separable_norm_bracket(same);
  CHECK(b.lower == b.upper);  // b == b_tilde
}

TEST_CASE("separable_norm_bracket: step-model asymptote 2 tau") {
  const auto b = separable_norm_bracket(separable_bound_terms(kModel, kNone, SpectralPoint{1e4, 0.0}));
  CHECK(b.lower == Approx(2e4).epsilon(0.01));
  CHECK(b.upper == Approx(2e4).epsilon(0.01));
}

TEST_CASE("convolution_norm_upper") {
  CHECK(convolution_norm_upper(kFree, SpectralPoint{-1.0, 0.0}) == Approx(2.0));
  // |k+-| = 1 and Re k+- = cos(pi/4) at z = 0 (sqrt(+-i) in polar form)
  CHECK(convolution_norm_upper(kModel, SpectralPoint{0.0, 0.0}) ==
        Approx(2.0 / std::cos(3.14159265358979323846 / 4)).epsilon(1e-12));
  CHECK(convolution_norm_upper(kModel, SpectralPoint{0.0, 0.0}) ==
        Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(convolution_norm_upper(kModel, SpectralPoint{1e4, 0.0}) == Approx(4.0).epsilon(0.01));
}

TEST_CASE("resolvent_norm_bracket: equality regimes") {
  const auto w = resolvent_norm_bracket(kModel, kNone, SpectralPoint{2.0, 3.0});
  CHECK(w.regime == Regime::outside_num_range);
  CHECK(w.lower == Approx(0.5).epsilon(1e-12));
  CHECK(w.upper == Approx(0.5).epsilon(1e-12));

  const auto sa = resolvent_norm_bracket(kFree, kNone, SpectralPoint{-1.0, 0.0});
  CHECK(sa.lower == Approx(1.0));
  CHECK(sa.upper == Approx(1.0));

  // extended region point: outside W but still an equality point for this model
  const auto blue = resolvent_norm_bracket(kModel, kNone, SpectralPoint{-3.0, 0.5});
  CHECK(blue.lower == blue.upper);
  CHECK(blue.upper == Approx(1.0 / std::abs(cplx{-3.0, 0.5} - cplx{0.0, 1.0})));

  const auto near = resolvent_norm_bracket(kModel, kNone, SpectralPoint{-3.0, 0.05});
  CHECK(near.regime == Regime::outside_num_range);
  CHECK(near.lower < near.upper);  // only the two-sided bound applies
  CHECK(near.lower == Approx(1.0 / spectrum_distance(kModel, SpectralPoint{-3.0, 0.05})));
  CHECK(near.upper == Approx(1.0 / numerical_range_distance(kModel, SpectralPoint{-3.0, 0.05})));
}

TEST_CASE("resolvent_norm_bracket: strip point stays near the asymptote") {
  const auto b = resolvent_norm_bracket(kModel, kNone, SpectralPoint{100.0, 0.0});
  CHECK(b.regime == Regime::inside_strip);
  CHECK(b.lower > 190.0);
  CHECK(b.upper < 210.0);
  CHECK(b.lower <= b.upper);
}

TEST_CASE("resolvent_norm_bracket: ordering on random admissible points") {
  test_oracles::Rng rng(314);
  int checked = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const StepPotential pot{rng.box(-2, 2), rng.box(-2, 2)};
    const Interaction inter{trial % 2 ? rng.box(-2, 2) : cplx{0, 0}};
    try {
      const auto b = resolvent_norm_bracket(pot, inter, SpectralPoint{rng.box(-8, 8)});
      REQUIRE(b.lower <= b.upper * (1.0 + 1e-12));
      REQUIRE(b.lower >= 0.0);
      ++checked;
    } catch (const Error&) {
      continue;
    }
  }
  CHECK(checked > 50000);
}

TEST_CASE("resolvent_norm_asymptotic: printed values and errors") {
  CHECK(resolvent_norm_asymptotic(kModel, kNone, SpectralPoint{100.0, 0.0}) == Approx(200.0));
  CHECK(resolvent_norm_asymptotic(kModel, kNone, SpectralPoint{100.0, 0.5}) ==
        Approx(2.0 * 100.0 / 0.75));
  CHECK(resolvent_norm_asymptotic(kModel, Interaction{{0.0, 1.0}}, SpectralPoint{100.0, 0.0}) ==
        Approx(20.0));
  CHECK_THROWS_AS(resolvent_norm_asymptotic(kFree, kNone, SpectralPoint{100.0, 0.0}),
                  DegenerateImVError);
  CHECK_THROWS_AS(resolvent_norm_asymptotic(kModel, kNone, SpectralPoint{100.0, 1.5}),
                  DeltaOutsideStripError);
}

TEST_CASE("bracket endpoints converge to the asymptote at the stated rates") {
  const std::vector<double> taus{1e2, 1e3, 1e4, 1e5};
  SUBCASE("interaction-free: slope -1") {
    for (double delta : {0.0, 0.5, -0.5}) {
      std::vector<double> dev_lower, dev_upper;
      for (double tau : taus) {
        const SpectralPoint z{tau, delta};
        const auto b = resolvent_norm_bracket(kModel, kNone, z);
        const double asym = resolvent_norm_asymptotic(kModel, kNone, z);
        dev_lower.push_back(std::abs(b.lower / asym - 1.0));
        dev_upper.push_back(std::abs(b.upper / asym - 1.0));
      }
      CHECK(test_oracles::loglog_slope(taus, dev_lower) == Approx(-1.0).epsilon(0.15));
      CHECK(test_oracles::loglog_slope(taus, dev_upper) == Approx(-1.0).epsilon(0.15));
    }
  }
  SUBCASE("with interaction: slope -1/2") {
    for (cplx alpha : {cplx{0.0, 0.5}, cplx{-2.0, 0.0}}) {
      const Interaction inter{alpha};
      std::vector<double> dev_upper;
      for (double tau : taus) {
        const SpectralPoint z{tau, 0.3};
        const auto b = resolvent_norm_bracket(kModel, inter, z);
        dev_upper.push_back(std::abs(b.upper / resolvent_norm_asymptotic(kModel, inter, z) - 1.0));
      }
      CHECK(test_oracles::loglog_slope(taus, dev_upper) == Approx(-0.5).epsilon(0.3));
    }
  }
}

TEST_CASE("bracket agrees with the finite-difference oracle outside the range") {
  // both Prop-style bounds hold at oracle accuracy
  for (cplx zc : {cplx{2.0, 3.0}, cplx{-2.0, 1.5}, cplx{1.0, -2.5}}) {
    const SpectralPoint z{zc};
    const auto disc = build_discretization(kModel, kNone, 40.0, 0.01);
    const double oracle = oracle_resolvent_norm(disc, z, 40000, 1e-13);
    CHECK(oracle >= 0.97 / spectrum_distance(kModel, z));
    CHECK(oracle <= 1.03 / numerical_range_distance(kModel, z));
  }
}

TEST_CASE("trial-function quotient never beats the upper bound") {
  test_oracles::Rng rng(777);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const StepPotential pot{rng.box(-2, 2), rng.box(-2, 2)};
    if (pot.is_im_constant()) continue;
    const Interaction inter{trial % 2 ? rng.box(-2, 2) : cplx{0, 0}};
    const SpectralPoint z{rng.box(-8, 8)};
    try {
      const double q = pseudomode_quotient_exact(pot, inter, z);
      const auto b = resolvent_norm_bracket(pot, inter, z);
      REQUIRE(1.0 / q <= b.upper * (1.0 + 1e-12));
      ++checked;
    } catch (const Error&) {
      continue;
    }
  }
  CHECK(checked > 1000);
}
