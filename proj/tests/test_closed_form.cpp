#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergo/channels.hpp"
#include "ergo/closed_form.hpp"
#include "ergo/work.hpp"

using namespace ergo;
namespace cf = ergo::closed_form;

namespace {

constexpr double pi = std::numbers::pi;

DensityMatrix local_damping_state(double gamma) {
  return apply_local_to_system(amplitude_damping(gamma),
                               classically_correlated({0.5, 0.0, 0.0, 0.5}));
}

DensityMatrix memory_state(double gamma, double mu) {
  return apply_memory(MemoryChannelSpec(gamma, mu),
                      classically_correlated({0.5, 0.0, 0.0, 0.5}));
}

}  // namespace

TEST_CASE("chi") {
  CHECK(cf::chi(0.4, 0.0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cf::chi(0.4, 0.0, 1) == doctest::Approx(-0.2).epsilon(1e-12));
  for (double gamma : {0.0, 0.3, 0.9}) {
    CHECK(cf::chi(gamma, pi / 2, 0) == doctest::Approx(gamma).epsilon(1e-12));
    CHECK(cf::chi(gamma, pi / 2, 1) == doctest::Approx(gamma).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cf::chi(1.2, 0.0, 0), ParameterOutOfRange);
  CHECK_THROWS_AS(cf::chi(0.5, 0.0, 2), ParameterOutOfRange);
}

TEST_CASE("heaviside convention") {
  CHECK(cf::heaviside(0.0) == 0.0);
  CHECK(cf::heaviside(1e-300) == 1.0);
  CHECK(cf::heaviside(-1e-300) == 0.0);
}

TEST_CASE("memoryless daemonic ergotropy") {
  CHECK(cf::memoryless_daemonic(0.4, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cf::memoryless_daemonic(0.8, 0.0) == doctest::Approx(0.8).epsilon(1e-12));
  for (double gamma : {0.0, 0.5, 1.0}) {
    CHECK(cf::memoryless_daemonic(gamma, pi / 2) == doctest::Approx(gamma).epsilon(1e-12));
  }
}

TEST_CASE("memory conditional populations") {
  for (double gamma : {0.1, 0.5, 0.9}) {
    const cf::ConditionalPopulations pops = cf::memory_conditional_populations(gamma, 0.0, 0.0);
    CHECK(pops.alpha0 ==
          doctest::Approx((1 + gamma * gamma) / (1 + gamma)).epsilon(1e-12));
    CHECK(pops.alpha1 == doctest::Approx(gamma).epsilon(1e-12));
  }

  for (double mu : {0.0, 0.5, 1.0}) {
    const cf::ConditionalPopulations pops =
        cf::memory_conditional_populations(0.0, mu, pi / 2);
    CHECK(pops.alpha0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pops.alpha1 == doctest::Approx(0.5).epsilon(1e-12));

    // At gamma = 0 the channel is the identity and the conditional
    // populations follow the measurement overlap with a perfectly
    // correlated state: alpha_0 = cos^2(theta/2).
    for (int t = 0; t <= 8; ++t) {
      const double theta = pi * t / 8.0;
      const cf::ConditionalPopulations p = cf::memory_conditional_populations(0.0, mu, theta);
      const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
      CHECK(p.alpha0 == doctest::Approx(c2).epsilon(1e-12));
      CHECK(p.alpha1 == doctest::Approx(1.0 - c2).epsilon(1e-12));
    }
  }

  for (double gamma : {0.2, 0.7}) {
    const cf::ConditionalPopulations pops = cf::memory_conditional_populations(gamma, 1.0, 0.0);
    CHECK(pops.alpha0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pops.alpha1 == doctest::Approx(0.0));
  }

  CHECK_THROWS_AS(cf::memory_conditional_populations(1.0, 0.5, 0.0), DegenerateOutcome);
  CHECK_THROWS_AS(cf::memory_conditional_populations(1.0, 0.5, pi), DegenerateOutcome);
}

TEST_CASE("population normalization across the parameter grid") {
  for (int i = 0; i < 21; ++i) {
    const double gamma = i / 20.0;
    for (int j = 0; j < 21; ++j) {
      const double mu = j / 20.0;
      for (int k = 0; k < 31; ++k) {
        const double theta = pi * k / 30.0;
        cf::ConditionalPopulations pops;
        try {
          pops = cf::memory_conditional_populations(gamma, mu, theta);
        } catch (const DegenerateOutcome&) {
          CHECK(gamma == 1.0);
          continue;
        }
        CHECK(std::abs(pops.alpha0 + pops.beta0 - 1.0) < 1e-12);
        CHECK(std::abs(pops.alpha1 + pops.beta1 - 1.0) < 1e-12);
        CHECK(pops.alpha0 >= -1e-12);
        CHECK(pops.alpha0 <= 1.0 + 1e-12);
        CHECK(pops.alpha1 >= -1e-12);
        CHECK(pops.alpha1 <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("memory daemonic ergotropy closed form") {
  for (double gamma : {0.0, 0.2, 0.5, 0.8}) {
    const double expected = 0.5 * (1 - gamma + 2 * gamma * gamma) +
                            0.5 * (1 - gamma) * std::max(2 * gamma - 1.0, 0.0);
    CHECK(cf::memory_daemonic(gamma, 0.0, 0.0) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(cf::memory_daemonic(gamma, 1.0, 0.0) ==
          doctest::Approx(0.5 * (1 + gamma)).epsilon(1e-12));
  }
  for (double mu : {0.0, 0.5, 1.0}) {
    CHECK(cf::memory_daemonic(0.0, mu, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
  }

  const cf::ClosedFormPoint point(0.4, 0.6, 0.3);
  CHECK(cf::memory_daemonic(point) ==
        doctest::Approx(cf::memory_daemonic(0.4, 0.6, 0.3)).epsilon(1e-15));
  CHECK_THROWS_AS(cf::ClosedFormPoint(1.4, 0.5, 0.0), ParameterOutOfRange);
}

TEST_CASE("memory output coefficients") {
  for (double gamma : {0.0, 0.4, 1.0}) {
    const auto full = cf::memory_output_coefficients(gamma, 1.0);
    CHECK(full[0] == doctest::Approx(0.5 * (1 + gamma)).epsilon(1e-12));
    CHECK(full[1] == doctest::Approx(0.0));
    CHECK(full[2] == doctest::Approx(0.0));
    CHECK(full[3] == doctest::Approx(0.5 * (1 - gamma)).epsilon(1e-12));
  }
  for (double mu : {0.0, 0.5, 1.0}) {
    const auto none = cf::memory_output_coefficients(0.0, mu);
    CHECK(none[0] == doctest::Approx(0.5));
    CHECK(none[3] == doctest::Approx(0.5));
  }
  const auto mid = cf::memory_output_coefficients(0.5, 0.0);
  CHECK(mid[0] == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(mid[1] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(mid[2] == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(mid[3] == doctest::Approx(0.125).epsilon(1e-12));

  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) {
      const auto w = cf::memory_output_coefficients(i / 20.0, j / 20.0);
      CHECK(std::abs(w[0] + w[1] + w[2] + w[3] - 1.0) < 1e-14);
    }
}

TEST_CASE("closed form matches the numeric pipeline for one local use") {
  const QubitHamiltonian h;
  double worst = 0.0;
  for (int i = 0; i < 101; ++i) {
    const double gamma = i / 100.0;
    const DensityMatrix state = local_damping_state(gamma);
    for (int k = 0; k < 181; ++k) {
      const double theta = pi * k / 180.0;
      const double numeric = daemonic_ergotropy(state, h, qubit_projectors(theta, 0.0));
      worst = std::max(worst, std::abs(numeric - cf::memoryless_daemonic(gamma, theta)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("closed form matches the numeric pipeline for the memory channel") {
  const QubitHamiltonian h;
  double worst = 0.0;
  int degenerate = 0;
  for (int i = 0; i < 21; ++i) {
    const double gamma = i / 20.0;
    for (int j = 0; j < 21; ++j) {
      const double mu = j / 20.0;
      const DensityMatrix state = memory_state(gamma, mu);
      for (int k = 0; k < 61; ++k) {
        const double theta = pi * k / 60.0;
        double oracle;
        try {
          oracle = cf::memory_daemonic(gamma, mu, theta);
        } catch (const DegenerateOutcome&) {
          ++degenerate;
          continue;
        }
        const double numeric = daemonic_ergotropy(state, h, qubit_projectors(theta, 0.0));
        worst = std::max(worst, std::abs(numeric - oracle));
      }
    }
  }
  CHECK(worst < 1e-9);
  // Only the two gamma = 1 corners (theta = 0 and pi) are degenerate.
  CHECK(degenerate == 2 * 21);
}
