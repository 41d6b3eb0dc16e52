#include "ergo/closed_form.hpp"

#include <cmath>
#include <string>

namespace ergo::closed_form {

namespace {

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterOutOfRange(std::string(name) + " = " + std::to_string(value) +
                              " outside [0, 1]");
  }
}

constexpr double degenerate_tol = 1e-14;

}  // namespace

double heaviside(double x) { return x > 0.0 ? 1.0 : 0.0; }

ClosedFormPoint::ClosedFormPoint(double gamma_in, double mu_in, double theta_in)
    : gamma(gamma_in), mu(mu_in), theta(theta_in) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(mu, "mu");
}

double chi(double gamma, double theta, int outcome) {
  check_unit_interval(gamma, "gamma");
  if (outcome != 0 && outcome != 1) {
    throw ParameterOutOfRange("outcome index must be 0 or 1");
  }
  const double sign = outcome == 0 ? 1.0 : -1.0;
  return gamma + sign * (1.0 - gamma) * std::cos(theta);
}

double memoryless_daemonic(double gamma, double theta) {
  const double chi0 = chi(gamma, theta, 0);
  const double chi1 = chi(gamma, theta, 1);
  return 0.5 * chi0 * heaviside(chi0) + 0.5 * chi1 * heaviside(chi1);
}

ConditionalPopulations memory_conditional_populations(double gamma, double mu, double theta) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(mu, "mu");
  const double x = std::cos(theta);
  const double denom0 = 1.0 + gamma * x;
  const double denom1 = 1.0 - gamma * x;
  if (denom0 < degenerate_tol || denom1 < degenerate_tol) {
    throw DegenerateOutcome("conditional population undefined: 1 +/- gamma*cos(theta) vanishes");
  }

  ConditionalPopulations pops;
  pops.alpha0 =
      (gamma + (1.0 - gamma * (2.0 * gamma * (mu - 1.0) - 2.0 * mu + 1.0)) * x + 1.0) /
      (2.0 * denom0);
  pops.beta0 =
      ((gamma - 1.0) * ((2.0 * gamma * (mu - 1.0) + 1.0) * x - 1.0)) / (2.0 * denom0);
  pops.alpha1 =
      ((2.0 * gamma * gamma * (mu - 1.0) - 2.0 * gamma * mu + gamma - 1.0) * x + gamma + 1.0) /
      (2.0 * denom1);
  // The published beta1 carries (gamma - 1); that sign makes the
  // populations sum to alpha1 + beta1 = 1 - 2*beta1 instead of 1. The
  // factor here is (1 - gamma), which restores normalization.
  pops.beta1 =
      ((1.0 - gamma) * ((2.0 * gamma * (mu - 1.0) + 1.0) * x + 1.0)) / (2.0 * denom1);
  return pops;
}

ConditionalPopulations memory_conditional_populations(const ClosedFormPoint& point) {
  return memory_conditional_populations(point.gamma, point.mu, point.theta);
}

double memory_daemonic(double gamma, double mu, double theta) {
  const ConditionalPopulations pops = memory_conditional_populations(gamma, mu, theta);
  const double p0 = 0.5 * (1.0 + gamma * std::cos(theta));
  const double p1 = 0.5 * (1.0 - gamma * std::cos(theta));
  return p0 * (2.0 * pops.alpha0 - 1.0) * heaviside(pops.alpha0 - 0.5) +
         p1 * (2.0 * pops.alpha1 - 1.0) * heaviside(pops.alpha1 - 0.5);
}

double memory_daemonic(const ClosedFormPoint& point) {
  return memory_daemonic(point.gamma, point.mu, point.theta);
}

std::array<double, 4> memory_output_coefficients(double gamma, double mu) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(mu, "mu");
  return {
      0.5 * (gamma * (gamma + mu * (1.0 - gamma)) + 1.0),
      0.5 * gamma * (gamma - 1.0) * (mu - 1.0),
      0.5 * gamma * (gamma - 1.0) * (mu - 1.0),
      -0.5 * (gamma - 1.0) * (gamma * (mu - 1.0) + 1.0),
  };
}

}  // namespace ergo::closed_form
