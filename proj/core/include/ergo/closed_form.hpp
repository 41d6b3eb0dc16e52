#pragma once

#include <array>

#include "ergo/errors.hpp"

namespace ergo::closed_form {

// Analytic expressions for the two scenarios the library simulates
// numerically: a single local amplitude-damping use and two correlated
// uses with partial memory, both starting from the half/half classically
// correlated state. They are kept in their published algebraic form (not
// re-simplified) and serve as independent oracles for the matrix pipeline.
// All energies are in units of omega.

// Theta(0) = 0 throughout.
double heaviside(double x);

// A validated evaluation point: gamma and mu in [0, 1], theta unrestricted
// (it is an angle).
struct ClosedFormPoint {
  ClosedFormPoint(double gamma, double mu, double theta);
  double gamma;
  double mu;
  double theta;
};

// chi = gamma + (-1)^a (1 - gamma) cos(theta); the conditional-state
// ergotropy after one local use is chi * Theta(chi).
double chi(double gamma, double theta, int outcome);

// Daemonic ergotropy after one local use, both outcomes equally likely.
double memoryless_daemonic(double gamma, double theta);

// Excited/ground populations of the conditional states after the two-use
// memory channel. Throws DegenerateOutcome when a denominator
// 1 +/- gamma*cos(theta) vanishes (gamma = 1 with theta in {0, pi}).
struct ConditionalPopulations {
  double alpha0;
  double beta0;
  double alpha1;
  double beta1;
};

ConditionalPopulations memory_conditional_populations(double gamma, double mu, double theta);
ConditionalPopulations memory_conditional_populations(const ClosedFormPoint& point);

// Daemonic ergotropy for the memory channel:
// p0 (2 alpha0 - 1) Theta(alpha0 - 1/2) + p1 (2 alpha1 - 1) Theta(alpha1 - 1/2)
// with p_a = (1 +/- gamma cos(theta)) / 2. Propagates DegenerateOutcome.
double memory_daemonic(double gamma, double mu, double theta);
double memory_daemonic(const ClosedFormPoint& point);

// Diagonal weights {ee, eg, ge, gg} of the state transmitted through the
// memory channel; they sum to 1.
std::array<double, 4> memory_output_coefficients(double gamma, double mu);

}  // namespace ergo::closed_form
