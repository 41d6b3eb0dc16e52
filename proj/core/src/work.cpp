#include "ergo/work.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ergo {

namespace {

constexpr double zero_probability_tol = 1e-14;

void check_matching_dims(const DensityMatrix& rho, const Matrix& hamiltonian) {
  if (rho.dim() != hamiltonian.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) +
                            " does not match Hamiltonian dimension " +
                            std::to_string(hamiltonian.dim()));
  }
}

// Energy after the optimal population-reordering unitary: populations
// descending against energies ascending.
double passive_energy(const DensityMatrix& rho, const Matrix& hamiltonian) {
  check_matching_dims(rho, hamiltonian);
  const EigenSystem energies = hermitian_eigendecompose(hamiltonian);
  const EigenSystem populations = hermitian_eigendecompose(rho.matrix());
  const std::size_t n = rho.dim();
  double energy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    energy += populations.eigenvalues[n - 1 - k] * energies.eigenvalues[k];
  }
  return energy;
}

}  // namespace

QubitHamiltonian::QubitHamiltonian(double omega_in) : omega(omega_in) {
  if (!(omega > 0.0)) {
    throw ParameterOutOfRange("omega = " + std::to_string(omega) + " must be positive");
  }
}

Matrix QubitHamiltonian::matrix() const { return Matrix(2, {omega, 0.0, 0.0, 0.0}); }

double mean_energy(const DensityMatrix& rho, const Matrix& hamiltonian) {
  check_matching_dims(rho, hamiltonian);
  return std::real(trace_of_product(rho.matrix(), hamiltonian));
}

double mean_energy(const DensityMatrix& rho, const QubitHamiltonian& h) {
  return mean_energy(rho, h.matrix());
}

DensityMatrix passive_state(const DensityMatrix& rho, const Matrix& hamiltonian) {
  check_matching_dims(rho, hamiltonian);
  const EigenSystem energies = hermitian_eigendecompose(hamiltonian);
  const EigenSystem populations = hermitian_eigendecompose(rho.matrix());
  const std::size_t n = rho.dim();
  Matrix sigma(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double population = populations.eigenvalues[n - 1 - k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        sigma(i, j) += population * energies.eigenvectors(i, k) *
                       std::conj(energies.eigenvectors(j, k));
  }
  return make_density(sigma);
}

DensityMatrix passive_state(const DensityMatrix& rho, const QubitHamiltonian& h) {
  return passive_state(rho, h.matrix());
}

double ergotropy(const DensityMatrix& rho, const Matrix& hamiltonian) {
  const double work = mean_energy(rho, hamiltonian) - passive_energy(rho, hamiltonian);
  return std::max(work, 0.0);
}

double ergotropy(const DensityMatrix& rho, const QubitHamiltonian& h) {
  return ergotropy(rho, h.matrix());
}

bool is_passive(const DensityMatrix& rho, const QubitHamiltonian& h, double tol) {
  if (ergotropy(rho, h) >= tol) return false;
  const Matrix hm = h.matrix();
  return max_abs_diff(rho.matrix() * hm, hm * rho.matrix()) < tol;
}

ProjectivePair qubit_projectors(double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  double p = phi;
  if (t > std::numbers::pi) {
    // (theta, phi) and (2*pi - theta, phi + pi) name the same basis.
    t = two_pi - t;
    p += std::numbers::pi;
  }
  p = std::fmod(p, two_pi);
  if (p < 0.0) p += two_pi;

  const double c = std::cos(0.5 * t);
  const double s = std::sin(0.5 * t);
  const complex_t e_phi = std::polar(1.0, p);

  ProjectivePair pair;
  pair.theta = t;
  pair.phi = p;
  pair.pi0 = Matrix(2, {c * c, c * s * std::conj(e_phi), c * s * e_phi, s * s});
  pair.pi1 = Matrix(2, {s * s, -s * c * std::conj(e_phi), -s * c * e_phi, c * c});
  return pair;
}

std::array<MeasurementOutcome, 2> measure_ancilla(const DensityMatrix& rho_sa,
                                                  const ProjectivePair& pair) {
  if (rho_sa.dim() != 4) {
    throw DimensionMismatch("ancilla measurement requires a system-ancilla state");
  }
  const Matrix id2 = Matrix::identity(2);
  std::array<MeasurementOutcome, 2> outcomes;
  for (int a = 0; a < 2; ++a) {
    const Matrix joint = kron(id2, a == 0 ? pair.pi0 : pair.pi1);
    const double p = std::real(trace_of_product(joint, rho_sa.matrix()));
    outcomes[a].probability = std::clamp(p, 0.0, 1.0);
    if (p < zero_probability_tol) continue;  // excluded from averages
    Matrix collapsed = joint * rho_sa.matrix() * joint;
    Matrix reduced = detail::partial_trace_ancilla_raw(collapsed);
    reduced *= complex_t{1.0 / p};
    outcomes[a].conditional_state = make_density(reduced);
  }
  return outcomes;
}

double daemonic_ergotropy(const DensityMatrix& rho_sa, const QubitHamiltonian& h,
                          const ProjectivePair& pair) {
  const Matrix hm = h.matrix();
  double average = 0.0;
  for (const MeasurementOutcome& outcome : measure_ancilla(rho_sa, pair)) {
    if (!outcome.conditional_state) continue;
    average += outcome.probability * ergotropy(*outcome.conditional_state, hm);
  }
  return average;
}

GainResult daemonic_gain(const DensityMatrix& rho_sa, const QubitHamiltonian& h,
                         const OptimizerSettings& settings) {
  if (settings.theta_points < 2 || settings.phi_points < 2) {
    throw ParameterOutOfRange("optimizer grids need at least 2 points per axis");
  }
  const double plain = ergotropy(partial_trace_ancilla(rho_sa), h);

  const auto objective = [&](double theta, double phi) {
    return daemonic_ergotropy(rho_sa, h, qubit_projectors(theta, phi));
  };

  // Coarse scan. Values within tie_tol count as ties and keep the
  // lexicographically smallest (theta, phi), so rounding dust cannot drag
  // the argmax across a flat plateau.
  constexpr double tie_tol = 1e-12;
  const double theta_step = std::numbers::pi / (settings.theta_points - 1);
  const double phi_step = 2.0 * std::numbers::pi / (settings.phi_points - 1);
  double best_value = -1.0;
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (int i = 0; i < settings.theta_points; ++i) {
    const double theta = i * theta_step;
    for (int j = 0; j < settings.phi_points; ++j) {
      const double phi = j * phi_step;
      const double value = objective(theta, phi);
      if (value > best_value + tie_tol) {
        best_value = value;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Golden-section refinement in theta around the best grid point.
  {
    constexpr double inv_phi = 0.6180339887498949;
    double lo = std::max(0.0, best_theta - theta_step);
    double hi = std::min(std::numbers::pi, best_theta + theta_step);
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = objective(c, best_phi);
    double fd = objective(d, best_phi);
    while (hi - lo > settings.theta_tol) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = objective(c, best_phi);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = objective(d, best_phi);
      }
    }
    const double refined_theta = 0.5 * (lo + hi);
    const double refined_value = objective(refined_theta, best_phi);
    if (refined_value > best_value + tie_tol) {
      best_value = refined_value;
      best_theta = refined_theta;
    }
  }

  double gain = best_value - plain;
  if (gain < 0.0) {
    if (gain < -1e-9) {
      throw ConsistencyError("optimized daemonic ergotropy fell below plain ergotropy by " +
                             std::to_string(-gain));
    }
    gain = 0.0;
  }
  return GainResult{gain, best_theta, best_phi, best_value, plain};
}

}  // namespace ergo
