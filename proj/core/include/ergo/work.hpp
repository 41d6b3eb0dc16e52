#pragma once

#include <array>
#include <optional>

#include "ergo/matrix.hpp"
#include "ergo/states.hpp"

namespace ergo {

// H = omega |e><e|, ground energy 0. All extracted work is reported in the
// same energy units as omega.
struct QubitHamiltonian {
  explicit QubitHamiltonian(double omega = 1.0);
  Matrix matrix() const;
  double omega;
};

// Rank-1 projector pair for a general qubit basis
//   |psi_0> = cos(theta/2)|e> + e^{i phi} sin(theta/2)|g>
//   |psi_1> = -sin(theta/2)|e> + e^{i phi} cos(theta/2)|g>
// Angles are wrapped into theta in [0, pi], phi in [0, 2*pi).
struct ProjectivePair {
  double theta;
  double phi;
  Matrix pi0;
  Matrix pi1;
};

ProjectivePair qubit_projectors(double theta, double phi);

// One branch of an ancilla measurement. Outcomes with probability below
// 1e-14 carry no conditional state and are excluded from averages.
struct MeasurementOutcome {
  double probability = 0.0;
  std::optional<DensityMatrix> conditional_state;
};

double mean_energy(const DensityMatrix& rho, const QubitHamiltonian& h);
double mean_energy(const DensityMatrix& rho, const Matrix& hamiltonian);

// Spectrum of rho rearranged so larger populations sit on lower energies.
DensityMatrix passive_state(const DensityMatrix& rho, const QubitHamiltonian& h);
DensityMatrix passive_state(const DensityMatrix& rho, const Matrix& hamiltonian);

// Maximum work extractable by cyclic unitaries: tr(rho H) minus the
// passive energy. Never negative.
double ergotropy(const DensityMatrix& rho, const QubitHamiltonian& h);
double ergotropy(const DensityMatrix& rho, const Matrix& hamiltonian);

// True iff rho yields no work and commutes with the Hamiltonian within tol.
bool is_passive(const DensityMatrix& rho, const QubitHamiltonian& h, double tol);

// Projective measurement of the ancilla: probabilities
// p_a = tr[(I (x) Pi_a) rho] and conditional system states
// tr_A[(I (x) Pi_a) rho (I (x) Pi_a)] / p_a.
std::array<MeasurementOutcome, 2> measure_ancilla(const DensityMatrix& rho_sa,
                                                  const ProjectivePair& pair);

// Average ergotropy of the conditional states, sum_a p_a W(rho_{S|a}).
double daemonic_ergotropy(const DensityMatrix& rho_sa, const QubitHamiltonian& h,
                          const ProjectivePair& pair);

// Deterministic derivative-free search over measurement bases: a coarse
// (theta, phi) grid followed by golden-section refinement in theta around
// the best grid point. Ties prefer lexicographically smaller (theta, phi).
struct OptimizerSettings {
  int theta_points = 181;   // grid points on [0, pi]
  int phi_points = 25;      // grid points on [0, 2*pi]
  double theta_tol = 1e-10; // refinement window width in angle
};

struct GainResult {
  double gain;             // daemonic_at_opt - plain_ergotropy, clamped at 0
  double optimal_theta;
  double optimal_phi;
  double daemonic_at_opt;
  double plain_ergotropy;  // ergotropy of the reduced system state
};

// Maximizes daemonic ergotropy over projective pairs. Gains more negative
// than -1e-9 raise ConsistencyError; smaller dust is clamped to zero.
GainResult daemonic_gain(const DensityMatrix& rho_sa, const QubitHamiltonian& h,
                         const OptimizerSettings& settings = {});

}  // namespace ergo
