#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ergo/errors.hpp"
#include "ergo/work.hpp"

namespace ergo {

// One grid point of a parameter sweep. mu is NaN for sweeps without a
// memory axis. Energies are in units of omega.
struct SweepRecord {
  double gamma;
  double mu;
  double ergotropy;
  double daemonic_ergotropy;
  double daemonic_gain;
  double optimal_theta;
};

struct RunConfig {
  double omega = 1.0;
  int gamma_steps = 101;       // grid points on [0, 1]
  int mu_steps = 101;          // grid points on [0, 1]
  int theta_grid_steps = 181;  // optimizer grid points on [0, pi]
  double tolerance = 1e-10;    // residual budget for verification checks
  std::string output_path;     // empty = stdout

  // Throws ParameterOutOfRange when a field is outside its range.
  void validate() const;
  OptimizerSettings optimizer() const;
};

// Damping sweep for a single local channel use on the system qubit of the
// half/half classically correlated state.
std::vector<SweepRecord> sweep_local_damping(const RunConfig& cfg);

// Damping sweep through the two-use memory channel at fixed mu.
std::vector<SweepRecord> sweep_memory_damping(const RunConfig& cfg, double mu);

// Full (gamma, mu) grid, rows ascending in (gamma, mu).
std::vector<SweepRecord> sweep_memory_damping_grid(const RunConfig& cfg);

// Comma-separated output with a header row; floating point uses 12
// significant digits so repeated runs are byte-identical.
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, bool include_mu);

// CLI entry points. Output goes to cfg.output_path, or stdout when empty;
// fig3 additionally emits fixed-mu slices (separate *_mu*.csv files next
// to the main output, or '#'-separated sections on stdout).
void run_fig1(const RunConfig& cfg);
void run_fig2(const RunConfig& cfg);
void run_fig3(const RunConfig& cfg);
void run_fig4(const RunConfig& cfg, double mu = 0.5);
void run_sweep(const RunConfig& cfg, std::optional<double> mu);

}  // namespace ergo
