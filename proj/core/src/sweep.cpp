#include "ergo/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>

#include "ergo/channels.hpp"

namespace ergo {

namespace {

DensityMatrix initial_classical_state() {
  return classically_correlated({0.5, 0.0, 0.0, 0.5});
}

double grid_value(int index, int points) {
  return static_cast<double>(index) / static_cast<double>(points - 1);
}

SweepRecord evaluate_point(const DensityMatrix& state, const QubitHamiltonian& h,
                           const OptimizerSettings& opt, double gamma, double mu) {
  const GainResult result = daemonic_gain(state, h, opt);
  SweepRecord record{gamma, mu, result.plain_ergotropy, result.daemonic_at_opt,
                     result.gain, result.optimal_theta};
  if (record.daemonic_gain < -1e-9 ||
      std::abs(record.daemonic_gain - (record.daemonic_ergotropy - record.ergotropy)) > 1e-9) {
    throw ConsistencyError("sweep record violates its gain invariants");
  }
  return record;
}

std::string format_value(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

void write_to_output(const RunConfig& cfg, const std::vector<SweepRecord>& records,
                     bool include_mu) {
  if (cfg.output_path.empty()) {
    write_csv(std::cout, records, include_mu);
    if (!std::cout.good()) throw IoFailure("failed writing to stdout");
    return;
  }
  std::ofstream file(cfg.output_path);
  if (!file) throw IoFailure("cannot open " + cfg.output_path);
  write_csv(file, records, include_mu);
  if (!file.good()) throw IoFailure("failed writing " + cfg.output_path);
}

std::string slice_path(const std::string& base, double mu) {
  const std::filesystem::path p(base);
  std::string label = format_value(mu);
  std::filesystem::path out = p.parent_path();
  out /= p.stem().string() + "_mu" + label + p.extension().string();
  return out.string();
}

}  // namespace

void RunConfig::validate() const {
  if (!(omega > 0.0)) {
    throw ParameterOutOfRange("omega must be positive");
  }
  if (gamma_steps < 2 || mu_steps < 2 || theta_grid_steps < 2) {
    throw ParameterOutOfRange("step counts must be at least 2");
  }
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) {
    throw ParameterOutOfRange("tolerance must lie in (0, 1e-3]");
  }
}

OptimizerSettings RunConfig::optimizer() const {
  OptimizerSettings opt;
  opt.theta_points = theta_grid_steps;
  return opt;
}

std::vector<SweepRecord> sweep_local_damping(const RunConfig& cfg) {
  cfg.validate();
  const QubitHamiltonian h(cfg.omega);
  const OptimizerSettings opt = cfg.optimizer();
  const DensityMatrix initial = initial_classical_state();
  std::vector<SweepRecord> records;
  records.reserve(cfg.gamma_steps);
  for (int i = 0; i < cfg.gamma_steps; ++i) {
    const double gamma = grid_value(i, cfg.gamma_steps);
    const DensityMatrix state = apply_local_to_system(amplitude_damping(gamma), initial);
    records.push_back(
        evaluate_point(state, h, opt, gamma, std::numeric_limits<double>::quiet_NaN()));
  }
  return records;
}

std::vector<SweepRecord> sweep_memory_damping(const RunConfig& cfg, double mu) {
  cfg.validate();
  const QubitHamiltonian h(cfg.omega);
  const OptimizerSettings opt = cfg.optimizer();
  const DensityMatrix initial = initial_classical_state();
  std::vector<SweepRecord> records;
  records.reserve(cfg.gamma_steps);
  for (int i = 0; i < cfg.gamma_steps; ++i) {
    const double gamma = grid_value(i, cfg.gamma_steps);
    const DensityMatrix state = apply_memory(MemoryChannelSpec(gamma, mu), initial);
    records.push_back(evaluate_point(state, h, opt, gamma, mu));
  }
  return records;
}

std::vector<SweepRecord> sweep_memory_damping_grid(const RunConfig& cfg) {
  cfg.validate();
  const QubitHamiltonian h(cfg.omega);
  const OptimizerSettings opt = cfg.optimizer();
  const DensityMatrix initial = initial_classical_state();
  std::vector<SweepRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.gamma_steps) * cfg.mu_steps);
  for (int i = 0; i < cfg.gamma_steps; ++i) {
    const double gamma = grid_value(i, cfg.gamma_steps);
    for (int j = 0; j < cfg.mu_steps; ++j) {
      const double mu = grid_value(j, cfg.mu_steps);
      const DensityMatrix state = apply_memory(MemoryChannelSpec(gamma, mu), initial);
      records.push_back(evaluate_point(state, h, opt, gamma, mu));
    }
  }
  return records;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, bool include_mu) {
  os << (include_mu
             ? "gamma,mu,ergotropy,daemonic_ergotropy,daemonic_gain,optimal_theta\n"
             : "gamma,ergotropy,daemonic_ergotropy,daemonic_gain,optimal_theta\n");
  for (const SweepRecord& r : records) {
    os << format_value(r.gamma) << ',';
    if (include_mu) os << format_value(r.mu) << ',';
    os << format_value(r.ergotropy) << ',' << format_value(r.daemonic_ergotropy) << ','
       << format_value(r.daemonic_gain) << ',' << format_value(r.optimal_theta) << '\n';
  }
}

void run_fig1(const RunConfig& cfg) {
  write_to_output(cfg, sweep_local_damping(cfg), /*include_mu=*/false);
}

void run_fig2(const RunConfig& cfg) {
  write_to_output(cfg, sweep_memory_damping_grid(cfg), /*include_mu=*/true);
}

void run_fig3(const RunConfig& cfg) {
  const std::vector<SweepRecord> grid = sweep_memory_damping_grid(cfg);
  constexpr double slice_mus[] = {0.0, 0.5, 1.0};
  if (cfg.output_path.empty()) {
    write_csv(std::cout, grid, /*include_mu=*/true);
    for (double mu : slice_mus) {
      std::cout << "# slice mu=" << format_value(mu) << '\n';
      write_csv(std::cout, sweep_memory_damping(cfg, mu), /*include_mu=*/true);
    }
    if (!std::cout.good()) throw IoFailure("failed writing to stdout");
    return;
  }
  write_to_output(cfg, grid, /*include_mu=*/true);
  for (double mu : slice_mus) {
    RunConfig slice_cfg = cfg;
    slice_cfg.output_path = slice_path(cfg.output_path, mu);
    write_to_output(slice_cfg, sweep_memory_damping(cfg, mu), /*include_mu=*/true);
  }
}

void run_fig4(const RunConfig& cfg, double mu) {
  write_to_output(cfg, sweep_memory_damping(cfg, mu), /*include_mu=*/true);
}

void run_sweep(const RunConfig& cfg, std::optional<double> mu) {
  if (mu.has_value()) {
    write_to_output(cfg, sweep_memory_damping(cfg, *mu), /*include_mu=*/true);
  } else {
    write_to_output(cfg, sweep_memory_damping_grid(cfg), /*include_mu=*/true);
  }
}

}  // namespace ergo
