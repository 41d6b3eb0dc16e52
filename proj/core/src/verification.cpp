#include "ergo/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

#include "ergo/channels.hpp"
#include "ergo/closed_form.hpp"
#include "ergo/states.hpp"
#include "ergo/work.hpp"

namespace ergo {

namespace {

constexpr double pi = std::numbers::pi;

std::mt19937_64 seeded_rng(std::uint64_t salt) {
  return std::mt19937_64{0x243f6a8885a308d3ULL ^ salt};
}

Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = complex_t{u(rng), u(rng)};
  Matrix h(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

// Ginibre construction: G G^dagger normalized to unit trace.
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex_t{u(rng), u(rng)};
  Matrix rho = g * dagger(g);
  rho *= complex_t{1.0 / std::real(rho.trace())};
  return make_density(rho);
}

CheckResult make_check(std::string name, double residual, double tol, std::string detail = "") {
  CheckResult c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tol;
  c.passed = residual <= tol;
  c.detail = std::move(detail);
  return c;
}

DensityMatrix initial_classical_state() {
  return classically_correlated({0.5, 0.0, 0.0, 0.5});
}

double grid_value(int index, int points) {
  return static_cast<double>(index) / static_cast<double>(points - 1);
}

}  // namespace

CheckResult check_kraus_completeness(const std::vector<Matrix>& operators, double tol,
                                     const std::string& detail) {
  return make_check("channels.cptp_completeness", completeness_residual(operators), tol,
                    detail);
}

std::vector<CheckResult> matrix_core_checks(const RunConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> checks;
  auto rng = seeded_rng(0x11);

  double reconstruction = 0.0;
  double unitarity = 0.0;
  double trace_gap = 0.0;
  double order_violation = 0.0;
  for (int sample = 0; sample < 1000; ++sample) {
    const std::size_t dim = sample < 500 ? 2 : 4;
    const Matrix h = random_hermitian(dim, rng);
    const EigenSystem eig = hermitian_eigendecompose(h);

    Matrix rebuilt(dim);
    double trace_sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      trace_sum += eig.eigenvalues[k];
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          rebuilt(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                           std::conj(eig.eigenvectors(j, k));
    }
    reconstruction = std::max(reconstruction, max_abs_diff(rebuilt, h));
    unitarity = std::max(unitarity, max_abs_diff(dagger(eig.eigenvectors) * eig.eigenvectors,
                                                 Matrix::identity(dim)));
    trace_gap = std::max(trace_gap, std::abs(trace_sum - std::real(h.trace())));
    for (std::size_t k = 0; k + 1 < dim; ++k)
      order_violation =
          std::max(order_violation, eig.eigenvalues[k] - eig.eigenvalues[k + 1]);
  }
  checks.push_back(make_check("matrix.eigen_reconstruction", reconstruction, cfg.tolerance,
                              "1000 seeded random Hermitian matrices, dims 2 and 4"));
  checks.push_back(make_check("matrix.eigen_unitarity", unitarity, cfg.tolerance));
  checks.push_back(make_check("matrix.eigen_trace_sum", trace_gap, cfg.tolerance));
  checks.push_back(
      make_check("matrix.eigen_ascending_order", std::max(order_violation, 0.0), 0.0));

  double associativity = 0.0;
  std::uniform_int_distribution<int> ints(-3, 3);
  for (int sample = 0; sample < 200; ++sample) {
    Matrix a(2), b(2), c(2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = static_cast<double>(ints(rng));
        b(i, j) = static_cast<double>(ints(rng));
        c(i, j) = static_cast<double>(ints(rng));
      }
    associativity =
        std::max(associativity, max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))));
  }
  checks.push_back(make_check("matrix.kron_associativity", associativity, 0.0,
                              "exact equality on integer-valued matrices"));
  return checks;
}

std::vector<CheckResult> channel_suite_checks(const RunConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> checks;
  constexpr int grid = 21;

  double completeness = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double gamma = grid_value(i, grid);
    completeness =
        std::max(completeness, completeness_residual(amplitude_damping(gamma).operators()));
    for (int j = 0; j < grid; ++j) {
      const MemoryKrausBranches branches =
          memory_amplitude_damping(MemoryChannelSpec(gamma, grid_value(j, grid)));
      completeness =
          std::max(completeness, completeness_residual(branches.uncorrelated.operators()));
      completeness =
          std::max(completeness, completeness_residual(branches.correlated.operators()));
    }
  }
  checks.push_back(make_check("channels.cptp_completeness", completeness, cfg.tolerance,
                              "amplitude damping and both memory branches, 21x21 grid"));

  // Unitality: amplitude damping must be non-unital for every gamma > 0;
  // the identity channel and an equal mixture of unitaries stay unital.
  constexpr double classification_tol = 1e-9;
  const Matrix id2 = Matrix::identity(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Matrix bit_flip(2, {0.0, inv_sqrt2, inv_sqrt2, 0.0});
  const KrausChannel identity_channel = KrausChannel::from_operators({id2});
  const KrausChannel unitary_mixture =
      KrausChannel::from_operators({inv_sqrt2 * id2, bit_flip});

  bool classification_ok = is_unital(identity_channel, classification_tol) &&
                           is_unital(unitary_mixture, classification_tol);
  const DensityMatrix mixed = make_density(0.5 * id2);
  double unital_residual =
      std::max(max_abs_diff(apply(identity_channel, mixed).matrix(), mixed.matrix()),
               max_abs_diff(apply(unitary_mixture, mixed).matrix(), mixed.matrix()));
  for (int i = 0; i < grid; ++i) {
    const double gamma = grid_value(i, grid);
    const bool unital = is_unital(amplitude_damping(gamma), classification_tol);
    if (gamma == 0.0 ? !unital : unital) classification_ok = false;
  }
  CheckResult unitality = make_check("channels.unitality_classification", unital_residual,
                                     classification_tol,
                                     "identity/unitary-mixture unital, damping non-unital");
  unitality.passed = unitality.passed && classification_ok;
  checks.push_back(unitality);

  auto rng = seeded_rng(0x22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double trace_drift = 0.0;
  double hermiticity_drift = 0.0;
  for (int sample = 0; sample < 200; ++sample) {
    const DensityMatrix in2 = random_density(2, rng);
    const DensityMatrix out2 = apply(amplitude_damping(unit(rng)), in2);
    trace_drift = std::max(trace_drift, std::abs(out2.matrix().trace() - complex_t{1.0}));
    hermiticity_drift = std::max(hermiticity_drift, hermiticity_residual(out2.matrix()));

    const DensityMatrix in4 = random_density(4, rng);
    const DensityMatrix out4 =
        apply_memory(MemoryChannelSpec(unit(rng), unit(rng)), in4);
    trace_drift = std::max(trace_drift, std::abs(out4.matrix().trace() - complex_t{1.0}));
    hermiticity_drift = std::max(hermiticity_drift, hermiticity_residual(out4.matrix()));
  }
  checks.push_back(make_check("channels.trace_preservation", trace_drift, 1e-12,
                              "random states through damping and memory channels"));
  checks.push_back(make_check("channels.hermiticity_preservation", hermiticity_drift, 1e-12));
  return checks;
}

std::vector<CheckResult> oracle_equivalence_checks(const RunConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> checks;
  const QubitHamiltonian h(1.0);
  const DensityMatrix initial = initial_classical_state();

  double memoryless_gap = 0.0;
  for (int i = 0; i < 101; ++i) {
    const double gamma = grid_value(i, 101);
    const DensityMatrix state = apply_local_to_system(amplitude_damping(gamma), initial);
    for (int k = 0; k < 181; ++k) {
      const double theta = pi * grid_value(k, 181);
      const double numeric = daemonic_ergotropy(state, h, qubit_projectors(theta, 0.0));
      memoryless_gap = std::max(
          memoryless_gap, std::abs(numeric - closed_form::memoryless_daemonic(gamma, theta)));
    }
  }
  checks.push_back(make_check("oracle.memoryless_daemonic", memoryless_gap, 1e-9,
                              "101x181 (gamma, theta) grid"));

  double memory_gap = 0.0;
  int degenerate_points = 0;
  double coefficient_gap = 0.0;
  double reduced_gap = 0.0;
  double normalization_gap = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double gamma = grid_value(i, 21);
    for (int j = 0; j < 21; ++j) {
      const double mu = grid_value(j, 21);
      const MemoryChannelSpec spec(gamma, mu);
      const DensityMatrix state = apply_memory(spec, initial);

      const std::array<double, 4> weights = closed_form::memory_output_coefficients(gamma, mu);
      for (std::size_t k = 0; k < 4; ++k) {
        coefficient_gap = std::max(
            coefficient_gap, std::abs(std::real(state.matrix()(k, k)) - weights[k]));
      }
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (r != c)
            coefficient_gap = std::max(coefficient_gap, std::abs(state.matrix()(r, c)));

      const DensityMatrix reduced = partial_trace_ancilla(state);
      const Matrix expected(2, {0.5 * (1.0 + gamma), 0.0, 0.0, 0.5 * (1.0 - gamma)});
      reduced_gap = std::max(reduced_gap, max_abs_diff(reduced.matrix(), expected));

      for (int k = 0; k < 61; ++k) {
        const double theta = pi * grid_value(k, 61);
        double oracle;
        closed_form::ConditionalPopulations pops;
        try {
          pops = closed_form::memory_conditional_populations(gamma, mu, theta);
          oracle = closed_form::memory_daemonic(gamma, mu, theta);
        } catch (const DegenerateOutcome&) {
          ++degenerate_points;  // gamma = 1 with theta in {0, pi}
          continue;
        }
        normalization_gap = std::max(
            normalization_gap,
            std::max(std::abs(pops.alpha0 + pops.beta0 - 1.0),
                     std::abs(pops.alpha1 + pops.beta1 - 1.0)));
        normalization_gap = std::max(
            normalization_gap,
            std::max({-pops.alpha0, pops.alpha0 - 1.0, -pops.alpha1, pops.alpha1 - 1.0, 0.0}));
        const double numeric = daemonic_ergotropy(state, h, qubit_projectors(theta, 0.0));
        memory_gap = std::max(memory_gap, std::abs(numeric - oracle));
      }
    }
  }
  checks.push_back(make_check(
      "oracle.memory_daemonic", memory_gap, 1e-9,
      "21x21x61 (gamma, mu, theta) grid; " + std::to_string(degenerate_points) +
          " degenerate corner points (gamma=1, theta in {0,pi}) skipped"));
  checks.push_back(make_check("oracle.transmitted_coefficients", coefficient_gap, 1e-12,
                              "diagonal weights and vanishing off-diagonals, 21x21 grid"));
  checks.push_back(make_check("oracle.reduced_state_mu_independence", reduced_gap, 1e-12,
                              "reduced state equals diag((1+gamma)/2, (1-gamma)/2) for all mu"));
  checks.push_back(
      make_check("oracle.population_normalization", normalization_gap, 1e-12,
                 "alpha_a + beta_a = 1 and alpha_a within [0, 1]"));
  return checks;
}

std::vector<CheckResult> structural_checks(const RunConfig& cfg) {
  cfg.validate();
  std::vector<CheckResult> checks;
  const QubitHamiltonian h(1.0);
  auto rng = seeded_rng(0x33);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double no_signaling = 0.0;
  double probability_sum_gap = 0.0;
  for (int sample = 0; sample < 1000; ++sample) {
    const DensityMatrix rho = random_density(4, rng);
    const ProjectivePair pair = qubit_projectors(pi * unit(rng), 2.0 * pi * unit(rng));
    const auto outcomes = measure_ancilla(rho, pair);
    probability_sum_gap = std::max(
        probability_sum_gap,
        std::abs(outcomes[0].probability + outcomes[1].probability - 1.0));
    Matrix average(2);
    for (const MeasurementOutcome& outcome : outcomes) {
      if (!outcome.conditional_state) continue;
      average += complex_t{outcome.probability} * outcome.conditional_state->matrix();
    }
    no_signaling = std::max(
        no_signaling, max_abs_diff(average, partial_trace_ancilla(rho).matrix()));
  }
  checks.push_back(make_check("work.no_signaling", no_signaling, 1e-12,
                              "1000 seeded random system-ancilla states"));
  checks.push_back(
      make_check("work.outcome_probability_normalization", probability_sum_gap, 1e-12));

  double negative_work = 0.0;
  double passive_work = 0.0;
  for (int sample = 0; sample < 300; ++sample) {
    const DensityMatrix rho = random_density(2, rng);
    const DensityMatrix sigma = passive_state(rho, h);
    negative_work =
        std::max(negative_work, -(mean_energy(rho, h) - mean_energy(sigma, h)));
    passive_work = std::max(passive_work, ergotropy(sigma, h));
  }
  checks.push_back(make_check("work.ergotropy_nonnegative", std::max(negative_work, 0.0),
                              1e-12, "mean energy never below the passive energy"));
  checks.push_back(make_check("work.passive_zero_ergotropy", passive_work, 1e-12));

  double diagonal_formula = 0.0;
  for (int i = 0; i < 101; ++i) {
    const double p = grid_value(i, 101);
    const DensityMatrix rho = make_density(Matrix(2, {p, 0.0, 0.0, 1.0 - p}));
    const double closed = std::max(2.0 * p - 1.0, 0.0);
    diagonal_formula = std::max(diagonal_formula, std::abs(ergotropy(rho, h) - closed));
    const QubitHamiltonian h2(2.0);
    diagonal_formula =
        std::max(diagonal_formula, std::abs(ergotropy(rho, h2) - 2.0 * closed));
  }
  checks.push_back(make_check("work.qubit_diagonal_formula", diagonal_formula, 1e-12,
                              "ergotropy = max(2p - 1, 0) * omega on a 101-point grid"));

  // Brute-force oracle: minimum of tr(P rho P^dagger H) over permutations.
  double permutation_gap = 0.0;
  for (int sample = 0; sample < 200; ++sample) {
    {
      const double p = unit(rng);
      const DensityMatrix rho = make_density(Matrix(2, {p, 0.0, 0.0, 1.0 - p}));
      const double brute = std::min(p * 1.0, (1.0 - p) * 1.0);
      const double passive = mean_energy(passive_state(rho, h), h);
      permutation_gap = std::max(permutation_gap, std::abs(brute - passive));
    }
    {
      std::array<double, 4> pops{unit(rng), unit(rng), unit(rng), unit(rng)};
      double total = pops[0] + pops[1] + pops[2] + pops[3];
      for (double& p : pops) p /= total;
      std::array<double, 4> energies{2.0 * unit(rng), 2.0 * unit(rng), 2.0 * unit(rng),
                                     2.0 * unit(rng)};
      Matrix rho_m(4);
      Matrix h_m(4);
      for (std::size_t k = 0; k < 4; ++k) {
        rho_m(k, k) = pops[k];
        h_m(k, k) = energies[k];
      }
      const DensityMatrix rho = make_density(rho_m);
      std::array<std::size_t, 4> perm{0, 1, 2, 3};
      double brute = std::numeric_limits<double>::infinity();
      do {
        double energy = 0.0;
        for (std::size_t k = 0; k < 4; ++k) energy += pops[perm[k]] * energies[k];
        brute = std::min(brute, energy);
      } while (std::next_permutation(perm.begin(), perm.end()));
      const double passive = mean_energy(passive_state(rho, h_m), h_m);
      permutation_gap = std::max(permutation_gap, std::abs(brute - passive));
    }
  }
  checks.push_back(make_check("work.passive_permutation_oracle", permutation_gap, 1e-12,
                              "exhaustive permutations at dims 2 (2) and 4 (24)"));

  // States produced by both pipelines, for the measurement invariances.
  std::vector<DensityMatrix> paper_states;
  const DensityMatrix initial = initial_classical_state();
  for (int i = 0; i < 11; ++i) {
    const double gamma = grid_value(i, 11);
    paper_states.push_back(apply_local_to_system(amplitude_damping(gamma), initial));
    for (double mu : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      paper_states.push_back(apply_memory(MemoryChannelSpec(gamma, mu), initial));
    }
  }

  double phi_spread = 0.0;
  double relabel_gap = 0.0;
  for (const DensityMatrix& state : paper_states) {
    for (int t = 0; t < 9; ++t) {
      const double theta = pi * grid_value(t, 9);
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (int f = 0; f < 13; ++f) {
        const double phi = 2.0 * pi * f / 13.0;
        const double value = daemonic_ergotropy(state, h, qubit_projectors(theta, phi));
        lo = std::min(lo, value);
        hi = std::max(hi, value);
        if (f < 3) {
          const double swapped =
              daemonic_ergotropy(state, h, qubit_projectors(pi - theta, phi + pi));
          relabel_gap = std::max(relabel_gap, std::abs(value - swapped));
        }
      }
      phi_spread = std::max(phi_spread, hi - lo);
    }
  }
  checks.push_back(make_check("work.phi_invariance", phi_spread, 1e-12,
                              "real-entry states from both pipelines"));
  checks.push_back(make_check("work.relabel_invariance", relabel_gap, 1e-12,
                              "projector swap via (theta, phi) -> (pi - theta, phi + pi)"));

  // Optimized daemonic ergotropy stays between the plain ergotropy and the
  // mean energy of the reduced state.
  double bound_violation = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double gamma = grid_value(i, 11);
    std::vector<DensityMatrix> states{
        apply_local_to_system(amplitude_damping(gamma), initial)};
    if (i % 2 == 0) {
      for (double mu : {0.0, 0.5, 1.0})
        states.push_back(apply_memory(MemoryChannelSpec(gamma, mu), initial));
    }
    for (const DensityMatrix& state : states) {
      const GainResult result = daemonic_gain(state, h);
      const double mean = mean_energy(partial_trace_ancilla(state), h);
      bound_violation = std::max(bound_violation, result.plain_ergotropy - result.daemonic_at_opt);
      bound_violation = std::max(bound_violation, result.daemonic_at_opt - mean);
    }
  }
  checks.push_back(make_check("work.gain_bounds", std::max(bound_violation, 0.0), 1e-9,
                              "plain ergotropy <= optimized daemonic <= mean energy"));
  return checks;
}

std::vector<CheckResult> run_verification(const RunConfig& cfg) {
  std::vector<CheckResult> all = matrix_core_checks(cfg);
  for (auto&& group : {channel_suite_checks(cfg), oracle_equivalence_checks(cfg),
                       structural_checks(cfg)}) {
    all.insert(all.end(), group.begin(), group.end());
  }
  return all;
}

bool write_verification_report(std::ostream& os, const std::vector<CheckResult>& checks) {
  bool all_passed = true;
  int passed = 0;
  for (const CheckResult& check : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %-40s residual=%.3e tol=%.1e",
                  check.passed ? "PASS" : "FAIL", check.name.c_str(), check.residual,
                  check.tolerance);
    os << line;
    if (!check.detail.empty()) os << "  (" << check.detail << ")";
    os << '\n';
    all_passed = all_passed && check.passed;
    if (check.passed) ++passed;
  }
  os << "verification: " << passed << "/" << checks.size() << " checks passed\n";
  return all_passed;
}

}  // namespace ergo
