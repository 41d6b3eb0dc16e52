// Shared helpers and independent oracles for the test suite. The oracles
// below build their operators and formulas from scratch so they do not
// share a code path with the library internals they check.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ergo/matrix.hpp"
#include "ergo/states.hpp"

namespace ergo::test {

inline std::mt19937_64 seeded_rng(std::uint64_t salt) {
  return std::mt19937_64{0x9e3779b97f4a7c15ULL ^ salt};
}

inline Matrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = complex_t{u(rng), u(rng)};
  return m;
}

inline Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const Matrix a = random_matrix(dim, rng);
  Matrix h(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

// Ginibre state: G G^dagger scaled to unit trace.
inline DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const Matrix g = random_matrix(dim, rng);
  Matrix rho = g * dagger(g);
  rho *= complex_t{1.0 / std::real(rho.trace())};
  return make_density(rho);
}

// Minimal energy over every permutation pairing of populations with
// energy levels; equals the passive energy.
inline double brute_force_passive_energy(std::vector<double> populations,
                                         std::vector<double> energies) {
  std::vector<std::size_t> perm(populations.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  double best = std::numeric_limits<double>::infinity();
  do {
    double energy = 0.0;
    for (std::size_t k = 0; k < perm.size(); ++k) energy += populations[perm[k]] * energies[k];
    best = std::min(best, energy);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Hand-built two-use damping Kraus operators applied term by term:
// (1 - mu) sum_ij (K_i (x) K_j) rho (.)^dagger + mu sum_k E_kk rho (.)^dagger.
inline Matrix direct_memory_apply(double gamma, double mu, const Matrix& rho) {
  const double root_keep = std::sqrt(1.0 - gamma);
  const double root_damp = std::sqrt(gamma);
  const Matrix k0(2, {1.0, 0.0, 0.0, root_keep});
  const Matrix k1(2, {0.0, root_damp, 0.0, 0.0});

  Matrix out(4);
  for (const Matrix& ki : {k0, k1}) {
    for (const Matrix& kj : {k0, k1}) {
      const Matrix e = kron(ki, kj);
      out += complex_t{1.0 - mu} * (e * rho * dagger(e));
    }
  }
  Matrix e00(4);
  e00(0, 0) = 1.0;
  e00(1, 1) = 1.0;
  e00(2, 2) = 1.0;
  e00(3, 3) = root_keep;
  Matrix e11(4);
  e11(0, 3) = root_damp;
  for (const Matrix& e : {e00, e11}) out += complex_t{mu} * (e * rho * dagger(e));
  return out;
}

}  // namespace ergo::test
