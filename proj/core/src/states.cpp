#include "ergo/states.hpp"

#include <cmath>
#include <string>

namespace ergo {

namespace {

constexpr double state_tol = 1e-10;

}  // namespace

DensityMatrix make_density(const Matrix& m) {
  if (m.dim() != 2 && m.dim() != 4) {
    throw InvalidState("state dimension must be 2 or 4, got " + std::to_string(m.dim()));
  }
  const double herm = hermiticity_residual(m);
  if (herm > state_tol) {
    throw InvalidState("Hermiticity violated: residual " + std::to_string(herm));
  }
  const complex_t tr = m.trace();
  if (std::abs(tr - complex_t{1.0}) > state_tol) {
    throw InvalidState("trace violated: |tr - 1| = " + std::to_string(std::abs(tr - complex_t{1.0})));
  }
  const EigenSystem eig = hermitian_eigendecompose(m, state_tol);
  const double lambda_min = eig.eigenvalues[0];
  if (lambda_min < -state_tol) {
    throw InvalidState("positivity violated: smallest eigenvalue " + std::to_string(lambda_min));
  }
  if (lambda_min >= 0.0) return DensityMatrix(m);

  // Clip eigenvalue dust in [-1e-10, 0) to zero and rebuild.
  const std::size_t n = m.dim();
  Matrix clipped(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = std::max(eig.eigenvalues[k], 0.0);
    if (lambda == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        clipped(i, j) += lambda * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return DensityMatrix(clipped);
}

DensityMatrix classically_correlated(const std::array<double, 4>& joint_probabilities) {
  double sum = 0.0;
  for (double p : joint_probabilities) {
    if (p < 0.0) {
      throw InvalidProbabilityTable("negative weight " + std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidProbabilityTable("weights sum to " + std::to_string(sum) + ", expected 1");
  }
  Matrix m(4);
  for (std::size_t k = 0; k < 4; ++k) m(k, k) = joint_probabilities[k];
  return make_density(m);
}

namespace detail {

Matrix partial_trace_ancilla_raw(const Matrix& bipartite) {
  if (bipartite.dim() != 4) {
    throw DimensionMismatch("partial trace requires a 4x4 system-ancilla matrix");
  }
  Matrix out(2);
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t)
      out(s, t) = bipartite(bipartite_index(s, 0), bipartite_index(t, 0)) +
                  bipartite(bipartite_index(s, 1), bipartite_index(t, 1));
  return out;
}

}  // namespace detail

DensityMatrix partial_trace_ancilla(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionMismatch("partial_trace_ancilla requires a system-ancilla state");
  }
  return make_density(detail::partial_trace_ancilla_raw(rho.matrix()));
}

bool is_diagonal_in_computational_product_basis(const DensityMatrix& rho, double tol) {
  const Matrix& m = rho.matrix();
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::abs(m(i, j)) >= tol) return false;
  return true;
}

}  // namespace ergo
