#pragma once

#include <array>

#include "ergo/matrix.hpp"

namespace ergo {

// Basis convention, fixed across the library: index 0 is the excited state
// |e>, index 1 the ground state |g|. Bipartite (system (x) ancilla)
// indices are 2*system + ancilla, so the product basis order is
// |ee>, |eg>, |ge>, |gg>. With this ordering the amplitude-damping Kraus
// operators pump population toward |e>.
inline constexpr std::size_t excited_index = 0;
inline constexpr std::size_t ground_index = 1;

constexpr std::size_t bipartite_index(std::size_t system, std::size_t ancilla) {
  return 2 * system + ancilla;
}

enum class StateLayout { single_qubit, system_ancilla };

// Validated quantum state: Hermitian within 1e-10, unit trace within
// 1e-10, and positive semidefinite up to -1e-10 of numerical dust.
// Eigenvalues in [-1e-10, 0) are clipped to zero at construction;
// anything lower is rejected. Instances are immutable after validation.
class DensityMatrix {
 public:
  const Matrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }
  StateLayout layout() const {
    return dim() == 2 ? StateLayout::single_qubit : StateLayout::system_ancilla;
  }

 private:
  friend DensityMatrix make_density(const Matrix& m);
  explicit DensityMatrix(Matrix m) : mat_(m) {}
  Matrix mat_;
};

// Validates m as a density matrix of dimension 2 or 4. Throws InvalidState
// naming the violated invariant (Hermiticity, trace, or positivity).
DensityMatrix make_density(const Matrix& m);

// Builds sum_ij p_ij |i><i| (x) |j><j| from a joint probability table
// indexed by bipartite_index(i, j). Throws InvalidProbabilityTable when a
// weight is negative or the table does not sum to 1 within 1e-12.
DensityMatrix classically_correlated(const std::array<double, 4>& joint_probabilities);

// Trace over the ancilla factor of a system (x) ancilla state.
DensityMatrix partial_trace_ancilla(const DensityMatrix& rho);

// True iff every off-diagonal entry has magnitude below tol. The
// computational product basis is the only product basis inspected.
bool is_diagonal_in_computational_product_basis(const DensityMatrix& rho, double tol);

namespace detail {
// Unnormalized partial trace over the ancilla of a raw 4x4 matrix.
Matrix partial_trace_ancilla_raw(const Matrix& bipartite);
}  // namespace detail

}  // namespace ergo
