#pragma once

#include <vector>

#include "ergo/matrix.hpp"
#include "ergo/states.hpp"

namespace ergo {

// A CPTP map in Kraus form: rho -> sum_i K_i rho K_i^dagger with
// sum_i K_i^dagger K_i = I within 1e-10. Immutable after construction.
class KrausChannel {
 public:
  static KrausChannel from_operators(std::vector<Matrix> operators);

  const std::vector<Matrix>& operators() const { return operators_; }
  std::size_t input_dim() const { return operators_.front().dim(); }

 private:
  explicit KrausChannel(std::vector<Matrix> operators) : operators_(std::move(operators)) {}
  std::vector<Matrix> operators_;
};

// max-norm of sum_i K_i^dagger K_i - I for an arbitrary operator list.
double completeness_residual(const std::vector<Matrix>& operators);

// Two-use amplitude damping with partial memory: gamma is the damping
// strength, mu the memory coefficient, both in [0, 1].
struct MemoryChannelSpec {
  MemoryChannelSpec(double gamma, double mu);
  double gamma;
  double mu;
};

// Single-qubit amplitude damping. With the library basis ordering K_1 maps
// |g> to sqrt(gamma)|e>, so population is pumped toward the excited state.
KrausChannel amplitude_damping(double gamma);

// rho -> sum_i K_i rho K_i^dagger.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

// (Lambda (x) I)[rho]: the channel acts on the system qubit only.
DensityMatrix apply_local_to_system(const KrausChannel& channel, const DensityMatrix& rho);

// True iff the channel fixes the maximally mixed state within tol.
bool is_unital(const KrausChannel& channel, double tol);

// The two Kraus branches of the partial-memory channel: the uncorrelated
// branch {K_i (x) K_j} and the correlated branch {E_00, E_11}. Each branch
// is separately trace preserving.
struct MemoryKrausBranches {
  KrausChannel uncorrelated;
  KrausChannel correlated;
};

MemoryKrausBranches memory_amplitude_damping(const MemoryChannelSpec& spec);

// rho -> (1 - mu) * sum_ij (K_i (x) K_j) rho (.)^dagger
//        + mu * sum_k E_kk rho E_kk^dagger
DensityMatrix apply_memory(const MemoryChannelSpec& spec, const DensityMatrix& rho);

}  // namespace ergo
