#include "ergo/channels.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ergo {

namespace {

constexpr double completeness_tol = 1e-10;

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ParameterOutOfRange(std::string(name) + " = " + std::to_string(value) +
                              " outside [0, 1]");
  }
}

Matrix kraus_sum(const std::vector<Matrix>& operators, const Matrix& rho) {
  Matrix out(rho.dim());
  for (const Matrix& k : operators) out += k * rho * dagger(k);
  return out;
}

}  // namespace

double completeness_residual(const std::vector<Matrix>& operators) {
  const std::size_t dim = operators.front().dim();
  Matrix sum(dim);
  for (const Matrix& k : operators) sum += dagger(k) * k;
  return max_abs_diff(sum, Matrix::identity(dim));
}

KrausChannel KrausChannel::from_operators(std::vector<Matrix> operators) {
  if (operators.empty()) {
    throw DimensionMismatch("a Kraus channel needs at least one operator");
  }
  const std::size_t dim = operators.front().dim();
  for (const Matrix& k : operators) {
    if (k.dim() != dim) {
      throw DimensionMismatch("Kraus operators must share one dimension");
    }
  }
  const double residual = completeness_residual(operators);
  if (residual > completeness_tol) {
    throw ParameterOutOfRange("CPTP completeness residual " + std::to_string(residual) +
                              " exceeds " + std::to_string(completeness_tol));
  }
  return KrausChannel(std::move(operators));
}

MemoryChannelSpec::MemoryChannelSpec(double gamma_in, double mu_in)
    : gamma(gamma_in), mu(mu_in) {
  check_unit_interval(gamma, "gamma");
  check_unit_interval(mu, "mu");
}

KrausChannel amplitude_damping(double gamma) {
  check_unit_interval(gamma, "gamma");
  const Matrix k0(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)});
  const Matrix k1(2, {0.0, std::sqrt(gamma), 0.0, 0.0});
  return KrausChannel::from_operators({k0, k1});
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.input_dim() != rho.dim()) {
    throw DimensionMismatch("channel dimension " + std::to_string(channel.input_dim()) +
                            " does not match state dimension " + std::to_string(rho.dim()));
  }
  return make_density(kraus_sum(channel.operators(), rho.matrix()));
}

DensityMatrix apply_local_to_system(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.input_dim() != 2 || rho.dim() != 4) {
    throw DimensionMismatch("local application needs a qubit channel and a system-ancilla state");
  }
  const Matrix id2 = Matrix::identity(2);
  std::vector<Matrix> lifted;
  lifted.reserve(channel.operators().size());
  for (const Matrix& k : channel.operators()) lifted.push_back(kron(k, id2));
  return make_density(kraus_sum(lifted, rho.matrix()));
}

bool is_unital(const KrausChannel& channel, double tol) {
  const std::size_t dim = channel.input_dim();
  const Matrix mixed = (1.0 / static_cast<double>(dim)) * Matrix::identity(dim);
  const Matrix image = kraus_sum(channel.operators(), mixed);
  return max_abs_diff(image, mixed) <= tol;
}

MemoryKrausBranches memory_amplitude_damping(const MemoryChannelSpec& spec) {
  const KrausChannel single = amplitude_damping(spec.gamma);

  std::vector<Matrix> uncorrelated;
  uncorrelated.reserve(4);
  for (const Matrix& ki : single.operators())
    for (const Matrix& kj : single.operators()) uncorrelated.push_back(kron(ki, kj));

  // Correlated branch acting jointly on both uses.
  Matrix e00 = Matrix::identity(4);
  e00(3, 3) = std::sqrt(1.0 - spec.gamma);
  Matrix e11(4);
  e11(0, 3) = std::sqrt(spec.gamma);

  return MemoryKrausBranches{KrausChannel::from_operators(std::move(uncorrelated)),
                             KrausChannel::from_operators({e00, e11})};
}

DensityMatrix apply_memory(const MemoryChannelSpec& spec, const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionMismatch("memory channel acts on system-ancilla states");
  }
  const MemoryKrausBranches branches = memory_amplitude_damping(spec);
  Matrix out = (complex_t{1.0 - spec.mu}) *
               kraus_sum(branches.uncorrelated.operators(), rho.matrix());
  out += complex_t{spec.mu} * kraus_sum(branches.correlated.operators(), rho.matrix());
  return make_density(out);
}

}  // namespace ergo
