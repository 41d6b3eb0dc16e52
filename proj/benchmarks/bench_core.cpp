#include <benchmark/benchmark.h>

#include <random>

#include "ergo/channels.hpp"
#include "ergo/matrix.hpp"
#include "ergo/work.hpp"

namespace {

ergo::Matrix fixed_hermitian4() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ergo::Matrix a(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = ergo::complex_t{u(rng), u(rng)};
  ergo::Matrix h(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

ergo::DensityMatrix damped_state(double gamma) {
  return ergo::apply_local_to_system(ergo::amplitude_damping(gamma),
                                     ergo::classically_correlated({0.5, 0.0, 0.0, 0.5}));
}

void BM_HermitianEigendecompose4(benchmark::State& state) {
  const ergo::Matrix h = fixed_hermitian4();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergo::hermitian_eigendecompose(h));
  }
}
BENCHMARK(BM_HermitianEigendecompose4);

void BM_ApplyMemoryChannel(benchmark::State& state) {
  const ergo::DensityMatrix rho = ergo::classically_correlated({0.5, 0.0, 0.0, 0.5});
  const ergo::MemoryChannelSpec spec(0.4, 0.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergo::apply_memory(spec, rho));
  }
}
BENCHMARK(BM_ApplyMemoryChannel);

void BM_DaemonicErgotropy(benchmark::State& state) {
  const ergo::DensityMatrix rho = damped_state(0.3);
  const ergo::QubitHamiltonian h;
  const ergo::ProjectivePair pair = ergo::qubit_projectors(0.7, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergo::daemonic_ergotropy(rho, h, pair));
  }
}
BENCHMARK(BM_DaemonicErgotropy);

void BM_DaemonicGain(benchmark::State& state) {
  const ergo::DensityMatrix rho = damped_state(0.3);
  const ergo::QubitHamiltonian h;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergo::daemonic_gain(rho, h));
  }
}
BENCHMARK(BM_DaemonicGain);

}  // namespace

BENCHMARK_MAIN();
