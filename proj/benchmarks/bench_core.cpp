#include <benchmark/benchmark.h>

#include "mlur/criteria.hpp"
#include "mlur/experiment.hpp"
#include "mlur/quantum.hpp"
#include "mlur_cli/studies.hpp"

using namespace mlur;

static void BM_HermitianEigenvalues4(benchmark::State& state) {
  Rng rng(1);
  const DensityMatrix rho = random_separable_state(rng, 4);
  const ComplexMatrix pt = partial_transpose_second(rho.matrix());
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(pt));
}
BENCHMARK(BM_HermitianEigenvalues4);

static void BM_EvaluateL3(benchmark::State& state) {
  Rng rng(2);
  const DensityMatrix rho = density_from_pure(random_pure_state(rng));
  const ObservableSet l3 = l3_set();
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(rho, l3));
}
BENCHMARK(BM_EvaluateL3);

static void BM_RandomSeparableState(benchmark::State& state) {
  Rng rng(3);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_separable_state(rng, k));
}
BENCHMARK(BM_RandomSeparableState)->Arg(1)->Arg(6);

static void BM_LocalBound(benchmark::State& state) {
  const std::vector<ComplexMatrix> ops{pauli_x(), pauli_y(), pauli_z()};
  for (auto _ : state) benchmark::DoNotOptimize(local_bound(ops));
}
BENCHMARK(BM_LocalBound);

static void BM_SimulateAndEstimate(benchmark::State& state) {
  const DensityMatrix rho = noise_mixture(0.5, NoiseKind::Werner);
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cli::simulate_experiment(rho, shots, seed++));
}
BENCHMARK(BM_SimulateAndEstimate)->Arg(1000)->Arg(1000000);

static void BM_HaarStudy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::haar_study(BellKind::PsiMinus, 1000, 1, 1));
}
BENCHMARK(BM_HaarStudy)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
