#include <random>

#include <benchmark/benchmark.h>

#include "qlar/qaoa.hpp"

using namespace qlar;

namespace {

IsingModel random_model(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  IsingModel model;
  model.n = n;
  for (int i = 0; i < n; ++i) model.fields.push_back(u(rng));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) model.couplings.push_back({i, j, u(rng)});
  return model;
}

QaoaParams fixed_params(int p) {
  QaoaParams params;
  for (int l = 0; l < p; ++l) {
    params.gammas.push_back(0.3 + 0.1 * l);
    params.betas.push_back(0.7 - 0.1 * l);
  }
  return params;
}

void BM_PrecomputeEnergies(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IsingModel model = random_model(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(precompute_energies(model));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_PrecomputeEnergies)->DenseRange(10, 18, 2)->Complexity();

void BM_Evolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnergyTable table = precompute_energies(random_model(n, 2));
  const QaoaParams params = fixed_params(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(table, params));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_Evolve)->DenseRange(10, 16, 1)->Complexity();

void BM_Expectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const EnergyTable table = precompute_energies(random_model(n, 3));
  const Statevector psi = evolve(table, fixed_params(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(psi, table));
  }
}
BENCHMARK(BM_Expectation)->DenseRange(12, 18, 2);

void BM_Sample(benchmark::State& state) {
  const EnergyTable table = precompute_energies(random_model(15, 4));
  const Statevector psi = evolve(table, fixed_params(5));
  const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(psi, shots, 9));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_Sample)->Arg(10'000)->Arg(100'000)->Arg(250'000);

}  // namespace

BENCHMARK_MAIN();
