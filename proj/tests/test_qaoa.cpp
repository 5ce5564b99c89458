#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qlar/qaoa.hpp"

using namespace qlar;
using testing::utility_instance;

namespace {

IsingModel random_model(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  IsingModel model;
  model.n = n;
  model.offset = u(rng);
  for (int i = 0; i < n; ++i) model.fields.push_back(u(rng));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) model.couplings.push_back({i, j, u(rng)});
  return model;
}

QaoaParams random_params(int p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  QaoaParams params;
  for (int l = 0; l < p; ++l) {
    params.gammas.push_back(u(rng));
    params.betas.push_back(u(rng));
  }
  return params;
}

IsingModel single_z() {
  IsingModel model;
  model.n = 1;
  model.fields = {1.0};
  return model;
}

}  // namespace

TEST_SUITE("qaoa") {

TEST_CASE("energy table basics") {
  IsingModel trivial;
  trivial.n = 1;
  trivial.fields = {0.0};
  trivial.offset = 3.0;
  const EnergyTable t = precompute_energies(trivial);
  CHECK(t.energies == std::vector<double>{3.0, 3.0});

  const LarInstance inst = utility_instance();
  const IsingModel model = to_ising(encode_qubo(inst.graph, inst.policy));
  CHECK(precompute_energies(model).energies.size() == 32768);
}

TEST_CASE("energy table matches direct evaluation") {
  std::mt19937_64 rng(31);
  const IsingModel model = random_model(10, rng);
  const EnergyTable t = precompute_energies(model);
  for (int trial = 0; trial < 50; ++trial) {
    const Bitstring s = rng() % (Bitstring{1} << 10);
    CHECK(t.energies[s] ==
          doctest::Approx(ising_energy(model, s)).epsilon(1e-12));
  }
}

TEST_CASE("qubit cap is enforced") {
  std::mt19937_64 rng(37);
  const IsingModel model = random_model(5, rng);
  CHECK_THROWS_AS(precompute_energies(model, 4), CapacityError);
}

TEST_CASE("initial state is the uniform superposition") {
  const Statevector one = initial_state(1);
  CHECK(one.amplitudes[0].real() == doctest::Approx(0.70710678118654752));
  CHECK(one.amplitudes[1].real() == doctest::Approx(0.70710678118654752));

  const Statevector two = initial_state(2);
  for (const auto& a : two.amplitudes) {
    CHECK(a.real() == doctest::Approx(0.5));
    CHECK(a.imag() == 0.0);
  }

  const Statevector big = initial_state(15);
  CHECK(big.amplitudes.size() == 32768);
  CHECK(std::abs(big.norm_squared() - 1.0) < 1e-12);
}

TEST_CASE("zero angles and zero depth are the identity") {
  std::mt19937_64 rng(41);
  const IsingModel model = random_model(6, rng);
  const Statevector reference = initial_state(6);

  QaoaParams zeros;
  zeros.gammas.assign(3, 0.0);
  zeros.betas.assign(3, 0.0);
  const Statevector evolved = evolve(model, zeros);
  for (std::size_t s = 0; s < reference.amplitudes.size(); ++s)
    CHECK(evolved.amplitudes[s] == reference.amplitudes[s]);

  const Statevector empty = evolve(model, QaoaParams{});
  for (std::size_t s = 0; s < reference.amplitudes.size(); ++s)
    CHECK(empty.amplitudes[s] == reference.amplitudes[s]);
}

TEST_CASE("single-qubit closed form: probabilities and expectation") {
  const IsingModel model = single_z();
  const EnergyTable table = precompute_energies(model);
  for (int gi = 0; gi < 10; ++gi) {
    for (int bi = 0; bi < 10; ++bi) {
      const double gamma = -3.0 + 0.65 * gi;
      const double beta = -3.0 + 0.65 * bi;
      const Statevector state = evolve(table, QaoaParams{{gamma}, {beta}});
      const double expected0 =
          0.5 * (1.0 + std::sin(2 * beta) * std::sin(2 * gamma));
      CHECK(std::abs(std::norm(state.amplitudes[0]) - expected0) < 1e-9);
      CHECK(std::abs(std::norm(state.amplitudes[1]) - (1.0 - expected0)) <
            1e-9);
      CHECK(std::abs(expectation(state, table) -
                     std::sin(2 * beta) * std::sin(2 * gamma)) < 1e-9);

      const OutcomeDistribution dist = exact_distribution(state);
      CHECK(std::abs(dist.entries.at(0) - expected0) < 1e-9);
    }
  }
}

TEST_CASE("expectation of uniform and basis states") {
  std::mt19937_64 rng(43);
  const IsingModel model = random_model(8, rng);
  const EnergyTable table = precompute_energies(model);

  const Statevector uniform = initial_state(8);
  double mean = 0.0;
  for (double e : table.energies) mean += e;
  mean /= static_cast<double>(table.energies.size());
  CHECK(expectation(uniform, table) == doctest::Approx(mean).epsilon(1e-12));

  Statevector basis;
  basis.n_qubits = 8;
  basis.amplitudes.assign(256, {0.0, 0.0});
  basis.amplitudes[137] = {1.0, 0.0};
  CHECK(expectation(basis, table) == table.energies[137]);
  const OutcomeDistribution dist = exact_distribution(basis);
  CHECK(dist.entries.size() == 1);
  CHECK(dist.entries.at(137) == 1.0);
}

TEST_CASE("exact distribution of the uniform two-qubit state") {
  const OutcomeDistribution dist = exact_distribution(initial_state(2));
  CHECK(dist.mode == DistributionMode::exact);
  CHECK(dist.entries.size() == 4);
  for (const auto& [s, p] : dist.entries)
    CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("sampling a basis state always returns it") {
  Statevector basis;
  basis.n_qubits = 4;
  basis.amplitudes.assign(16, {0.0, 0.0});
  basis.amplitudes[9] = {0.0, 1.0};
  const OutcomeDistribution dist = sample(basis, 5000, 99);
  CHECK(dist.mode == DistributionMode::sampled);
  CHECK(dist.entries.size() == 1);
  CHECK(dist.entries.at(9) == 1.0);
}

TEST_CASE("fair coin at a million shots") {
  const OutcomeDistribution dist = sample(initial_state(1), 1'000'000, 7);
  CHECK(std::abs(dist.entries.at(0) - 0.5) < 0.005);
}

TEST_CASE("distinct outcomes at 10k shots from the uniform 15-qubit state") {
  const OutcomeDistribution dist = sample(initial_state(15), 10'000, 5);
  CHECK(dist.entries.size() > 8000);
  CHECK(dist.entries.size() < 10'000);
}

TEST_CASE("sampling is reproducible and shot-normalized") {
  std::mt19937_64 rng(47);
  const Statevector state = evolve(random_model(8, rng), random_params(3, rng));
  const OutcomeDistribution a = sample(state, 2000, 123);
  const OutcomeDistribution b = sample(state, 2000, 123);
  CHECK(a.entries == b.entries);
  double total = 0.0;
  for (const auto& [s, p] : a.entries) {
    const double count = p * 2000.0;
    CHECK(std::abs(count - std::round(count)) < 1e-9);
    total += p;
  }
  CHECK(std::abs(total - 1.0) < 1e-9);
  CHECK_THROWS_AS(sample(state, 0, 1), InstanceError);
}

TEST_CASE("norm preservation under random evolutions") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);  // up to 15
    const int p = 1 + static_cast<int>(rng() % 8);
    const Statevector state =
        evolve(random_model(n, rng), random_params(p, rng));
    CHECK(std::abs(state.norm_squared() - 1.0) < 1e-9);
  }
}

TEST_CASE("constant offset is a global phase") {
  std::mt19937_64 rng(59);
  const IsingModel model = random_model(9, rng);
  IsingModel shifted = model;
  const double w = 17.5;
  shifted.offset += w;
  const QaoaParams params = random_params(4, rng);

  const Statevector a = evolve(model, params);
  const Statevector b = evolve(shifted, params);
  const OutcomeDistribution da = exact_distribution(a);
  const OutcomeDistribution db = exact_distribution(b);
  for (const auto& [s, p] : da.entries)
    CHECK(std::abs(p - db.entries.at(s)) < 1e-12);

  const EnergyTable ta = precompute_energies(model);
  const EnergyTable tb = precompute_energies(shifted);
  CHECK(std::abs(expectation(b, tb) - expectation(a, ta) - w) < 1e-9);
}

TEST_CASE("mixer-only evolution keeps the distribution uniform") {
  std::mt19937_64 rng(61);
  const IsingModel model = random_model(10, rng);
  QaoaParams params = random_params(4, rng);
  params.gammas.assign(4, 0.0);
  const Statevector state = evolve(model, params);
  const double expected = 1.0 / 1024.0;
  for (const auto& a : state.amplitudes)
    CHECK(std::abs(std::norm(a) - expected) < 1e-12);
}

TEST_CASE("sampled distributions converge toward the exact one") {
  // Expected TV for k effectively-occupied outcomes at S shots is about
  // sqrt(k / (2*pi*S)); with ~32768 near-uniform outcomes it stays near
  // 0.07 even at a million shots, so the check is on the convergence
  // rate (roughly 1/sqrt(S)) plus a 2x-margin analytic ceiling.
  std::mt19937_64 rng(67);
  const LarInstance inst = utility_instance();
  const IsingModel model = to_ising(encode_qubo(inst.graph, inst.policy));
  const Statevector state = evolve(model, random_params(5, rng));
  const OutcomeDistribution exact = exact_distribution(state);

  const auto tv_at = [&](std::uint64_t shots) {
    const OutcomeDistribution sampled = sample(state, shots, 321);
    double tv = 0.0;
    for (const auto& [s, p] : exact.entries) {
      const auto it = sampled.entries.find(s);
      tv += std::abs(p - (it == sampled.entries.end() ? 0.0 : it->second));
    }
    for (const auto& [s, p] : sampled.entries)
      if (!exact.entries.count(s)) tv += p;
    return tv / 2.0;
  };

  double sum_sqrt_p = 0.0;
  for (const auto& [s, p] : exact.entries) sum_sqrt_p += std::sqrt(p);
  const auto ceiling = [&](std::uint64_t shots) {
    return sum_sqrt_p / std::sqrt(2.0 * 3.14159265358979 *
                                  static_cast<double>(shots));
  };

  const double tv_small = tv_at(10'000);
  const double tv_large = tv_at(1'000'000);
  CHECK(tv_large < tv_small);
  CHECK(tv_large < tv_small / 5.0);  // 1/sqrt(100) = 10x expected
  CHECK(tv_large < 2.0 * ceiling(1'000'000));
}

TEST_CASE("evolve cost roughly doubles per added qubit") {
  std::mt19937_64 rng(71);
  const QaoaParams params = random_params(4, rng);
  const auto median_time = [&](int n) {
    const IsingModel model = random_model(n, rng);
    const EnergyTable table = precompute_energies(model);
    std::vector<double> times;
    for (int rep = 0; rep < 5; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const Statevector state = evolve(table, params);
      times.push_back(std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count() +
                      1e-12 * std::norm(state.amplitudes[0]));
    }
    std::sort(times.begin(), times.end());
    return times[2];
  };
  const double t12 = median_time(12);
  const double t15 = median_time(15);
  const double per_qubit = std::cbrt(t15 / t12);
  CHECK(per_qubit > 1.6);
  CHECK(per_qubit < 3.0);
}

}  // TEST_SUITE
