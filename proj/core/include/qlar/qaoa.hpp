#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "qlar/bits.hpp"
#include "qlar/ising.hpp"

namespace qlar {

struct QaoaParams {
  std::vector<double> gammas;  // cost-phase angles, radians
  std::vector<double> betas;   // mixer angles, radians

  int depth() const { return static_cast<int>(gammas.size()); }
  void validate() const;

  // Flat layout [gamma_1..gamma_p, beta_1..beta_p], the shape the
  // optimizer works in.
  std::vector<double> flatten() const;
  static QaoaParams from_flat(const std::vector<double>& flat);
};

struct Statevector {
  std::vector<std::complex<double>> amplitudes;  // index s, bit b = (s>>b)&1
  int n_qubits = 0;

  double norm_squared() const;
};

// energies[s] = ising_energy at bitstring s, for all 2^N basis states.
struct EnergyTable {
  std::vector<double> energies;
  int n_qubits = 0;
};

enum class DistributionMode { exact, sampled };

struct OutcomeDistribution {
  std::map<Bitstring, double> entries;  // bitstring -> probability
  DistributionMode mode = DistributionMode::exact;
  std::uint64_t shots = 0;  // sampled mode only
  std::uint64_t seed = 0;   // sampled mode only
};

EnergyTable precompute_energies(const IsingModel& model, int qubit_cap = 24);

// Uniform superposition |+>^N.
Statevector initial_state(int n_qubits);

// p alternating layers: diagonal phase exp(-i*gamma*E(s)) from the
// energy table, then the transverse-field mixer exp(-i*beta*X) on each
// qubit.
Statevector evolve(const EnergyTable& table, const QaoaParams& params);
Statevector evolve(const IsingModel& model, const QaoaParams& params);

// sum_s |amp_s|^2 * E(s): the unlimited-shot estimator.
double expectation(const Statevector& state, const EnergyTable& table);

OutcomeDistribution exact_distribution(const Statevector& state);

// `shots` independent draws from |amp|^2 via inverse CDF on a seeded
// mt19937_64 stream. Sampling S' < S shots with the same seed reproduces
// the first S' draws, so distinct-outcome counts are monotone in shots.
OutcomeDistribution sample(const Statevector& state, std::uint64_t shots,
                           std::uint64_t seed);

}  // namespace qlar
