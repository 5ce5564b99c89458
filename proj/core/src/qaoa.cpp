#include "qlar/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qlar {

void QaoaParams::validate() const {
  if (gammas.size() != betas.size())
    throw InstanceError("gamma and beta vectors differ in length");
}

std::vector<double> QaoaParams::flatten() const {
  validate();
  std::vector<double> flat(gammas);
  flat.insert(flat.end(), betas.begin(), betas.end());
  return flat;
}

QaoaParams QaoaParams::from_flat(const std::vector<double>& flat) {
  if (flat.size() % 2 != 0)
    throw InstanceError("flat parameter vector must have even length");
  const std::size_t p = flat.size() / 2;
  QaoaParams params;
  params.gammas.assign(flat.begin(), flat.begin() + p);
  params.betas.assign(flat.begin() + p, flat.end());
  return params;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

EnergyTable precompute_energies(const IsingModel& model, int qubit_cap) {
  if (model.n < 1) throw InstanceError("model has no qubits");
  if (model.n > qubit_cap)
    throw CapacityError("energy table for " + std::to_string(model.n) +
                        " qubits exceeds cap " + std::to_string(qubit_cap));

  const std::size_t size = std::size_t{1} << model.n;
  EnergyTable table;
  table.n_qubits = model.n;
  table.energies.assign(size, model.offset);

  // Field contributions, one bit at a time over half/half blocks.
  for (int b = 0; b < model.n; ++b) {
    const double h = model.fields[b];
    if (h == 0.0) continue;
    const std::size_t stride = std::size_t{1} << b;
    for (std::size_t s = 0; s < size; ++s)
      table.energies[s] += (s & stride) ? -h : h;
  }
  for (const Coupling& c : model.couplings) {
    const std::size_t mi = std::size_t{1} << c.i;
    const std::size_t mj = std::size_t{1} << c.j;
    for (std::size_t s = 0; s < size; ++s) {
      const bool anti = ((s & mi) != 0) != ((s & mj) != 0);
      table.energies[s] += anti ? -c.value : c.value;
    }
  }
  return table;
}

Statevector initial_state(int n_qubits) {
  if (n_qubits < 1) throw InstanceError("n_qubits must be at least 1");
  const std::size_t size = std::size_t{1} << n_qubits;
  Statevector state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(size, std::complex<double>(
                                    1.0 / std::sqrt(static_cast<double>(size)),
                                    0.0));
  return state;
}

namespace {

void apply_cost_phase(Statevector& state, const EnergyTable& table,
                      double gamma) {
  const std::size_t size = state.amplitudes.size();
  double* amp = reinterpret_cast<double*>(state.amplitudes.data());
  for (std::size_t s = 0; s < size; ++s) {
    const double phase = -gamma * table.energies[s];
    const double pr = std::cos(phase);
    const double pi = std::sin(phase);
    const double ar = amp[2 * s];
    const double ai = amp[2 * s + 1];
    amp[2 * s] = ar * pr - ai * pi;
    amp[2 * s + 1] = ar * pi + ai * pr;
  }
}

// exp(-i*beta*X) per qubit: [cos b, -i sin b; -i sin b, cos b]. Written
// in real arithmetic on the interleaved (re, im) layout.
void apply_mixer(Statevector& state, double beta) {
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::size_t size = state.amplitudes.size();
  double* amp = reinterpret_cast<double*>(state.amplitudes.data());
  for (int q = 0; q < state.n_qubits; ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < size; base += stride << 1) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t lo = 2 * (base + off);
        const std::size_t hi = lo + 2 * stride;
        const double ar = amp[lo], ai = amp[lo + 1];
        const double br = amp[hi], bi = amp[hi + 1];
        // (c*a - i*s*b, -i*s*a + c*b)
        amp[lo] = c * ar + s * bi;
        amp[lo + 1] = c * ai - s * br;
        amp[hi] = c * br + s * ai;
        amp[hi + 1] = c * bi - s * ar;
      }
    }
  }
}

}  // namespace

Statevector evolve(const EnergyTable& table, const QaoaParams& params) {
  params.validate();
  Statevector state = initial_state(table.n_qubits);
  if (table.energies.size() != state.amplitudes.size())
    throw InstanceError("energy table size does not match qubit count");
  for (int layer = 0; layer < params.depth(); ++layer) {
    apply_cost_phase(state, table, params.gammas[layer]);
    apply_mixer(state, params.betas[layer]);
  }
  return state;
}

Statevector evolve(const IsingModel& model, const QaoaParams& params) {
  return evolve(precompute_energies(model), params);
}

double expectation(const Statevector& state, const EnergyTable& table) {
  if (table.energies.size() != state.amplitudes.size())
    throw InstanceError("energy table size does not match statevector");
  double total = 0.0;
  for (std::size_t s = 0; s < state.amplitudes.size(); ++s)
    total += std::norm(state.amplitudes[s]) * table.energies[s];
  return total;
}

OutcomeDistribution exact_distribution(const Statevector& state) {
  OutcomeDistribution dist;
  dist.mode = DistributionMode::exact;
  for (std::size_t s = 0; s < state.amplitudes.size(); ++s) {
    const double p = std::norm(state.amplitudes[s]);
    if (p >= 1e-300) dist.entries[static_cast<Bitstring>(s)] = p;
  }
  return dist;
}

namespace {

// 53-bit uniform in [0, 1); fixed construction so streams are portable.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

OutcomeDistribution sample(const Statevector& state, std::uint64_t shots,
                           std::uint64_t seed) {
  if (shots == 0) throw InstanceError("shots must be at least 1");

  std::vector<double> cdf(state.amplitudes.size());
  double running = 0.0;
  for (std::size_t s = 0; s < state.amplitudes.size(); ++s) {
    running += std::norm(state.amplitudes[s]);
    cdf[s] = running;
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::map<Bitstring, std::uint64_t> counts;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    counts[static_cast<Bitstring>(it - cdf.begin())]++;
  }

  OutcomeDistribution dist;
  dist.mode = DistributionMode::sampled;
  dist.shots = shots;
  dist.seed = seed;
  for (const auto& [s, count] : counts)
    dist.entries[s] =
        static_cast<double>(count) / static_cast<double>(shots);
  return dist;
}

}  // namespace qlar
