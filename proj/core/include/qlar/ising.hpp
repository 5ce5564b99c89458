#pragma once

#include <string>
#include <vector>

#include "qlar/bits.hpp"
#include "qlar/qubo.hpp"

namespace qlar {

struct Coupling {
  int i = 0;
  int j = 0;  // i < j
  double value = 0.0;
};

// Diagonal two-body spin Hamiltonian:
//   E(z) = offset + sum_i h_i z_i + sum_{i<j} J_ij z_i z_j
// with z_b = 1 - 2*x_b, so z = +1 corresponds to bit 0. Energies equal
// the originating QUBO's values on every bitstring.
struct IsingModel {
  int n = 0;
  std::vector<double> fields;       // h
  std::vector<Coupling> couplings;  // J, sorted by (i, j)
  double offset = 0.0;
};

// Substitutes x_b = (1 - z_b)/2 into x^T Q x + offset. Couplings with
// magnitude below 1e-12 are dropped.
IsingModel to_ising(const QuboProblem& q);

double ising_energy(const IsingModel& model, Bitstring x);

// { "n": N, "h": [number], "J": [[i, j, number]], "offset": number }
std::string export_ising_json(const IsingModel& model);

}  // namespace qlar
