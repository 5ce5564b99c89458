#include "qlar/ising.hpp"

#include <cmath>

#include "json.hpp"

namespace qlar {

namespace {
constexpr double kDropTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;
}  // namespace

IsingModel to_ising(const QuboProblem& q) {
  const int N = q.size();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (std::abs(q.Q[a][b] - q.Q[b][a]) > kSymmetryTolerance)
        throw InstanceError("QUBO matrix is not symmetric");

  IsingModel model;
  model.n = N;
  model.fields.assign(N, 0.0);
  model.offset = q.offset;

  // x_a x_b = (1 - z_a)(1 - z_b)/4. Diagonal terms use z_a^2 = 1.
  for (int a = 0; a < N; ++a) {
    const double diag = q.Q[a][a];
    model.offset += diag / 2.0;
    model.fields[a] -= diag / 2.0;
    for (int b = a + 1; b < N; ++b) {
      const double pair = q.Q[a][b] + q.Q[b][a];
      model.offset += pair / 4.0;
      model.fields[a] -= pair / 4.0;
      model.fields[b] -= pair / 4.0;
      if (std::abs(pair / 4.0) > kDropTolerance)
        model.couplings.push_back({a, b, pair / 4.0});
    }
  }
  return model;
}

double ising_energy(const IsingModel& model, Bitstring x) {
  if (model.n < 64 && (x >> model.n) != 0)
    throw InstanceError("bitstring has bits beyond the model dimension");
  double energy = model.offset;
  for (int i = 0; i < model.n; ++i)
    energy += model.fields[i] * (bit_at(x, i) ? -1.0 : 1.0);
  for (const Coupling& c : model.couplings) {
    const int sign = bit_at(x, c.i) ^ bit_at(x, c.j);
    energy += sign ? -c.value : c.value;
  }
  return energy;
}

std::string export_ising_json(const IsingModel& model) {
  nlohmann::json doc;
  doc["n"] = model.n;
  doc["h"] = model.fields;
  auto couplings = nlohmann::json::array();
  for (const Coupling& c : model.couplings)
    couplings.push_back({c.i, c.j, c.value});
  doc["J"] = couplings;
  doc["offset"] = model.offset;
  return doc.dump(2);
}

}  // namespace qlar
