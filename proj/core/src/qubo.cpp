#include "qlar/qubo.hpp"

#include "json.hpp"

namespace qlar {

double default_penalty(const DependencyGraph& graph,
                       const LayerPolicy& policy) {
  long long weight_sum = 0;
  for (const auto& row : graph.weights)
    for (long long w : row) weight_sum += w;
  return 1.0 + policy.max_penalty() * static_cast<double>(weight_sum);
}

QuboProblem encode_qubo(const DependencyGraph& graph, const LayerPolicy& policy,
                        std::optional<double> penalty) {
  graph.validate();
  policy.validate();
  if (penalty && *penalty <= 0.0)
    throw InstanceError("penalty coefficient must be positive");

  QuboProblem q;
  q.m = graph.size();
  q.n = policy.n_layers;
  q.penalty = penalty ? *penalty : default_penalty(graph, policy);
  const int N = q.size();
  q.Q.assign(N, std::vector<double>(N, 0.0));

  // Objective: W[i][j] * C[k][l] on x_{i*n+k} x_{j*n+l}, split
  // symmetrically. i != j guarantees the two variables differ.
  for (int i = 0; i < q.m; ++i) {
    for (int j = 0; j < q.m; ++j) {
      if (i == j || graph.weights[i][j] == 0) continue;
      const double w = static_cast<double>(graph.weights[i][j]);
      for (int k = 0; k < q.n; ++k) {
        for (int l = 0; l < q.n; ++l) {
          const double coeff = w * policy.penalties[k][l];
          if (coeff == 0.0) continue;
          const int a = i * q.n + k;
          const int b = j * q.n + l;
          q.Q[a][b] += coeff / 2.0;
          q.Q[b][a] += coeff / 2.0;
        }
      }
    }
  }

  // One-hot penalty P * (sum_k x_{ik} - 1)^2 per package, expanded with
  // x^2 = x: -P on each diagonal, +2P on each same-package pair, +P
  // constant per package.
  for (int i = 0; i < q.m; ++i) {
    for (int k = 0; k < q.n; ++k) {
      const int a = i * q.n + k;
      q.Q[a][a] -= q.penalty;
      for (int l = k + 1; l < q.n; ++l) {
        const int b = i * q.n + l;
        q.Q[a][b] += q.penalty;
        q.Q[b][a] += q.penalty;
      }
    }
  }
  q.offset = static_cast<double>(q.m) * q.penalty;
  return q;
}

double qubo_value(const QuboProblem& q, std::span<const int> x) {
  const int N = q.size();
  if (x.size() != static_cast<std::size_t>(N))
    throw InstanceError("bit vector length does not match QUBO dimension");
  double value = q.offset;
  for (int a = 0; a < N; ++a) {
    if (!x[a]) continue;
    const auto& row = q.Q[a];
    for (int b = 0; b < N; ++b)
      if (x[b]) value += row[b];
  }
  return value;
}

double qubo_value(const QuboProblem& q, Bitstring x) {
  const int N = q.size();
  if (N < 64 && (x >> N) != 0)
    throw InstanceError("bitstring has bits beyond the QUBO dimension");
  double value = q.offset;
  for (int a = 0; a < N; ++a) {
    if (!bit_at(x, a)) continue;
    const auto& row = q.Q[a];
    for (int b = 0; b < N; ++b)
      if (bit_at(x, b)) value += row[b];
  }
  return value;
}

DecodeResult decode_bits(Bitstring x, int m, int n) {
  if (m <= 0 || n <= 0) throw InstanceError("m and n must be positive");
  if (m * n < 64 && (x >> (m * n)) != 0)
    throw InstanceError("bitstring has bits beyond position m*n");

  DecodeResult result;
  Assignment a;
  a.layers.reserve(m);
  for (int i = 0; i < m; ++i) {
    int layer = -1;
    int set_bits = 0;
    for (int k = 0; k < n; ++k) {
      if (bit_at(x, i * n + k)) {
        ++set_bits;
        layer = k;
      }
    }
    if (set_bits == 0) {
      result.infeasible_reason =
          "package " + std::to_string(i) + " has no layer";
      return result;
    }
    if (set_bits > 1) {
      result.infeasible_reason = "package " + std::to_string(i) + " has " +
                                 std::to_string(set_bits) + " layers";
      return result;
    }
    a.layers.push_back(layer);
  }
  result.assignment = std::move(a);
  return result;
}

std::string export_qubo_json(const QuboProblem& q) {
  nlohmann::json doc;
  doc["n"] = q.size();
  doc["Q"] = q.Q;
  doc["offset"] = q.offset;
  return doc.dump(2);
}

}  // namespace qlar
