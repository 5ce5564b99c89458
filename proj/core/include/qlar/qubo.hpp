#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlar/bits.hpp"
#include "qlar/lar.hpp"

namespace qlar {

// Penalized QUBO form of the layer-assignment problem:
//   value(x) = x^T Q x + offset
// with one variable per (package, layer) pair and a one-hot penalty of
// strength `penalty` per package row. Q is exactly symmetric; the
// penalty's constant term lives in `offset` so feasible values equal the
// classical assignment cost.
struct QuboProblem {
  int m = 0;  // packages
  int n = 0;  // layers
  double penalty = 0.0;
  double offset = 0.0;
  std::vector<std::vector<double>> Q;

  int size() const { return m * n; }
};

// 1 + max(C) * sum(W): strictly larger than any achievable assignment
// cost, so every infeasible bitstring is dominated.
double default_penalty(const DependencyGraph& graph, const LayerPolicy& policy);

QuboProblem encode_qubo(const DependencyGraph& graph, const LayerPolicy& policy,
                        std::optional<double> penalty = std::nullopt);

double qubo_value(const QuboProblem& q, std::span<const int> x);
double qubo_value(const QuboProblem& q, Bitstring x);

struct DecodeResult {
  std::optional<Assignment> assignment;
  std::string infeasible_reason;  // empty iff feasible

  bool feasible() const { return assignment.has_value(); }
};

// Bit i*n+k set means package i in layer k; feasible iff every package
// row is exactly one-hot.
DecodeResult decode_bits(Bitstring x, int m, int n);

// { "n": N, "Q": [[number]], "offset": number }
std::string export_qubo_json(const QuboProblem& q);

}  // namespace qlar
