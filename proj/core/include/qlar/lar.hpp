#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlar/errors.hpp"

namespace qlar {

// Weighted package dependency graph. weights[i][j] counts dependencies
// from package i to package j; the diagonal is zero.
struct DependencyGraph {
  std::vector<std::string> package_names;
  std::vector<std::vector<long long>> weights;

  int size() const { return static_cast<int>(weights.size()); }
  void validate() const;
};

// Penalty table indexed [source_layer][target_layer]. Higher index means
// higher layer; a call to the adjacent lower layer (target = source - 1)
// is free under the default policy.
struct LayerPolicy {
  int n_layers = 0;
  std::vector<std::vector<double>> penalties;

  void validate() const;
  double max_penalty() const;

  // Synthesizes the table from per-kind penalties: same layer -> intra,
  // one layer down -> adjacent, two or more down -> skip, any layer up
  // -> back.
  static LayerPolicy from_kind_penalties(int n_layers, double intra,
                                         double back, double skip,
                                         double adjacent = 0.0);
};

struct Assignment {
  std::vector<int> layers;  // layers[i] in [0, n_layers)

  bool operator==(const Assignment&) const = default;
};

struct CostBreakdown {
  double skip = 0.0;
  double back = 0.0;
  double intra = 0.0;
  double adjacent = 0.0;

  double total() const { return skip + back + intra + adjacent; }
};

struct BruteForceResult {
  Assignment assignment;
  double cost = 0.0;
};

// Sum over ordered pairs i != j of W[i][j] * C[layer(i)][layer(j)].
double assignment_cost(const DependencyGraph& graph, const LayerPolicy& policy,
                       const Assignment& a);

CostBreakdown cost_breakdown(const DependencyGraph& graph,
                             const LayerPolicy& policy, const Assignment& a);

// Exhaustive minimum over all n_layers^m assignments; ties go to the
// lexicographically smallest layer vector. Refuses instances whose
// enumeration exceeds max_assignments.
BruteForceResult brute_force_optimum(const DependencyGraph& graph,
                                     const LayerPolicy& policy,
                                     std::uint64_t max_assignments = 10'000'000);

struct LarInstance {
  DependencyGraph graph;
  LayerPolicy policy;
};

// Instance JSON: { "packages": [...], "W": [[int]], "n_layers": int,
// "C": [[number]] }; "C" may be replaced by
// "penalties": {"intra":..,"back":..,"skip":..,"adjacent":..}.
LarInstance parse_instance(const std::string& json_text);
LarInstance load_instance(const std::string& path);

}  // namespace qlar
