#include "qlar/lar.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qlar {

void DependencyGraph::validate() const {
  const std::size_t m = weights.size();
  if (!package_names.empty() && package_names.size() != m)
    throw InstanceError("package name count does not match weight matrix");
  for (std::size_t i = 0; i < m; ++i) {
    if (weights[i].size() != m)
      throw InstanceError("weight matrix is not square");
    if (weights[i][i] != 0)
      throw InstanceError("weight matrix has a nonzero diagonal entry");
    for (long long w : weights[i])
      if (w < 0) throw InstanceError("weight matrix has a negative entry");
  }
}

void LayerPolicy::validate() const {
  if (n_layers <= 0) throw InstanceError("n_layers must be positive");
  if (penalties.size() != static_cast<std::size_t>(n_layers))
    throw InstanceError("penalty matrix does not match n_layers");
  for (const auto& row : penalties) {
    if (row.size() != static_cast<std::size_t>(n_layers))
      throw InstanceError("penalty matrix is not square");
    for (double c : row)
      if (c < 0) throw InstanceError("penalty matrix has a negative entry");
  }
}

double LayerPolicy::max_penalty() const {
  double best = 0.0;
  for (const auto& row : penalties)
    for (double c : row) best = std::max(best, c);
  return best;
}

LayerPolicy LayerPolicy::from_kind_penalties(int n_layers, double intra,
                                             double back, double skip,
                                             double adjacent) {
  LayerPolicy policy;
  policy.n_layers = n_layers;
  policy.penalties.assign(n_layers, std::vector<double>(n_layers, 0.0));
  for (int src = 0; src < n_layers; ++src) {
    for (int dst = 0; dst < n_layers; ++dst) {
      if (src == dst)
        policy.penalties[src][dst] = intra;
      else if (src - dst == 1)
        policy.penalties[src][dst] = adjacent;
      else if (src - dst >= 2)
        policy.penalties[src][dst] = skip;
      else
        policy.penalties[src][dst] = back;
    }
  }
  policy.validate();
  return policy;
}

namespace {

void check_dimensions(const DependencyGraph& graph, const LayerPolicy& policy,
                      const Assignment& a) {
  graph.validate();
  policy.validate();
  if (a.layers.size() != static_cast<std::size_t>(graph.size()))
    throw InstanceError("assignment length does not match package count");
  for (int layer : a.layers)
    if (layer < 0 || layer >= policy.n_layers)
      throw InstanceError("assignment has a layer index out of range");
}

}  // namespace

double assignment_cost(const DependencyGraph& graph, const LayerPolicy& policy,
                       const Assignment& a) {
  check_dimensions(graph, policy, a);
  const int m = graph.size();
  double total = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && graph.weights[i][j] != 0)
        total += static_cast<double>(graph.weights[i][j]) *
                 policy.penalties[a.layers[i]][a.layers[j]];
  return total;
}

CostBreakdown cost_breakdown(const DependencyGraph& graph,
                             const LayerPolicy& policy, const Assignment& a) {
  check_dimensions(graph, policy, a);
  const int m = graph.size();
  CostBreakdown out;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j || graph.weights[i][j] == 0) continue;
      const int src = a.layers[i];
      const int dst = a.layers[j];
      const double cost = static_cast<double>(graph.weights[i][j]) *
                          policy.penalties[src][dst];
      if (src == dst)
        out.intra += cost;
      else if (src - dst == 1)
        out.adjacent += cost;
      else if (src - dst >= 2)
        out.skip += cost;
      else
        out.back += cost;
    }
  }
  return out;
}

BruteForceResult brute_force_optimum(const DependencyGraph& graph,
                                     const LayerPolicy& policy,
                                     std::uint64_t max_assignments) {
  graph.validate();
  policy.validate();
  const int m = graph.size();
  const int n = policy.n_layers;
  if (m == 0) throw InstanceError("empty instance");

  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= static_cast<std::uint64_t>(n);
    if (count > max_assignments)
      throw CapacityError("enumeration bound exceeded: " + std::to_string(n) +
                          "^" + std::to_string(m) + " > " +
                          std::to_string(max_assignments));
  }

  Assignment a{std::vector<int>(m, 0)};
  BruteForceResult best{a, assignment_cost(graph, policy, a)};
  // Odometer enumeration in lexicographic order; the first minimum seen
  // is the lexicographically smallest tie.
  while (true) {
    int pos = m - 1;
    while (pos >= 0 && a.layers[pos] == n - 1) a.layers[pos--] = 0;
    if (pos < 0) break;
    ++a.layers[pos];
    const double cost = assignment_cost(graph, policy, a);
    if (cost < best.cost) best = {a, cost};
  }
  return best;
}

LarInstance parse_instance(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(std::string("instance JSON parse failure: ") +
                        e.what());
  }

  LarInstance instance;
  try {
    instance.graph.weights =
        doc.at("W").get<std::vector<std::vector<long long>>>();
    if (doc.contains("packages"))
      instance.graph.package_names =
          doc["packages"].get<std::vector<std::string>>();
    else
      for (std::size_t i = 0; i < instance.graph.weights.size(); ++i)
        instance.graph.package_names.push_back("p" + std::to_string(i));

    const int n_layers = doc.at("n_layers").get<int>();
    if (doc.contains("C")) {
      instance.policy.n_layers = n_layers;
      instance.policy.penalties =
          doc["C"].get<std::vector<std::vector<double>>>();
    } else if (doc.contains("penalties")) {
      const auto& p = doc["penalties"];
      instance.policy = LayerPolicy::from_kind_penalties(
          n_layers, p.at("intra").get<double>(), p.at("back").get<double>(),
          p.at("skip").get<double>(),
          p.contains("adjacent") ? p["adjacent"].get<double>() : 0.0);
    } else {
      throw InstanceError("instance needs either \"C\" or \"penalties\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(std::string("malformed instance JSON: ") + e.what());
  }

  instance.graph.validate();
  instance.policy.validate();
  return instance;
}

LarInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace qlar
