#include "qlar/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace qlar {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

QaoaParams init_params(int p, std::uint64_t seed) {
  if (p < 1) throw InstanceError("p must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<double> flat(2 * static_cast<std::size_t>(p));
  for (double& v : flat) v = -kTwoPi + uniform01(rng) * 2.0 * kTwoPi;
  return QaoaParams::from_flat(flat);
}

namespace {

class TracingObjective {
 public:
  TracingObjective(const Objective& f, int max_evals, OptimizationTrace& trace)
      : f_(f), max_evals_(max_evals), trace_(trace) {}

  bool exhausted() const { return trace_.n_evals >= max_evals_; }
  bool aborted() const { return trace_.error; }

  // Returns false when no evaluation happened (budget gone or aborted).
  bool eval(const std::vector<double>& x, double& out) {
    if (exhausted() || aborted()) return false;
    const double value = f_(x);
    trace_.evaluations.push_back({x, value});
    ++trace_.n_evals;
    if (!std::isfinite(value)) {
      trace_.error = true;
      trace_.error_message =
          "objective returned a non-finite value at evaluation " +
          std::to_string(trace_.n_evals);
      return false;
    }
    if (trace_.best_params.empty() || value < trace_.best_value) {
      trace_.best_value = value;
      trace_.best_params = x;
    }
    out = value;
    return true;
  }

 private:
  const Objective& f_;
  int max_evals_;
  OptimizationTrace& trace_;
};

}  // namespace

OptimizationTrace minimize(const Objective& objective,
                           const std::vector<double>& x0,
                           const OptimizerConfig& config) {
  if (config.max_evals < 1) throw InstanceError("max_evals must be >= 1");
  if (config.initial_step <= 0.0)
    throw InstanceError("initial_step must be positive");
  const int d = static_cast<int>(x0.size());
  if (d < 1) throw InstanceError("empty starting point");

  OptimizationTrace trace;
  TracingObjective f(objective, config.max_evals, trace);

  // Adaptive Nelder-Mead coefficients (Gao & Han 2012).
  const double dim = static_cast<double>(d);
  const double reflect = 1.0;
  const double expand = 1.0 + 2.0 / dim;
  const double contract = 0.75 - 1.0 / (2.0 * dim);
  const double shrink = 1.0 - 1.0 / dim;

  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  simplex.reserve(d + 1);
  values.reserve(d + 1);

  double v0;
  if (!f.eval(x0, v0)) return trace;
  simplex.push_back(x0);
  values.push_back(v0);
  for (int i = 0; i < d; ++i) {
    std::vector<double> x = x0;
    x[i] += config.initial_step;
    double v;
    if (!f.eval(x, v)) return trace;
    simplex.push_back(std::move(x));
    values.push_back(v);
  }

  std::vector<std::size_t> order(simplex.size());
  std::iota(order.begin(), order.end(), 0);

  const auto sort_order = [&] {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return values[a] < values[b];
    });
  };

  while (!f.exhausted() && !f.aborted()) {
    sort_order();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    if (config.tolerance &&
        values[worst] - values[best] < *config.tolerance)
      break;

    // Centroid of all vertices but the worst.
    std::vector<double> centroid(d, 0.0);
    for (std::size_t idx : order)
      if (idx != worst)
        for (int i = 0; i < d; ++i) centroid[i] += simplex[idx][i];
    for (double& c : centroid) c /= dim;

    const auto along = [&](double t) {
      std::vector<double> x(d);
      for (int i = 0; i < d; ++i)
        x[i] = centroid[i] + t * (centroid[i] - simplex[worst][i]);
      return x;
    };

    std::vector<double> xr = along(reflect);
    double vr;
    if (!f.eval(xr, vr)) break;

    if (vr < values[best]) {
      std::vector<double> xe = along(reflect * expand);
      double ve;
      if (!f.eval(xe, ve)) break;
      if (ve < vr) {
        simplex[worst] = std::move(xe);
        values[worst] = ve;
      } else {
        simplex[worst] = std::move(xr);
        values[worst] = vr;
      }
      continue;
    }
    if (vr < values[second_worst]) {
      simplex[worst] = std::move(xr);
      values[worst] = vr;
      continue;
    }

    if (vr < values[worst]) {
      std::vector<double> xc = along(reflect * contract);  // outside
      double vc;
      if (!f.eval(xc, vc)) break;
      if (vc <= vr) {
        simplex[worst] = std::move(xc);
        values[worst] = vc;
        continue;
      }
    } else {
      std::vector<double> xc = along(-contract);  // inside
      double vc;
      if (!f.eval(xc, vc)) break;
      if (vc < values[worst]) {
        simplex[worst] = std::move(xc);
        values[worst] = vc;
        continue;
      }
    }

    // Shrink toward the best vertex.
    bool budget_left = true;
    for (std::size_t idx : order) {
      if (idx == best) continue;
      for (int i = 0; i < d; ++i)
        simplex[idx][i] =
            simplex[best][i] + shrink * (simplex[idx][i] - simplex[best][i]);
      double v;
      if (!f.eval(simplex[idx], v)) {
        budget_left = false;
        break;
      }
      values[idx] = v;
    }
    if (!budget_left) break;
  }

  return trace;
}

std::string trace_to_csv(const OptimizationTrace& trace) {
  std::ostringstream out;
  const std::size_t d =
      trace.evaluations.empty() ? 0 : trace.evaluations[0].params.size();
  out << "eval_index";
  for (std::size_t i = 0; i < d; ++i) out << ",param_" << i;
  out << ",objective\n";
  out.precision(17);
  for (std::size_t e = 0; e < trace.evaluations.size(); ++e) {
    out << e;
    for (double p : trace.evaluations[e].params) out << ',' << p;
    out << ',' << trace.evaluations[e].value << '\n';
  }
  return out.str();
}

}  // namespace qlar
