#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qlar/qaoa.hpp"

namespace qlar {

struct OptimizerConfig {
  int max_evals = 1000;
  double initial_step = 1.0;
  std::optional<double> tolerance;  // no early stop by default
  std::uint64_t seed = 0;
};

struct OptimizationTrace {
  struct Evaluation {
    std::vector<double> params;
    double value = 0.0;
  };

  std::vector<Evaluation> evaluations;
  std::vector<double> best_params;
  double best_value = 0.0;
  int n_evals = 0;
  bool error = false;
  std::string error_message;
};

using Objective = std::function<double(const std::vector<double>&)>;

// 2p angles drawn uniformly from [-2*pi, 2*pi]; first p are gammas.
QaoaParams init_params(int p, std::uint64_t seed);

// Derivative-free local minimization: Nelder-Mead simplex with the
// dimension-adaptive coefficients of Gao & Han. Deterministic for a
// deterministic objective; stops after max_evals objective evaluations,
// or earlier when `tolerance` is set and the simplex value spread falls
// below it. A non-finite objective value aborts with the error flag set.
OptimizationTrace minimize(const Objective& objective,
                           const std::vector<double>& x0,
                           const OptimizerConfig& config);

// eval_index,param_0..param_{d-1},objective
std::string trace_to_csv(const OptimizationTrace& trace);

}  // namespace qlar
