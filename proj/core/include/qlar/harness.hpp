#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlar/lar.hpp"
#include "qlar/optim.hpp"
#include "qlar/postproc.hpp"

namespace qlar {

// One sampling-budget level: a finite shot count or the exact
// (squared-amplitude) distribution.
struct ShotsLevel {
  bool exact = false;
  std::uint64_t shots = 0;

  static ShotsLevel parse(const std::string& text);  // "exact" or an integer
  std::string label() const;
};

struct SolveConfig {
  int p = 5;
  int max_evals = 1000;
  std::uint64_t seed = 0;
  ShotsLevel shots{true, 0};
  PostprocConfig postproc;
  std::optional<double> penalty;
};

struct SolveOutcome {
  SolveReport report;
  OptimizationTrace trace;
  QaoaParams best_params;
  double wall_time_s = 0.0;
  Statevector final_state;  // kept for debug dumps
};

struct ExperimentConfig {
  std::string instance_path;
  int p = 5;
  int max_evals = 1000;
  std::vector<ShotsLevel> shots_levels;
  int trials = 30;
  std::uint64_t base_seed = 0;
  PostprocConfig postproc;
  std::optional<double> penalty;
  bool parallel = true;
};

struct TrialResult {
  std::uint64_t seed = 0;
  double objective = 0.0;
  bool feasible = false;
  bool failed = false;
  std::string error;
  std::uint64_t states_evaluated = 0;
  double coverage = 0.0;
  double wall_time_s = 0.0;
};

struct ExperimentRow {
  ShotsLevel level;
  int trials = 0;
  int failed_trials = 0;
  double mean_objective = 0.0;
  double std_objective = 0.0;
  double optimal_rate = 0.0;
  double mean_states_evaluated = 0.0;
  double mean_coverage = 0.0;
  double mean_time_s = 0.0;
  std::vector<TrialResult> trial_results;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;  // shots ascending, exact last
  double oracle_optimum = 0.0;
};

struct OracleResult {
  Assignment assignment;
  double cost = 0.0;
  Bitstring bitstring = 0;
};

// Full pipeline: encode -> Ising -> energy table -> seeded init ->
// minimize expectation -> evolve at the best parameters -> sample or
// exact distribution -> post-process. Sub-seeds are derived from
// config.seed, so a solve is fully determined by its config.
SolveOutcome run_solve(const LarInstance& instance, const SolveConfig& config);

// `trials` independent solves per level with seeds base_seed + trial
// index, aggregated per level. Trials may run in parallel; seeds are
// pre-assigned so the aggregates do not depend on scheduling.
ExperimentReport run_experiment(const LarInstance& instance,
                                const ExperimentConfig& config);

// Feasible-assignment enumeration cross-checked against exhaustive 2^N
// QUBO minimization; throws if the two routes disagree.
OracleResult run_oracle(const LarInstance& instance,
                        std::optional<double> penalty = std::nullopt);

// shots,trials,mean_objective,std_objective,optimal_rate,
// mean_states_evaluated,mean_coverage,mean_time_s
std::string experiment_to_csv(const ExperimentReport& report,
                              bool include_timing = true);

// Long form, one row per trial, for plotting:
// shots,trial,seed,objective,feasible,states_evaluated,coverage,time_s
std::string experiment_to_long_csv(const ExperimentReport& report,
                                   bool include_timing = true);

}  // namespace qlar
