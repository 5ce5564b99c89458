#include "qlar/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace qlar {

ShotsLevel ShotsLevel::parse(const std::string& text) {
  if (text == "exact") return {true, 0};
  try {
    const long long value = std::stoll(text);
    if (value < 1) throw InstanceError("shots must be at least 1");
    return {false, static_cast<std::uint64_t>(value)};
  } catch (const std::logic_error&) {
    throw InstanceError("shots must be a positive integer or \"exact\": " +
                        text);
  }
}

std::string ShotsLevel::label() const {
  return exact ? "exact" : std::to_string(shots);
}

namespace {

struct PipelineContext {
  QuboProblem q;
  IsingModel model;
  EnergyTable table;
};

PipelineContext build_context(const LarInstance& instance,
                              std::optional<double> penalty) {
  PipelineContext ctx;
  ctx.q = encode_qubo(instance.graph, instance.policy, penalty);
  ctx.model = to_ising(ctx.q);
  ctx.table = precompute_energies(ctx.model);
  return ctx;
}

struct OptimizedTrial {
  OptimizationTrace trace;
  QaoaParams best_params;
  Statevector state;
};

// Stages 1-3 of a solve: seeded init, expectation minimization, final
// evolution. Depends on the seed but not on the sampling budget.
OptimizedTrial optimize_trial(const PipelineContext& ctx, int p, int max_evals,
                              std::uint64_t seed) {
  if (p < 1) throw InstanceError("p must be at least 1");
  const QaoaParams x0 = init_params(p, mix_seed(seed, 0));
  const Objective objective = [&](const std::vector<double>& flat) {
    return expectation(evolve(ctx.table, QaoaParams::from_flat(flat)),
                       ctx.table);
  };
  OptimizerConfig opt_config;
  opt_config.max_evals = max_evals;
  opt_config.seed = seed;

  OptimizedTrial trial;
  trial.trace = minimize(objective, x0.flatten(), opt_config);
  trial.best_params = QaoaParams::from_flat(trial.trace.best_params);
  trial.state = evolve(ctx.table, trial.best_params);
  return trial;
}

// Stage 4: sample (or read off) the distribution and post-process.
SolveReport postprocess_trial(const PipelineContext& ctx,
                              const Statevector& state,
                              const ShotsLevel& level,
                              const PostprocConfig& postproc,
                              std::uint64_t seed) {
  postproc.validate();
  const std::uint64_t sample_seed = mix_seed(seed, 1);

  OutcomeDistribution dist;
  std::vector<Bitstring> candidates;
  std::optional<std::uint64_t> shots_used;

  switch (postproc.mode) {
    case PostprocConfig::Mode::threshold:
    case PostprocConfig::Mode::top_k: {
      if (level.exact)
        dist = exact_distribution(state);
      else
        dist = sample(state, level.shots, sample_seed);
      if (!level.exact) shots_used = level.shots;
      candidates = postproc.mode == PostprocConfig::Mode::threshold
                       ? filter_threshold(dist, postproc.threshold)
                       : top_k(dist, postproc.k);
      break;
    }
    case PostprocConfig::Mode::coverage_target: {
      // Adaptive budget: the configured shot level is replaced by the
      // smallest count reaching the target under this seed.
      const std::uint64_t shots =
          shots_for_coverage(state, postproc.coverage_target, sample_seed);
      dist = sample(state, shots, sample_seed);
      shots_used = shots;
      for (const auto& [s, p] : dist.entries) candidates.push_back(s);
      break;
    }
  }

  if (candidates.empty())
    throw InstanceError("post-processing left no candidate bitstrings");

  SolveReport report = select_best(candidates, ctx.q);
  report.coverage = coverage(report.states_evaluated, ctx.q.size());
  report.shots_used = shots_used;
  return report;
}

}  // namespace

SolveOutcome run_solve(const LarInstance& instance, const SolveConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  const PipelineContext ctx = build_context(instance, config.penalty);
  OptimizedTrial trial =
      optimize_trial(ctx, config.p, config.max_evals, config.seed);

  SolveOutcome outcome;
  outcome.report = postprocess_trial(ctx, trial.state, config.shots,
                                     config.postproc, config.seed);
  outcome.trace = std::move(trial.trace);
  outcome.best_params = std::move(trial.best_params);
  outcome.final_state = std::move(trial.state);
  outcome.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return outcome;
}

namespace {

ExperimentRow aggregate_row(const ShotsLevel& level,
                            std::vector<TrialResult> trials,
                            double oracle_optimum) {
  ExperimentRow row;
  row.level = level;
  row.trials = static_cast<int>(trials.size());

  double sum = 0.0;
  double sum_states = 0.0;
  double sum_coverage = 0.0;
  double sum_time = 0.0;
  int ok = 0;
  int optimal = 0;
  for (const TrialResult& t : trials) {
    if (t.failed) {
      ++row.failed_trials;
      continue;
    }
    ++ok;
    sum += t.objective;
    sum_states += static_cast<double>(t.states_evaluated);
    sum_coverage += t.coverage;
    sum_time += t.wall_time_s;
    if (std::abs(t.objective - oracle_optimum) <= 1e-9) ++optimal;
  }
  if (ok > 0) {
    row.mean_objective = sum / ok;
    row.mean_states_evaluated = sum_states / ok;
    row.mean_coverage = sum_coverage / ok;
    row.mean_time_s = sum_time / ok;
    double ss = 0.0;
    for (const TrialResult& t : trials)
      if (!t.failed) ss += (t.objective - row.mean_objective) *
                           (t.objective - row.mean_objective);
    row.std_objective = ok > 1 ? std::sqrt(ss / (ok - 1)) : 0.0;
  }
  row.optimal_rate =
      trials.empty() ? 0.0 : static_cast<double>(optimal) / trials.size();
  row.trial_results = std::move(trials);
  return row;
}

}  // namespace

ExperimentReport run_experiment(const LarInstance& instance,
                                const ExperimentConfig& config) {
  if (config.trials < 1) throw InstanceError("trials must be at least 1");
  if (config.shots_levels.empty())
    throw InstanceError("at least one shots level is required");

  std::vector<ShotsLevel> levels = config.shots_levels;
  std::stable_sort(levels.begin(), levels.end(),
                   [](const ShotsLevel& a, const ShotsLevel& b) {
                     if (a.exact != b.exact) return !a.exact;  // exact last
                     return a.shots < b.shots;
                   });

  ExperimentReport report;
  report.oracle_optimum =
      brute_force_optimum(instance.graph, instance.policy).cost;

  const PipelineContext ctx = build_context(instance, config.penalty);

  std::vector<std::vector<TrialResult>> results(
      levels.size(), std::vector<TrialResult>(config.trials));

  // The optimization stage depends only on the seed, so each trial is
  // optimized once and the resulting state is re-sampled at every level.
  // Aggregates are identical to per-level standalone solves; the
  // per-level time reports what a standalone run would have cost.
  const auto run_trial = [&](int trial_index) {
    const std::uint64_t seed =
        config.base_seed + static_cast<std::uint64_t>(trial_index);
    const auto opt_start = std::chrono::steady_clock::now();
    OptimizedTrial trial;
    bool opt_failed = false;
    std::string opt_error;
    try {
      trial = optimize_trial(ctx, config.p, config.max_evals, seed);
    } catch (const std::exception& e) {
      opt_failed = true;
      opt_error = e.what();
    }
    const double opt_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      opt_start)
            .count();

    for (std::size_t li = 0; li < levels.size(); ++li) {
      TrialResult& result = results[li][trial_index];
      result.seed = seed;
      if (opt_failed) {
        result.failed = true;
        result.error = opt_error;
        continue;
      }
      const auto post_start = std::chrono::steady_clock::now();
      try {
        const SolveReport report = postprocess_trial(
            ctx, trial.state, levels[li], config.postproc, seed);
        result.objective = report.objective;
        result.feasible = report.feasible;
        result.states_evaluated = report.states_evaluated;
        result.coverage = report.coverage;
      } catch (const std::exception& e) {
        result.failed = true;
        result.error = e.what();
      }
      result.wall_time_s =
          opt_time + std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - post_start)
                         .count();
    }
  };

  const unsigned n_workers =
      config.parallel
          ? std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(config.trials))
          : 1u;
  if (n_workers <= 1) {
    for (int t = 0; t < config.trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const int t = next.fetch_add(1);
          if (t >= config.trials) break;
          run_trial(t);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  for (std::size_t li = 0; li < levels.size(); ++li)
    report.rows.push_back(aggregate_row(levels[li], std::move(results[li]),
                                        report.oracle_optimum));
  return report;
}

OracleResult run_oracle(const LarInstance& instance,
                        std::optional<double> penalty) {
  const BruteForceResult lar = brute_force_optimum(instance.graph,
                                                   instance.policy);

  const QuboProblem q = encode_qubo(instance.graph, instance.policy, penalty);
  const int N = q.size();
  if (N > 20)
    throw CapacityError("QUBO cross-check enumeration limited to 20 bits");

  Bitstring best_bits = 0;
  double best_value = qubo_value(q, Bitstring{0});
  for (Bitstring s = 1; s < (Bitstring{1} << N); ++s) {
    const double value = qubo_value(q, s);
    if (value < best_value) {
      best_value = value;
      best_bits = s;
    }
  }

  if (std::abs(best_value - lar.cost) > 1e-6)
    throw InstanceError(
        "oracle cross-check failed: QUBO minimum " +
        std::to_string(best_value) + " vs assignment enumeration " +
        std::to_string(lar.cost));
  const DecodeResult decoded = decode_bits(best_bits, q.m, q.n);
  if (!decoded.feasible() || !(decoded.assignment == lar.assignment))
    throw InstanceError("oracle cross-check failed: argmin mismatch");

  return {lar.assignment, lar.cost, best_bits};
}

namespace {

std::string format(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

}  // namespace

std::string experiment_to_csv(const ExperimentReport& report,
                              bool include_timing) {
  std::ostringstream out;
  out << "shots,trials,mean_objective,std_objective,optimal_rate,"
         "mean_states_evaluated,mean_coverage,mean_time_s\n";
  for (const ExperimentRow& row : report.rows) {
    out << row.level.label() << ',' << row.trials << ','
        << format("%.6f", row.mean_objective) << ','
        << format("%.6f", row.std_objective) << ','
        << format("%.4f", row.optimal_rate) << ','
        << format("%.1f", row.mean_states_evaluated) << ','
        << format("%.6f", row.mean_coverage) << ','
        << format("%.3f", include_timing ? row.mean_time_s : 0.0) << '\n';
  }
  return out.str();
}

std::string experiment_to_long_csv(const ExperimentReport& report,
                                   bool include_timing) {
  std::ostringstream out;
  out << "shots,trial,seed,objective,feasible,states_evaluated,coverage,"
         "time_s\n";
  for (const ExperimentRow& row : report.rows) {
    for (std::size_t t = 0; t < row.trial_results.size(); ++t) {
      const TrialResult& trial = row.trial_results[t];
      if (trial.failed) {
        out << row.level.label() << ',' << t << ',' << trial.seed
            << ",failed,,,," << '\n';
        continue;
      }
      out << row.level.label() << ',' << t << ',' << trial.seed << ','
          << format("%.6f", trial.objective) << ','
          << (trial.feasible ? 1 : 0) << ',' << trial.states_evaluated << ','
          << format("%.6f", trial.coverage) << ','
          << format("%.3f", include_timing ? trial.wall_time_s : 0.0) << '\n';
    }
  }
  return out.str();
}

}  // namespace qlar
