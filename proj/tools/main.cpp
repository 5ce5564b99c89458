// qlar: QAOA laboratory for layered-architecture-recovery instances.
//
// Subcommands:
//   solve       run the full pipeline once and report the best assignment
//   experiment  sweep sampling budgets, aggregate over trials, write CSV
//   oracle      brute-force optimum with a QUBO enumeration cross-check
//   encode      dump the QUBO / Ising encodings as JSON

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlar/harness.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qlar::InstanceError("cannot write file: " + path);
  out << content;
}

void dump_statevector(const std::string& path, const qlar::Statevector& state) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& a : state.amplitudes)
    doc.push_back({a.real(), a.imag()});
  write_file(path, doc.dump());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA-on-QUBO laboratory for layered architecture recovery"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string shots_text = "exact";
  int p = 5;
  int max_evals = 1000;
  std::uint64_t seed = 0;
  std::string postproc_text = "threshold:1e-6";
  double penalty = 0.0;
  bool penalty_set = false;
  int trials = 30;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd, bool with_shots) {
    cmd->add_option("--instance", instance_path, "Instance JSON file")
        ->required();
    if (with_shots) {
      cmd->add_option("--shots", shots_text,
                      "Sampling budget: positive integer or \"exact\"");
      cmd->add_option("--p", p, "QAOA repetitions");
      cmd->add_option("--max-evals", max_evals,
                      "Objective evaluation budget for the optimizer");
      cmd->add_option("--seed", seed, "Base seed");
      cmd->add_option("--postproc", postproc_text,
                      "threshold:<t> | topk:<k> | coverage:<c>");
      cmd->add_option("--penalty", penalty, "One-hot penalty override")
          ->check(CLI::PositiveNumber)
          ->each([&](const std::string&) { penalty_set = true; });
    }
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Run the pipeline once");
  add_common(solve_cmd, true);
  std::string trace_path;
  std::string state_path;
  solve_cmd->add_option("--trace-out", trace_path,
                        "Write the optimizer trace CSV here");
  solve_cmd->add_option("--dump-state", state_path,
                        "Debug: write the final statevector as JSON");

  auto* experiment_cmd =
      app.add_subcommand("experiment", "Shot-scaling experiment campaign");
  add_common(experiment_cmd, true);
  std::string levels_text = "10000,100000,250000";
  std::string long_out_path;
  bool no_timing = false;
  bool serial = false;
  experiment_cmd->add_option(
      "--shots-levels", levels_text,
      "Comma-separated budgets, integers or \"exact\" (exact sorts last)");
  experiment_cmd->add_option("--trials", trials, "Trials per level");
  experiment_cmd->add_option("--long-out", long_out_path,
                             "Also write a per-trial long-form CSV");
  experiment_cmd->add_flag("--no-timing", no_timing,
                           "Write 0.000 in time columns (reproducible CSV)");
  experiment_cmd->add_flag("--serial", serial, "Disable trial parallelism");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Brute-force optimum with cross-check");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--penalty", penalty, "One-hot penalty override")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { penalty_set = true; });

  auto* encode_cmd = app.add_subcommand("encode", "Dump QUBO/Ising JSON");
  add_common(encode_cmd, false);
  std::string format = "both";
  encode_cmd->add_option("--format", format, "qubo | ising | both")
      ->check(CLI::IsMember({"qubo", "ising", "both"}));
  encode_cmd->add_option("--penalty", penalty, "One-hot penalty override")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { penalty_set = true; });

  CLI11_PARSE(app, argc, argv);

  const auto emit = [&](const std::string& content) {
    if (out_path.empty())
      std::cout << content;
    else
      write_file(out_path, content);
  };

  try {
    const qlar::LarInstance instance = qlar::load_instance(instance_path);
    const std::optional<double> penalty_opt =
        penalty_set ? std::optional<double>(penalty) : std::nullopt;

    if (*solve_cmd) {
      qlar::SolveConfig config;
      config.p = p;
      config.max_evals = max_evals;
      config.seed = seed;
      config.shots = qlar::ShotsLevel::parse(shots_text);
      config.postproc = qlar::PostprocConfig::parse(postproc_text);
      config.penalty = penalty_opt;
      const qlar::SolveOutcome outcome = qlar::run_solve(instance, config);
      emit(qlar::export_report_json(
               outcome.report,
               instance.graph.size() * instance.policy.n_layers) +
           "\n");
      if (!trace_path.empty())
        write_file(trace_path, qlar::trace_to_csv(outcome.trace));
      if (!state_path.empty())
        dump_statevector(state_path, outcome.final_state);
    } else if (*experiment_cmd) {
      qlar::ExperimentConfig config;
      config.instance_path = instance_path;
      config.p = p;
      config.max_evals = max_evals;
      config.trials = trials;
      config.base_seed = seed;
      config.postproc = qlar::PostprocConfig::parse(postproc_text);
      config.penalty = penalty_opt;
      config.parallel = !serial;
      std::stringstream levels(levels_text);
      std::string token;
      while (std::getline(levels, token, ','))
        config.shots_levels.push_back(qlar::ShotsLevel::parse(token));
      const qlar::ExperimentReport report =
          qlar::run_experiment(instance, config);
      emit(qlar::experiment_to_csv(report, !no_timing));
      if (!long_out_path.empty())
        write_file(long_out_path,
                   qlar::experiment_to_long_csv(report, !no_timing));
    } else if (*oracle_cmd) {
      const qlar::OracleResult result = qlar::run_oracle(instance, penalty_opt);
      nlohmann::json doc;
      doc["cost"] = result.cost;
      doc["layers"] = result.assignment.layers;
      doc["bitstring"] = qlar::bits_to_string(
          result.bitstring,
          instance.graph.size() * instance.policy.n_layers);
      doc["bitstring_int"] = result.bitstring;
      emit(doc.dump(2) + "\n");
    } else if (*encode_cmd) {
      const qlar::QuboProblem q =
          qlar::encode_qubo(instance.graph, instance.policy, penalty_opt);
      if (format == "qubo") {
        emit(qlar::export_qubo_json(q) + "\n");
      } else if (format == "ising") {
        emit(qlar::export_ising_json(qlar::to_ising(q)) + "\n");
      } else {
        nlohmann::json doc;
        doc["qubo"] = nlohmann::json::parse(qlar::export_qubo_json(q));
        doc["ising"] =
            nlohmann::json::parse(qlar::export_ising_json(qlar::to_ising(q)));
        emit(doc.dump(2) + "\n");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
