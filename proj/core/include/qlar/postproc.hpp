#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlar/qaoa.hpp"
#include "qlar/qubo.hpp"

namespace qlar {

struct PostprocConfig {
  enum class Mode { threshold, top_k, coverage_target };

  Mode mode = Mode::threshold;
  double threshold = 1e-6;
  int k = 10;
  double coverage_target = 0.95;

  void validate() const;
  static PostprocConfig parse(const std::string& text);  // "threshold:1e-6" etc.
  std::string describe() const;
};

struct SolveReport {
  Bitstring best_bits = 0;
  double objective = 0.0;
  bool feasible = false;
  std::optional<Assignment> decoded;
  std::string infeasible_reason;
  std::uint64_t states_evaluated = 0;
  double coverage = 0.0;
  std::optional<std::uint64_t> shots_used;  // nullopt = exact mode
};

// Every bitstring with probability >= theta, ascending.
std::vector<Bitstring> filter_threshold(const OutcomeDistribution& dist,
                                        double theta);

// k highest-probability bitstrings; ties go to the smaller integer.
std::vector<Bitstring> top_k(const OutcomeDistribution& dist, int k);

// Classically re-evaluates every candidate against the QUBO and keeps
// the minimum; ties go to the smaller bitstring. Fills best_bits,
// objective, feasibility, and states_evaluated.
SolveReport select_best(const std::vector<Bitstring>& candidates,
                        const QuboProblem& q);

double coverage(std::uint64_t n_candidates, int n_qubits);

// Smallest shot count (for this seed) whose sample covers at least
// fraction `target` of the basis states, found by walking the seeded
// sampling stream; capped at 10^8 shots. Throws InfeasibleTargetError
// when the state's support cannot reach the target.
std::uint64_t shots_for_coverage(const Statevector& state, double target,
                                 std::uint64_t seed);

std::string export_report_json(const SolveReport& report, int n_qubits);

}  // namespace qlar
