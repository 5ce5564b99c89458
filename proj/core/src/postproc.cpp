#include "qlar/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"

namespace qlar {

void PostprocConfig::validate() const {
  switch (mode) {
    case Mode::threshold:
      if (!(threshold > 0.0 && threshold <= 1.0))
        throw InstanceError("threshold must lie in (0, 1]");
      break;
    case Mode::top_k:
      if (k < 1) throw InstanceError("top-k requires k >= 1");
      break;
    case Mode::coverage_target:
      if (!(coverage_target > 0.0 && coverage_target <= 1.0))
        throw InstanceError("coverage target must lie in (0, 1]");
      break;
  }
}

PostprocConfig PostprocConfig::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  PostprocConfig config;
  try {
    if (name == "threshold") {
      config.mode = Mode::threshold;
      if (!arg.empty()) config.threshold = std::stod(arg);
    } else if (name == "topk") {
      config.mode = Mode::top_k;
      if (!arg.empty()) config.k = std::stoi(arg);
    } else if (name == "coverage") {
      config.mode = Mode::coverage_target;
      if (!arg.empty()) config.coverage_target = std::stod(arg);
    } else {
      throw InstanceError("unknown postproc mode: " + name);
    }
  } catch (const std::logic_error&) {
    throw InstanceError("bad postproc argument: " + text);
  }
  config.validate();
  return config;
}

std::string PostprocConfig::describe() const {
  std::ostringstream out;
  switch (mode) {
    case Mode::threshold:
      out << "threshold:" << threshold;
      break;
    case Mode::top_k:
      out << "topk:" << k;
      break;
    case Mode::coverage_target:
      out << "coverage:" << coverage_target;
      break;
  }
  return out.str();
}

std::vector<Bitstring> filter_threshold(const OutcomeDistribution& dist,
                                        double theta) {
  std::vector<Bitstring> out;
  for (const auto& [s, p] : dist.entries)
    if (p >= theta) out.push_back(s);
  return out;  // map iteration is already ascending
}

std::vector<Bitstring> top_k(const OutcomeDistribution& dist, int k) {
  if (k < 1) throw InstanceError("k must be at least 1");
  std::vector<std::pair<Bitstring, double>> entries(dist.entries.begin(),
                                                    dist.entries.end());
  const std::size_t keep =
      std::min(entries.size(), static_cast<std::size_t>(k));
  std::partial_sort(entries.begin(), entries.begin() + keep, entries.end(),
                    [](const auto& a, const auto& b) {
                      if (a.second != b.second) return a.second > b.second;
                      return a.first < b.first;
                    });
  std::vector<Bitstring> out;
  out.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) out.push_back(entries[i].first);
  return out;
}

SolveReport select_best(const std::vector<Bitstring>& candidates,
                        const QuboProblem& q) {
  if (candidates.empty())
    throw InstanceError("candidate set is empty");

  SolveReport report;
  bool first = true;
  for (Bitstring s : candidates) {
    const double value = qubo_value(q, s);
    if (first || value < report.objective ||
        (value == report.objective && s < report.best_bits)) {
      report.best_bits = s;
      report.objective = value;
      first = false;
    }
  }
  report.states_evaluated = candidates.size();

  DecodeResult decoded = decode_bits(report.best_bits, q.m, q.n);
  report.feasible = decoded.feasible();
  report.decoded = decoded.assignment;
  report.infeasible_reason = decoded.infeasible_reason;
  return report;
}

double coverage(std::uint64_t n_candidates, int n_qubits) {
  if (n_qubits < 1) throw InstanceError("n_qubits must be at least 1");
  return static_cast<double>(n_candidates) /
         static_cast<double>(std::uint64_t{1} << n_qubits);
}

namespace {
constexpr std::uint64_t kShotCap = 100'000'000;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

std::uint64_t shots_for_coverage(const Statevector& state, double target,
                                 std::uint64_t seed) {
  if (!(target > 0.0 && target <= 1.0))
    throw InstanceError("coverage target must lie in (0, 1]");

  const std::size_t size = state.amplitudes.size();
  std::uint64_t support = 0;
  for (const auto& a : state.amplitudes)
    if (std::norm(a) > 0.0) ++support;
  const double max_achievable =
      static_cast<double>(support) / static_cast<double>(size);
  if (target > max_achievable) {
    std::ostringstream msg;
    msg << "coverage target " << target
        << " unreachable; state support allows at most " << max_achievable;
    throw InfeasibleTargetError(msg.str(), max_achievable);
  }

  std::vector<double> cdf(size);
  double running = 0.0;
  for (std::size_t s = 0; s < size; ++s) {
    running += std::norm(state.amplitudes[s]);
    cdf[s] = running;
  }
  cdf.back() = 1.0;

  // Distinct-outcome count is monotone along the seeded stream, so the
  // first shot index reaching the target is the minimal budget this
  // seed can certify (the limit of a doubling-plus-bisection search).
  std::mt19937_64 rng(seed);
  std::vector<bool> seen(size, false);
  std::uint64_t distinct = 0;
  const double total = static_cast<double>(size);
  for (std::uint64_t shot = 1; shot <= kShotCap; ++shot) {
    const double u = uniform01(rng);
    const std::size_t s = static_cast<std::size_t>(
        std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (!seen[s]) {
      seen[s] = true;
      ++distinct;
      if (static_cast<double>(distinct) / total >= target) return shot;
    }
  }
  throw CapacityError("coverage target not reached within 1e8 shots");
}

std::string export_report_json(const SolveReport& report, int n_qubits) {
  nlohmann::json doc;
  doc["best_bits"] = bits_to_string(report.best_bits, n_qubits);
  doc["best_bits_int"] = report.best_bits;
  doc["objective"] = report.objective;
  doc["feasible"] = report.feasible;
  if (report.decoded)
    doc["decoded_layers"] = report.decoded->layers;
  else
    doc["infeasible_reason"] = report.infeasible_reason;
  doc["states_evaluated"] = report.states_evaluated;
  doc["coverage"] = report.coverage;
  if (report.shots_used)
    doc["shots"] = *report.shots_used;
  else
    doc["shots"] = "exact";
  return doc.dump(2);
}

}  // namespace qlar
