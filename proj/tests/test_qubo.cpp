#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "qlar/qubo.hpp"

using namespace qlar;
using testing::utility_instance;

namespace {

QuboProblem utility_qubo() {
  const LarInstance inst = utility_instance();
  return encode_qubo(inst.graph, inst.policy);
}

LarInstance small_random_instance(int m, int n, std::mt19937_64& rng) {
  LarInstance inst;
  inst.graph.weights.assign(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) inst.graph.weights[i][j] = static_cast<long long>(rng() % 20);
  inst.policy = LayerPolicy::from_kind_penalties(n, 2, 15, 1, 0);
  return inst;
}

}  // namespace

TEST_SUITE("qubo") {

TEST_CASE("worked instance encodes to a symmetric 15x15 matrix") {
  const QuboProblem q = utility_qubo();
  CHECK(q.size() == 15);
  CHECK(q.Q.size() == 15);
  for (int a = 0; a < 15; ++a)
    for (int b = 0; b < 15; ++b)
      CHECK(q.Q[a][b] == q.Q[b][a]);
  CHECK(q.penalty == testing::kUtilityDefaultPenalty);
  CHECK(q.offset == 5.0 * testing::kUtilityDefaultPenalty);
}

TEST_CASE("one-hot penalty expansion for a single package, two layers") {
  DependencyGraph g{{"a"}, {{0}}};
  const LayerPolicy policy = LayerPolicy::from_kind_penalties(2, 2, 15, 1, 0);
  const QuboProblem q = encode_qubo(g, policy);
  const double P = q.penalty;
  const int one_zero[] = {1, 0};
  const int zero_zero[] = {0, 0};
  const int one_one[] = {1, 1};
  CHECK(qubo_value(q, std::span<const int>(one_zero)) == 0.0);
  CHECK(qubo_value(q, std::span<const int>(zero_zero)) == P);
  CHECK(qubo_value(q, std::span<const int>(one_one)) == P);
}

TEST_CASE("feasible bitstring of the worked instance evaluates to 561") {
  const QuboProblem q = utility_qubo();
  CHECK(qubo_value(q, testing::kUtilityBitstring) == 561.0);
}

TEST_CASE("all-zero bitstring pays the full penalty") {
  const QuboProblem q = utility_qubo();
  CHECK(qubo_value(q, Bitstring{0}) == 5.0 * q.penalty);
}

TEST_CASE("single-variable evaluation") {
  QuboProblem q;
  q.m = 1;
  q.n = 1;
  q.offset = 0.0;
  q.Q = {{-3.5}};
  CHECK(qubo_value(q, Bitstring{1}) == -3.5);
  CHECK(qubo_value(q, Bitstring{0}) == 0.0);
}

TEST_CASE("decode: worked instance, missing layer, doubled layer") {
  const DecodeResult ok = decode_bits(testing::kUtilityBitstring, 5, 3);
  REQUIRE(ok.feasible());
  CHECK(ok.assignment->layers == std::vector<int>{0, 1, 1, 1, 2});

  const DecodeResult none = decode_bits(0, 5, 3);
  CHECK(!none.feasible());
  CHECK(none.infeasible_reason == "package 0 has no layer");

  const DecodeResult doubled = decode_bits(0b011, 1, 3);
  CHECK(!doubled.feasible());
  CHECK(doubled.infeasible_reason == "package 0 has 2 layers");
}

TEST_CASE("feasible values equal assignment costs, exhaustively on m=3") {
  std::mt19937_64 rng(11);
  const LarInstance inst = small_random_instance(3, 3, rng);
  const QuboProblem q = encode_qubo(inst.graph, inst.policy);
  for (Bitstring x = 0; x < (Bitstring{1} << 9); ++x) {
    const DecodeResult d = decode_bits(x, 3, 3);
    if (!d.feasible()) continue;
    CHECK(qubo_value(q, x) ==
          doctest::Approx(assignment_cost(inst.graph, inst.policy,
                                          *d.assignment))
              .epsilon(1e-12));
  }
}

TEST_CASE("feasible values equal assignment costs, spot checks at m=5") {
  const LarInstance inst = utility_instance();
  const QuboProblem q = encode_qubo(inst.graph, inst.policy);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Assignment a;
    Bitstring x = 0;
    for (int i = 0; i < 5; ++i) {
      const int k = static_cast<int>(rng() % 3);
      a.layers.push_back(k);
      x |= Bitstring{1} << (i * 3 + k);
    }
    CHECK(qubo_value(q, x) == assignment_cost(inst.graph, inst.policy, a));
  }
}

TEST_CASE("every infeasible bitstring exceeds the optimum") {
  const LarInstance inst = utility_instance();
  const QuboProblem q = encode_qubo(inst.graph, inst.policy);
  for (Bitstring x = 0; x < (Bitstring{1} << 15); ++x) {
    if (decode_bits(x, 5, 3).feasible()) continue;
    CHECK(qubo_value(q, x) > testing::kUtilityOptimum);
  }
}

TEST_CASE("exhaustive QUBO minimum agrees with the assignment oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const LarInstance inst = small_random_instance(3, 3, rng);
    const QuboProblem q = encode_qubo(inst.graph, inst.policy);
    Bitstring argmin = 0;
    double best = qubo_value(q, Bitstring{0});
    for (Bitstring x = 1; x < (Bitstring{1} << 9); ++x) {
      const double v = qubo_value(q, x);
      if (v < best) {
        best = v;
        argmin = x;
      }
    }
    const BruteForceResult oracle =
        brute_force_optimum(inst.graph, inst.policy);
    CHECK(best == doctest::Approx(oracle.cost).epsilon(1e-12));
    const DecodeResult d = decode_bits(argmin, 3, 3);
    REQUIRE(d.feasible());
    CHECK(assignment_cost(inst.graph, inst.policy, *d.assignment) ==
          oracle.cost);
  }
}

TEST_CASE("errors: bad penalty, bad lengths") {
  const LarInstance inst = utility_instance();
  CHECK_THROWS_AS(encode_qubo(inst.graph, inst.policy, -1.0), InstanceError);
  CHECK_THROWS_AS(encode_qubo(inst.graph, inst.policy, 0.0), InstanceError);
  const QuboProblem q = utility_qubo();
  const int too_short[] = {1, 0, 1};
  CHECK_THROWS_AS(qubo_value(q, std::span<const int>(too_short)),
                  InstanceError);
  CHECK_THROWS_AS(qubo_value(q, Bitstring{1} << 20), InstanceError);
}

TEST_CASE("JSON export carries dimension, matrix, offset") {
  const QuboProblem q = utility_qubo();
  const std::string text = export_qubo_json(q);
  CHECK(text.find("\"n\": 15") != std::string::npos);
  CHECK(text.find("\"offset\"") != std::string::npos);
  CHECK(text.find("\"Q\"") != std::string::npos);
}

}  // TEST_SUITE
