#pragma once

#include "qlar/bits.hpp"
#include "qlar/lar.hpp"

namespace qlar::testing {

// The 5-package / 3-layer utility instance used throughout: optimum 561
// at layers [0, 1, 1, 1, 2], QUBO bitstring 17553 under the canonical
// bit order, default one-hot penalty 10846.
inline LarInstance utility_instance() {
  LarInstance instance;
  instance.graph.package_names = {"gui", "controller", "io", "services",
                                  "util"};
  instance.graph.weights = {{0, 11, 0, 0, 0},
                            {107, 0, 0, 0, 0},
                            {0, 0, 0, 8, 0},
                            {32, 0, 38, 0, 18},
                            {34, 17, 195, 263, 0}};
  instance.policy.n_layers = 3;
  instance.policy.penalties = {{2, 15, 15}, {0, 2, 15}, {1, 0, 2}};
  return instance;
}

inline constexpr double kUtilityOptimum = 561.0;
inline const Assignment kUtilityArgmin{{0, 1, 1, 1, 2}};
inline constexpr Bitstring kUtilityBitstring = 17553;  // 100010010010001
inline constexpr double kUtilityDefaultPenalty = 10846.0;  // 1 + 15 * 723

#ifndef QLAR_DATA_DIR
#define QLAR_DATA_DIR "."
#endif
inline const char* utility_instance_path() {
  return QLAR_DATA_DIR "/layered_utility.json";
}

}  // namespace qlar::testing
