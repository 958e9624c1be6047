#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cadom/generator.hpp"
#include "cadom/graph.hpp"

namespace cadom {

struct DiffReport {
  int trials = 0;
  // One entry per mismatch: the MISMATCH line followed by the instance dump.
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
  std::string text() const;
};

// Per trial: generate a random model, solve with the full solver and with the
// brute-force oracle, compare feasibility and exact value, verify members.
DiffReport differential_run(Problem p, int trials, int n_min, int n_max, WeightStyle ws,
                            std::uint64_t seed);

}  // namespace cadom
