#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cadom/graph.hpp"
#include "cadom/model.hpp"
#include "cadom/weights.hpp"

namespace cadom {

// Model text: `c` comments, `p ca <n>` header, then `a <id> <s> <t>` with
// ids 1..n and distinct positions in [0, 2n). ParseError messages carry line
// numbers.
CircularArcModel parse_model(std::istream& in);
std::string emit_model(const CircularArcModel& m);

// Weight text: `vw <id> <p>/<q>` and `ew <id1> <id2> <p>/<q>` lines, value
// `inf` allowed, integers allowed as shorthand for p/1. Ids are 1-based.
WeightMap parse_weights(std::istream& in, WeightKind kind);
std::string emit_weights(const WeightMap& w);

// Solution text: `s OPTIMAL <p>/<q>` or `s INFEASIBLE`, then sorted `v <id>`
// or `e <id1> <id2>` member lines (1-based). emit adds a `c trace:` comment.
struct ParsedSolution {
  bool feasible = false;
  ExtendedWeight value = ExtendedWeight::infinity();
  std::vector<int> vertex_members;                 // 0-based
  std::vector<std::pair<int, int>> edge_members;   // 0-based endpoint pairs
};
ParsedSolution parse_solution(std::istream& in);
std::string emit_solution(Problem p, const Graph& g, const Solution& sol);

}  // namespace cadom
