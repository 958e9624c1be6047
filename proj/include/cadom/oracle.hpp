#pragma once

#include "cadom/graph.hpp"

namespace cadom {

// Exhaustive ground truth: subsets by increasing size, then lexicographic,
// filtered by verify. TooLarge beyond 20 vertices (vertex problems) or 20
// edges (edge problems).
Solution oracle_solve(Problem p, const Graph& g, const WeightMap& w);

}  // namespace cadom
