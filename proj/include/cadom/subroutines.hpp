#pragma once

#include "cadom/graph.hpp"
#include "cadom/model.hpp"
#include "cadom/weights.hpp"

namespace cadom {

// Per-vertex color constraint used when a fixed dominating set forces colors.
enum class PrecolorKind { FREE, WHITE, BLACK_ANY, BLACK_MATCHED_TO };

struct Precolor {
  PrecolorKind kind = PrecolorKind::FREE;
  int mate = -1;  // only for BLACK_MATCHED_TO
};

struct Precoloring {
  std::vector<Precolor> c;
  static Precoloring all_free(int n) {
    Precoloring p;
    p.c.resize(n);
    return p;
  }
};

// Minimum-weight dominating set of the intersection graph. Always feasible.
// Weights must be finite; negatives are allowed.
Solution solve_mwds_ca(const CircularArcModel& m, const WeightMap& w);

// Minimum-weight perfect vertex dominating set on an interval model
// (min coverage 0). Weights may be negative or +infinity.
Solution solve_mwpvd_interval(const CircularArcModel& m, const WeightMap& w);

// Minimum-weight dominating induced matching on an interval model, subject to
// a precoloring. Weights nonnegative and finite. Members are edge ids of
// intersection_graph(m).
Solution solve_dim_interval(const CircularArcModel& m, const WeightMap& w,
                            const Precoloring& pre);

// Minimum-weight perfect edge dominating set on an interval model. Weights
// may include +infinity; infeasible only if every coloring needs an infinite
// edge.
Solution solve_mwped_interval(const CircularArcModel& m, const WeightMap& w);

// Minimum-weight DIM of g given a dominating set of size <= 3: branch over
// each dom vertex's state (white, or black matched to a neighbor); every
// other color is forced because dom dominates g.
Solution solve_dim_fixed_domset(const Graph& g, const WeightMap& w, const std::vector<int>& dom,
                                const CircularArcModel& m);

enum class CycleProblem { DIM, PED, EVD, PVD };

// Exact DP around a cycle with pendant leaves (the cycle-structure extraction
// output). g must be the intersection graph the structure came from; edge
// problem members are edge ids of g.
Solution solve_cycle_dp(CycleProblem p, const CycleStructure& cs, const Graph& g,
                        const WeightMap& w);

}  // namespace cadom
