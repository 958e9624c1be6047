#pragma once

#include <array>

#include "cadom/subroutines.hpp"

namespace cadom {

// The three triangle reweightings used by the coverage-3 branch of the edge
// domination solver. omega[i] penalizes, with a big-M value, the four
// triangle edges incident to the i-th split vertex on either side of the cut.
struct TriangleWeightings {
  std::vector<WeightMap> omega;     // three edge maps over the cut graph
  ExtendedWeight bigM;              // 1 + 4 * sum_omega, separating penalized solutions
  Rational sum_omega;               // sum of absolute input weights
  std::array<int, 3> left, right;   // split-arc ids on each side of the cut
};

TriangleWeightings build_triangle_weightings(const CircularArcModel& orig, const WeightMap& w,
                                             const CircularArcModel& cut_model,
                                             const SurgeryMap& map);

// Combines the three reweighted interval DIM optima: infeasible when all
// exceed 2 * sum_omega, otherwise subtracts the mandatory triangle edge and
// maps members back to original edges, merging the duplicated pair.
Solution combine_dim_triangle(const std::array<Solution, 3>& dims, const TriangleWeightings& tw,
                              const CircularArcModel& orig, const WeightMap& w,
                              const CircularArcModel& cut_model, const SurgeryMap& map);

// Interval models for the coverage-1 branch of perfect vertex domination:
// the arc over segment `seg` is split there, with zero or one or two leaf
// arcs added next to the split point, under three weight adjustments.
struct PvdModel {
  CircularArcModel model;
  WeightMap weights{WeightKind::VERTEX};
  SurgeryMap map;
};
std::array<PvdModel, 3> build_pvd_models(const CircularArcModel& m, int seg, int v,
                                         const WeightMap& w);

// Maps a feasible split-model solution back to the original arcs (variant
// index 0..2). MappingViolated when the solution uses a vertex that only
// exists to forbid a case (infinite weight).
Solution map_back_pvd(const Solution& sol, const PvdModel& pm, int variant,
                      const CircularArcModel& orig, int split_vertex);

Solution solve_mwevd(const CircularArcModel& m, const WeightMap& w);
Solution solve_mweed(const CircularArcModel& m, const WeightMap& w);
Solution solve_mwpvd(const CircularArcModel& m, const WeightMap& w);
Solution solve_mwped(const CircularArcModel& m, const WeightMap& w);

// Public facade: kind and sign checks, dispatch, trace attached.
Solution solve(Problem p, const CircularArcModel& m, const WeightMap& w);

}  // namespace cadom
