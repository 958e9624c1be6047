#include "cadom/oracle.hpp"

#include <algorithm>

namespace cadom {

namespace {

// Order for tie-breaking: smaller size first, then lexicographic members.
bool set_before(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Solution oracle_solve(Problem p, const Graph& g, const WeightMap& w) {
  int k = is_edge_problem(p) ? g.edge_count() : g.vertex_count();
  if (k > 20) throw Error(ErrorCode::TooLarge, "oracle limited to 20 candidate elements");
  Solution best = Solution::infeasible_solution();
  std::vector<int> members;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    members.clear();
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) members.push_back(i);
    if (!verify(p, g, members)) continue;
    ExtendedWeight val = solution_weight(p, g, w, members);
    if (!best.feasible || val < best.value ||
        (val == best.value && set_before(members, best.members))) {
      best.feasible = true;
      best.value = val;
      best.members = members;
    }
  }
  return best;
}

}  // namespace cadom
