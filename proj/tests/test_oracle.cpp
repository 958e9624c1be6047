#include <vector>

#include "cadom/graph.hpp"
#include "cadom/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cadom;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

}  // namespace

TEST_CASE("oracle frozen values on small cycles") {
  WeightMap vw(WeightKind::VERTEX);
  WeightMap ew(WeightKind::EDGE);

  Graph c6 = cycle_graph(6);
  Solution evd = oracle_solve(Problem::MWEVD, c6, vw);
  REQUIRE(evd.feasible);
  CHECK(evd.value.str() == "2/1");
  Solution eed = oracle_solve(Problem::MWEED, c6, ew);
  REQUIRE(eed.feasible);
  CHECK(eed.value.str() == "2/1");

  Graph c4 = cycle_graph(4);
  CHECK(!oracle_solve(Problem::MWEVD, c4, vw).feasible);
  CHECK(!oracle_solve(Problem::MWEED, c4, ew).feasible);
  CHECK(oracle_solve(Problem::MWPVD, c4, vw).value.str() == "2/1");
  CHECK(oracle_solve(Problem::MWPED, c4, ew).value.str() == "2/1");

  Graph k3 = cycle_graph(3);
  Solution dim3 = oracle_solve(Problem::MWEED, k3, ew);
  REQUIRE(dim3.feasible);
  CHECK(dim3.value.str() == "1/1");
  CHECK(dim3.members.size() == 1);
}

TEST_CASE("oracle cycle law: unit exact domination needs length divisible by 3") {
  WeightMap vw(WeightKind::VERTEX);
  WeightMap ew(WeightKind::EDGE);
  for (int n = 3; n <= 12; ++n) {
    Graph c = cycle_graph(n);
    Solution evd = oracle_solve(Problem::MWEVD, c, vw);
    Solution eed = oracle_solve(Problem::MWEED, c, ew);
    if (n % 3 == 0) {
      REQUIRE(evd.feasible);
      CHECK(evd.value == ExtendedWeight(n / 3));
      REQUIRE(eed.feasible);
      CHECK(eed.value == ExtendedWeight(n / 3));
    } else {
      CHECK(!evd.feasible);
      CHECK(!eed.feasible);
    }
  }
}

TEST_CASE("oracle weighted star frozen value") {
  // Star K1,3: center 0 weight 5, leaves 1, 1, -2. A perfect vertex
  // dominating set may take all vertices (weight 5) or center plus leaves
  // subsets; the optimum keeps the negative leaf with the center.
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  WeightMap vw(WeightKind::VERTEX);
  vw.set_vertex(0, ExtendedWeight(5));
  vw.set_vertex(3, ExtendedWeight(-2));
  Solution pvd = oracle_solve(Problem::MWPVD, star, vw);
  REQUIRE(pvd.feasible);
  CHECK(pvd.value.str() == "3/1");
  CHECK(pvd.members == std::vector<int>{0, 3});
}

TEST_CASE("oracle prefers smaller then lexicographically least member sets") {
  // C6 unit MWEVD has several optimal pairs; {0, 3} is the lex-least.
  Graph c6 = cycle_graph(6);
  WeightMap vw(WeightKind::VERTEX);
  Solution evd = oracle_solve(Problem::MWEVD, c6, vw);
  CHECK(evd.members == std::vector<int>{0, 3});
  // Zero-weight vertices do not tempt the oracle into a larger set.
  WeightMap zw(WeightKind::VERTEX);
  for (int v = 0; v < 6; ++v) zw.set_vertex(v, ExtendedWeight(0));
  Solution z = oracle_solve(Problem::MWEVD, c6, zw);
  CHECK(z.members == std::vector<int>{0, 3});
}

TEST_CASE("oracle respects infinite weights") {
  Graph p3(3, {{0, 1}, {1, 2}});
  WeightMap vw(WeightKind::VERTEX);
  vw.set_vertex(1, ExtendedWeight::infinity());
  Solution evd = oracle_solve(Problem::MWEVD, p3, vw);
  // Only {1} verifies, so the optimum exists but carries infinite weight.
  REQUIRE(evd.feasible);
  CHECK(evd.value.is_infinite());
  CHECK(evd.members == std::vector<int>{1});
}

TEST_CASE("oracle rejects oversized instances") {
  Graph big(21, {});
  WeightMap vw(WeightKind::VERTEX);
  CHECK_THROWS_AS(oracle_solve(Problem::MWEVD, big, vw), Error);
}

TEST_CASE("oracle solutions always verify") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_NONNEG, WeightKind::VERTEX);
    Graph g = intersection_graph(gen.model);
    Solution sol = oracle_solve(Problem::MWPVD, g, gen.weights);
    if (sol.feasible) {
      CHECK(verify(Problem::MWPVD, g, sol.members));
      CHECK(solution_weight(Problem::MWPVD, g, gen.weights, sol.members) == sol.value);
    }
  }
}
