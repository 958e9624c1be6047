#include <algorithm>
#include <set>
#include <vector>

#include "cadom/graph.hpp"
#include "cadom/model.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cadom;

namespace {

bool has_k4(const Graph& g) {
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
              g.adjacent(b, d) && g.adjacent(c, d))
            return true;
  return false;
}

std::vector<int> nonwhite_edges(const Graph& g, const ThreeColoring& c) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (c.color[u] != VColor::WHITE && c.color[v] != VColor::WHITE) out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction sorts and dedupes edges") {
  Graph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.edge_id(2, 1) == 2);
  CHECK(g.edge_id(0, 2) == -1);
  CHECK(g.adjacent(3, 0));
  CHECK(!g.adjacent(3, 2));
}

TEST_CASE("intersection graph of the cycle model is a cycle") {
  int n = 6;
  Graph g = intersection_graph(fixtures::cycle_model(n));
  CHECK(g.edge_count() == n);
  for (int i = 0; i < n; ++i) {
    CHECK(g.adjacent(i, (i + 1) % n));
    CHECK(g.neighbors(i).size() == 2);
  }
}

TEST_CASE("octahedron family yields K2,2,2") {
  CircularArcModel m = fixtures::random_instance(0, 6, WeightStyle::UNIT, WeightKind::VERTEX,
                                                 Family::OCTAHEDRON).model;
  Graph g = intersection_graph(m);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  for (int v = 0; v < 6; ++v) CHECK(g.neighbors(v).size() == 4);
  CHECK(!has_k4(g));
  CHECK(k4_free_edge_bound(g));
}

TEST_CASE("K4-free intersection graphs satisfy the edge bound") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 2 + static_cast<int>(seed % 9);
    Graph g = intersection_graph(
        fixtures::random_instance(seed, n, WeightStyle::UNIT, WeightKind::VERTEX).model);
    if (!has_k4(g)) CHECK(k4_free_edge_bound(g));
  }
}

TEST_CASE("line graph of a path") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph lg = line_graph(p4);
  CHECK(lg.vertex_count() == 3);
  CHECK(lg.edge_count() == 2);
  CHECK(lg.adjacent(0, 1));
  CHECK(lg.adjacent(1, 2));
  CHECK(!lg.adjacent(0, 2));
}

TEST_CASE("connected components are sorted canonically") {
  Graph g(6, {{4, 2}, {0, 1}});
  auto cc = connected_components(g);
  REQUIRE(cc.size() == 4);
  CHECK(cc[0] == std::vector<int>{0, 1});
  CHECK(cc[1] == std::vector<int>{2, 4});
  CHECK(cc[2] == std::vector<int>{3});
  CHECK(cc[3] == std::vector<int>{5});
}

TEST_CASE("verify on hand instances") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(verify(Problem::MWEVD, p3, {1}));
  CHECK(!verify(Problem::MWEVD, p3, {0}));     // vertex 2 undominated
  CHECK(!verify(Problem::MWEVD, p3, {0, 2}));  // vertex 1 dominated twice
  CHECK(!verify(Problem::MWPVD, p3, {0, 2}));  // vertex 1 sees two members
  CHECK(verify(Problem::MWPVD, p3, {1}));
  CHECK(verify(Problem::MWPVD, p3, {0, 1, 2}));  // members exempt from the count

  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(!verify(Problem::MWEVD, c4, {0}));
  CHECK(!verify(Problem::MWEVD, c4, {0, 2}));
  CHECK(verify(Problem::MWPVD, c4, {0, 1}));
  CHECK(!verify(Problem::MWPVD, c4, {0, 2}));

  // Edge problems: members are edge ids.
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(verify(Problem::MWEED, k3, {k3.edge_id(0, 1)}));
  CHECK(!verify(Problem::MWEED, k3, {}));
  CHECK(!verify(Problem::MWPED, k3, {}));
  CHECK(verify(Problem::MWPED, k3, {k3.edge_id(0, 1)}));
}

TEST_CASE("verify MWPED on the empty member set requires an edgeless graph") {
  Graph e2(2, {{0, 1}});
  CHECK(!verify(Problem::MWPED, e2, {}));
  Graph bare(3, {});
  CHECK(verify(Problem::MWPED, bare, {}));
  CHECK(verify(Problem::MWEED, bare, {}));
}

TEST_CASE("verify rejects out-of-range members") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(verify(Problem::MWEVD, p3, {3}), Error);
  CHECK_THROWS_AS(verify(Problem::MWEED, p3, {2}), Error);
}

TEST_CASE("solution_weight sums the right entries") {
  Graph p3(3, {{0, 1}, {1, 2}});
  WeightMap vw(WeightKind::VERTEX);
  vw.set_vertex(1, ExtendedWeight(Rational(7, 2)));
  CHECK(solution_weight(Problem::MWEVD, p3, vw, {1}).str() == "7/2");
  WeightMap ew(WeightKind::EDGE);
  ew.set_edge(1, 0, ExtendedWeight(5));
  CHECK(solution_weight(Problem::MWEED, p3, ew, {p3.edge_id(0, 1), p3.edge_id(1, 2)}).str() ==
        "6/1");
}

TEST_CASE("coloring_of classifies endpoints") {
  // P4 with the middle edge chosen: ends stay white, middles are black/gray.
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  ThreeColoring c = coloring_of(p4, {p4.edge_id(1, 2)});
  CHECK(c.color[0] == VColor::WHITE);
  CHECK(c.color[3] == VColor::WHITE);
  CHECK(c.color[1] == VColor::GRAY);
  CHECK(c.color[2] == VColor::GRAY);
  CHECK(check_p1_p2(p4, c));
}

TEST_CASE("P1 and P2 characterize perfect edge domination") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    Graph g = intersection_graph(
        fixtures::random_instance(seed, n, WeightStyle::UNIT, WeightKind::VERTEX).model);
    if (g.edge_count() > 12) continue;
    for (int mask = 0; mask < (1 << g.edge_count()); ++mask) {
      std::vector<int> members;
      for (int e = 0; e < g.edge_count(); ++e)
        if (mask & (1 << e)) members.push_back(e);
      ThreeColoring c = coloring_of(g, members);
      bool structural = check_p1_p2(g, c) && nonwhite_edges(g, c) == members;
      CHECK(verify(Problem::MWPED, g, members) == structural);
    }
  }
}
