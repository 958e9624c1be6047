#include <vector>

#include "cadom/graph.hpp"
#include "cadom/oracle.hpp"
#include "cadom/rng.hpp"
#include "cadom/subroutines.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cadom;

namespace {

// Brute-force minimum-weight dominating set value.
ExtendedWeight brute_mwds(const Graph& g, const WeightMap& w) {
  int n = g.vertex_count();
  ExtendedWeight best = ExtendedWeight::infinity();
  bool found = false;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<char> dominated(n, 0);
    ExtendedWeight val(0);
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) {
        dominated[v] = 1;
        for (int u : g.neighbors(v)) dominated[u] = 1;
        val += w.vertex(v);
      }
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && dominated[v];
    if (ok && (!found || val < best)) {
      best = val;
      found = true;
    }
  }
  return best;
}

// Brute-force DIM value under a precoloring constraint.
ExtendedWeight brute_dim(const Graph& g, const WeightMap& w, const Precoloring& pre) {
  ExtendedWeight best = ExtendedWeight::infinity();
  bool found = false;
  int m = g.edge_count();
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> members;
    for (int e = 0; e < m; ++e)
      if (mask & (1 << e)) members.push_back(e);
    if (!verify(Problem::MWEED, g, members)) continue;
    std::vector<int> mate(g.vertex_count(), -1);
    for (int e : members) {
      auto [a, b] = g.edge(e);
      mate[a] = b;
      mate[b] = a;
    }
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      const Precolor& pc = pre.c[v];
      if (pc.kind == PrecolorKind::WHITE) ok = mate[v] == -1;
      if (pc.kind == PrecolorKind::BLACK_ANY) ok = mate[v] != -1;
      if (pc.kind == PrecolorKind::BLACK_MATCHED_TO) ok = mate[v] == pc.mate;
    }
    if (!ok) continue;
    ExtendedWeight val = solution_weight(Problem::MWEED, g, w, members);
    if (!found || val < best) {
      best = val;
      found = true;
    }
  }
  return found ? best : ExtendedWeight::infinity();
}

ExtendedWeight oracle_value(Problem p, const Graph& g, const WeightMap& w) {
  Solution s = oracle_solve(p, g, w);
  return s.feasible ? s.value : ExtendedWeight::infinity();
}

ExtendedWeight sub_value(const Solution& s) {
  return s.feasible ? s.value : ExtendedWeight::infinity();
}

}  // namespace

TEST_CASE("dominating set sweep matches brute force") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    int n = 1 + static_cast<int>(seed % 8);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_SIGNED, WeightKind::VERTEX);
    Graph g = intersection_graph(gen.model);
    Solution sol = solve_mwds_ca(gen.model, gen.weights);
    REQUIRE(sol.feasible);
    CHECK(sol.value == brute_mwds(g, gen.weights));
    // the returned set really dominates
    std::vector<char> dominated(n, 0);
    for (int v : sol.members) {
      dominated[v] = 1;
      for (int u : g.neighbors(v)) dominated[u] = 1;
    }
    for (int v = 0; v < n; ++v) CHECK(dominated[v] == 1);
    CHECK(solution_weight(Problem::MWPVD, g, gen.weights, sol.members) == sol.value);
  }
}

TEST_CASE("interval perfect vertex domination matches the oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    int n = 1 + static_cast<int>(seed % 9);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_SIGNED, WeightKind::VERTEX,
                                         Family::INTERVAL);
    Graph g = intersection_graph(gen.model);
    Solution sol = solve_mwpvd_interval(gen.model, gen.weights);
    CHECK(sub_value(sol) == oracle_value(Problem::MWPVD, g, gen.weights));
    if (sol.feasible) {
      CHECK(verify(Problem::MWPVD, g, sol.members));
      CHECK(solution_weight(Problem::MWPVD, g, gen.weights, sol.members) == sol.value);
    }
  }
}

TEST_CASE("interval DIM matches the oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    int n = 1 + static_cast<int>(seed % 8);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_NONNEG, WeightKind::EDGE,
                                         Family::INTERVAL);
    Graph g = intersection_graph(gen.model);
    if (g.edge_count() > 16) continue;
    Solution sol = solve_dim_interval(gen.model, gen.weights, Precoloring::all_free(n));
    CHECK(sub_value(sol) == oracle_value(Problem::MWEED, g, gen.weights));
    if (sol.feasible) {
      CHECK(verify(Problem::MWEED, g, sol.members));
      CHECK(solution_weight(Problem::MWEED, g, gen.weights, sol.members) == sol.value);
    }
  }
}

TEST_CASE("interval DIM honors precolorings") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int n = 2 + static_cast<int>(seed % 6);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_NONNEG, WeightKind::EDGE,
                                         Family::INTERVAL);
    Graph g = intersection_graph(gen.model);
    if (g.edge_count() > 14) continue;
    Precoloring pre = Precoloring::all_free(n);
    int v = static_cast<int>(seed % n);
    switch (seed % 3) {
      case 0:
        pre.c[v].kind = PrecolorKind::WHITE;
        break;
      case 1:
        pre.c[v].kind = PrecolorKind::BLACK_ANY;
        break;
      case 2: {
        if (g.neighbors(v).empty()) continue;
        pre.c[v].kind = PrecolorKind::BLACK_MATCHED_TO;
        pre.c[v].mate = g.neighbors(v)[0];
        break;
      }
    }
    Solution sol = solve_dim_interval(gen.model, gen.weights, pre);
    CHECK(sub_value(sol) == brute_dim(g, gen.weights, pre));
  }
}

TEST_CASE("interval perfect edge domination matches the oracle") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    int n = 1 + static_cast<int>(seed % 8);
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_NONNEG, WeightKind::EDGE,
                                         Family::INTERVAL);
    Graph g = intersection_graph(gen.model);
    if (g.edge_count() > 16) continue;
    // Sprinkle an infinite edge weight now and then.
    if (seed % 4 == 0 && g.edge_count() > 0) {
      auto [a, b] = g.edge(static_cast<int>(seed) % g.edge_count());
      gen.weights.set_edge(a, b, ExtendedWeight::infinity());
    }
    Graph g2 = intersection_graph(gen.model);
    Solution sol = solve_mwped_interval(gen.model, gen.weights);
    Solution ora = oracle_solve(Problem::MWPED, g2, gen.weights);
    bool ora_finite = ora.feasible && !ora.value.is_infinite();
    CHECK(sol.feasible == ora_finite);
    if (sol.feasible) {
      CHECK(sol.value == ora.value);
      CHECK(verify(Problem::MWPED, g2, sol.members));
      CHECK(solution_weight(Problem::MWPED, g2, gen.weights, sol.members) == sol.value);
    }
  }
}

TEST_CASE("DIM from a fixed small dominating set matches the oracle") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    Family fam = seed % 2 == 0 ? Family::COVER2 : Family::COVER3;
    auto gen = fixtures::random_instance(seed, n, WeightStyle::RANDOM_NONNEG, WeightKind::EDGE,
                                         fam);
    auto cover = find_small_cover(gen.model, 3);
    if (!cover) continue;
    Graph g = intersection_graph(gen.model);
    if (g.edge_count() > 16) continue;
    Solution sol = solve_dim_fixed_domset(g, gen.weights, *cover, gen.model);
    CHECK(sub_value(sol) == oracle_value(Problem::MWEED, g, gen.weights));
    if (sol.feasible) CHECK(verify(Problem::MWEED, g, sol.members));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("cycle DP matches the oracle on cycles with pendants") {
  struct Shape {
    int k;
    std::vector<int> pendants;
  };
  std::vector<Shape> shapes = {
      {4, {0, 0, 0, 0}}, {4, {1, 0, 0, 0}}, {4, {1, 0, 2, 0}}, {5, {0, 0, 0, 0}},
      {5, {2, 0, 1, 0, 1}}, {6, {0, 0, 0, 0, 0, 0}}, {6, {1, 1, 0, 0, 1, 0}},
      {7, {0, 1, 0, 0, 0, 0, 0}},
  };
  struct Case {
    CycleProblem cp;
    Problem p;
    WeightKind kind;
    WeightStyle ws;
  };
  std::vector<Case> cases = {
      {CycleProblem::DIM, Problem::MWEED, WeightKind::EDGE, WeightStyle::RANDOM_NONNEG},
      {CycleProblem::PED, Problem::MWPED, WeightKind::EDGE, WeightStyle::RANDOM_NONNEG},
      {CycleProblem::EVD, Problem::MWEVD, WeightKind::VERTEX, WeightStyle::RANDOM_NONNEG},
      {CycleProblem::PVD, Problem::MWPVD, WeightKind::VERTEX, WeightStyle::RANDOM_SIGNED},
  };
  for (const Shape& sh : shapes) {
    CircularArcModel m = fixtures::cycle_with_pendants(sh.k, sh.pendants);
    Graph g = intersection_graph(m);
    CycleStructure cs = extract_cycle_structure(m);
    for (const Case& c : cases) {
      if (is_edge_problem(c.p) && g.edge_count() > 16) continue;
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        WeightMap w(c.kind);
        SplitMix64 rng(seed * 1000 + sh.k);
        bool sgn = c.ws == WeightStyle::RANDOM_SIGNED;
        auto draw = [&]() {
          long long num = sgn ? static_cast<long long>(rng.below(21)) - 10
                              : static_cast<long long>(rng.below(13));
          return ExtendedWeight(Rational(num, 1 + rng.below(4)));
        };
        if (c.kind == WeightKind::VERTEX) {
          for (int v = 0; v < g.vertex_count(); ++v) w.set_vertex(v, draw());
        } else {
          for (auto [a, b] : g.edges()) w.set_edge(a, b, draw());
        }
        Solution sol = solve_cycle_dp(c.cp, cs, g, w);
        CHECK(sub_value(sol) == oracle_value(c.p, g, w));
        if (sol.feasible) {
          CHECK(verify(c.p, g, sol.members));
          CHECK(solution_weight(c.p, g, w, sol.members) == sol.value);
        }
      }
    }
  }
}

TEST_CASE("cycle DP reproduces the unit cycle law") {
  for (int k = 4; k <= 12; ++k) {
    CircularArcModel m = fixtures::cycle_model(k);
    Graph g = intersection_graph(m);
    CycleStructure cs = extract_cycle_structure(m);
    WeightMap ew(WeightKind::EDGE);
    Solution dim = solve_cycle_dp(CycleProblem::DIM, cs, g, ew);
    if (k % 3 == 0) {
      REQUIRE(dim.feasible);
      CHECK(dim.value == ExtendedWeight(k / 3));
    } else {
      CHECK(!dim.feasible);
    }
  }
}
