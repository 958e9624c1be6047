#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "cadom/graph.hpp"
#include "cadom/model.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cadom;

TEST_CASE("normalize_model produces a dense distinct grid") {
  CircularArcModel m = normalize_model({{10, 75}, {40, 120}, {100, 20}});
  CHECK(m.n() == 3);
  std::set<Pos> seen;
  for (const Arc& a : m.arcs) {
    CHECK(a.s >= 0);
    CHECK(a.s < m.grid());
    CHECK(a.t >= 0);
    CHECK(a.t < m.grid());
    seen.insert(a.s);
    seen.insert(a.t);
  }
  CHECK(static_cast<int>(seen.size()) == m.grid());
}

TEST_CASE("normalize_model is idempotent") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CircularArcModel m = fixtures::random_instance(seed, 8, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    for (const Arc& a : m.arcs) raw.push_back({a.s, a.t});
    CircularArcModel m2 = normalize_model(raw);
    for (int i = 0; i < m.n(); ++i) {
      CHECK(m2.arcs[i].s == m.arcs[i].s);
      CHECK(m2.arcs[i].t == m.arcs[i].t);
    }
  }
}

TEST_CASE("normalize_model rejects degenerate arcs") {
  CHECK_THROWS_AS(normalize_model({{5, 5}, {1, 3}}), Error);
}

TEST_CASE("cw_dist and containment basics") {
  CircularArcModel m = fixtures::cycle_model(4);  // grid 8
  CHECK(cw_dist(m, 0, 3) == 3);
  CHECK(cw_dist(m, 6, 1) == 3);
  CHECK(cw_dist(m, 2, 2) == 0);
  Arc wrap{0, 6, 1};
  CHECK(arc_contains(m, wrap, 7));
  CHECK(arc_contains(m, wrap, 0));
  CHECK(!arc_contains(m, wrap, 6));  // open at endpoints
  CHECK(!arc_contains(m, wrap, 1));
  CHECK(!arc_contains(m, wrap, 3));
}

TEST_CASE("arcs_intersect matches interiors overlapping") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CircularArcModel m = fixtures::random_instance(seed, 7, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    for (int i = 0; i < m.n(); ++i)
      for (int j = i + 1; j < m.n(); ++j) {
        // Interiors overlap iff both arcs span some common segment.
        bool overlap = false;
        for (int p = 0; p < m.grid() && !overlap; ++p) {
          auto covers_seg = [&](const Arc& x) {
            int d = cw_dist(m, x.s, p);
            return d + 1 <= arc_len(m, x);
          };
          overlap = covers_seg(m.arcs[i]) && covers_seg(m.arcs[j]);
        }
        CHECK(arcs_intersect(m, m.arcs[i], m.arcs[j]) == overlap);
      }
  }
}

TEST_CASE("segments alternate consistently with arc endpoints") {
  CircularArcModel m = fixtures::cycle_model(5);
  auto segs = segments(m);
  CHECK(static_cast<int>(segs.size()) == m.grid());
  for (const Segment& s : segs) {
    CHECK(s.right == (s.left + 1) % m.grid());
    CHECK(s.index == s.left);
  }
}

TEST_CASE("coverage extremes agree with the profile") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CircularArcModel m = fixtures::random_instance(seed, 9, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    auto prof = coverage_profile(m);
    auto ex = coverage_extremes(m);
    CHECK(*std::min_element(prof.begin(), prof.end()) == ex.min_cov);
    CHECK(*std::max_element(prof.begin(), prof.end()) == ex.max_cov);
    CHECK(prof[ex.min_witness] == ex.min_cov);
    CHECK(prof[ex.max_witness] == ex.max_cov);
    for (int s = 0; s < ex.min_witness; ++s) CHECK(prof[s] > ex.min_cov);
    for (int s = 0; s < ex.max_witness; ++s) CHECK(prof[s] < ex.max_cov);
    for (int s = 0; s < m.grid(); ++s)
      CHECK(prof[s] == static_cast<int>(arcs_at_segment(m, s).size()));
  }
}

TEST_CASE("find_universal_arc matches brute force") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 2 + static_cast<int>(seed % 8);
    CircularArcModel m = fixtures::random_instance(seed, n, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    std::optional<int> brute;
    for (int i = 0; i < m.n() && !brute; ++i) {
      bool uni = true;
      for (int j = 0; j < m.n(); ++j)
        if (j != i && !arcs_intersect(m, m.arcs[i], m.arcs[j])) uni = false;
      if (uni) brute = i;
    }
    CHECK(find_universal_arc(m) == brute);
  }
}

TEST_CASE("find_universal_arc on named families") {
  CHECK(!find_universal_arc(fixtures::cycle_model(6)).has_value());
  CHECK(!find_universal_arc(fixtures::cycle_model(4)).has_value());
  CircularArcModel star = fixtures::random_instance(3, 5, WeightStyle::UNIT, WeightKind::VERTEX,
                                                    Family::STAR).model;
  auto u = find_universal_arc(star);
  REQUIRE(u.has_value());
  for (int j = 0; j < star.n(); ++j)
    if (j != *u) CHECK(arcs_intersect(star, star.arcs[*u], star.arcs[j]));
}

TEST_CASE("count_intersecting_pairs equals intersection graph size") {
  CHECK(count_intersecting_pairs(fixtures::cycle_model(6)) == 6);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 1 + static_cast<int>(seed % 10);
    CircularArcModel m = fixtures::random_instance(seed, n, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    CHECK(count_intersecting_pairs(m) == intersection_graph(m).edge_count());
  }
}

TEST_CASE("find_small_cover is valid, minimal and lex-least") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int n = 2 + static_cast<int>(seed % 9);
    CircularArcModel m = fixtures::random_instance(seed, n, WeightStyle::UNIT,
                                                   WeightKind::VERTEX).model;
    for (int k : {2, 3}) {
      // Lex-least among covers of minimum size <= k, by brute enumeration.
      std::optional<std::vector<int>> brute;
      for (int sz = 1; sz <= k && !brute; ++sz) {
        std::vector<int> pick(sz, 0);
        auto rec = [&](auto&& self, int depth, int from) -> void {
          if (brute) return;
          if (depth == sz) {
            if (fixtures::brute_cover(m, pick)) brute = pick;
            return;
          }
          for (int i = from; i < m.n(); ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1);
            if (brute) return;
          }
        };
        rec(rec, 0, 0);
      }
      auto got = find_small_cover(m, k);
      REQUIRE(got.has_value() == brute.has_value());
      if (got) CHECK(*got == *brute);
    }
    CHECK(is_hca_by_cover(m) == !find_small_cover(m, 3).has_value());
  }
}

TEST_CASE("cover families really have small covers") {
  CircularArcModel c2 = fixtures::random_instance(1, 6, WeightStyle::UNIT, WeightKind::VERTEX,
                                                  Family::COVER2).model;
  CHECK(find_small_cover(c2, 2).has_value());
  CircularArcModel c3 = fixtures::random_instance(1, 6, WeightStyle::UNIT, WeightKind::VERTEX,
                                                  Family::COVER3).model;
  CHECK(find_small_cover(c3, 3).has_value());
}

TEST_CASE("extract_cycle_structure on a plain cycle") {
  CircularArcModel m = fixtures::cycle_model(6);
  CycleStructure cs = extract_cycle_structure(m);
  CHECK(cs.cycle == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (const auto& lv : cs.leaves) CHECK(lv.empty());
}

TEST_CASE("extract_cycle_structure with pendants") {
  CircularArcModel m = fixtures::cycle_with_pendants(5, {2, 0, 1, 0, 0});
  Graph g = intersection_graph(m);
  CycleStructure cs = extract_cycle_structure(m);
  REQUIRE(cs.cycle.size() == 5);
  int total_leaves = 0;
  for (std::size_t i = 0; i < cs.cycle.size(); ++i) {
    int prev = cs.cycle[(i + cs.cycle.size() - 1) % cs.cycle.size()];
    int next = cs.cycle[(i + 1) % cs.cycle.size()];
    CHECK(g.adjacent(cs.cycle[i], prev));
    CHECK(g.adjacent(cs.cycle[i], next));
    for (int leaf : cs.leaves[i]) {
      total_leaves += 1;
      CHECK(g.neighbors(leaf).size() == 1);
      CHECK(g.adjacent(leaf, cs.cycle[i]));
    }
  }
  CHECK(total_leaves == 3);
}

TEST_CASE("cut_at splits exactly the covering arcs") {
  CircularArcModel m = fixtures::cycle_model(6);
  int seg = coverage_extremes(m).max_witness;
  auto covering = arcs_at_segment(m, seg);
  auto [cut, map] = cut_at(m, seg);
  CHECK(cut.n() == m.n() + static_cast<int>(covering.size()));
  CHECK(coverage_extremes(cut).min_cov == 0);
  for (int v = 0; v < m.n(); ++v) {
    bool split = std::find(covering.begin(), covering.end(), v) != covering.end();
    CHECK(map.image[v].size() == (split ? 2u : 1u));
    for (int nv : map.image[v]) CHECK(map.origin[nv] == v);
    if (split) {
      CHECK(map.tag[map.image[v][0]] == SurgeryTag::LEFT_PART);
      CHECK(map.tag[map.image[v][1]] == SurgeryTag::RIGHT_PART);
    } else {
      CHECK(map.tag[map.image[v][0]] == SurgeryTag::COPY);
    }
  }
  CHECK(map.added.empty());
  // Non-split arcs keep their pairwise intersections.
  for (int a = 0; a < m.n(); ++a)
    for (int b = a + 1; b < m.n(); ++b) {
      if (map.image[a].size() != 1 || map.image[b].size() != 1) continue;
      CHECK(arcs_intersect(cut, cut.arcs[map.image[a][0]], cut.arcs[map.image[b][0]]) ==
            arcs_intersect(m, m.arcs[a], m.arcs[b]));
    }
}

TEST_CASE("insert_arcs places new arcs without disturbing copies") {
  CircularArcModel m = fixtures::cycle_model(4);
  int seg = coverage_extremes(m).max_witness;
  auto [m2, map] = insert_arcs(m, {{{seg, 7}, {seg, 9}, SurgeryTag::EXTRA}});
  CHECK(m2.n() == m.n() + 1);
  REQUIRE(map.added.size() == 1);
  int added = map.added[0];
  CHECK(map.origin[added] == -1);
  CHECK(map.tag[added] == SurgeryTag::EXTRA);
  Graph g = intersection_graph(m);
  Graph g2 = intersection_graph(m2);
  for (int a = 0; a < m.n(); ++a)
    for (int b = a + 1; b < m.n(); ++b)
      CHECK(g2.adjacent(map.image[a][0], map.image[b][0]) == g.adjacent(a, b));
  // The tiny arc lies inside segment `seg`, so it meets exactly the arcs there.
  for (int a = 0; a < m.n(); ++a) {
    auto at = arcs_at_segment(m, seg);
    bool covers = std::find(at.begin(), at.end(), a) != at.end();
    CHECK(g2.adjacent(map.image[a][0], added) == covers);
  }
}

TEST_CASE("split_arc_at divides one arc and keeps the rest") {
  CircularArcModel m = fixtures::cycle_model(5);
  auto ex = coverage_extremes(m);
  int seg = ex.min_witness;
  auto at = arcs_at_segment(m, seg);
  REQUIRE(at.size() == 1);
  int v = at[0];
  auto [m2, map] = split_arc_at(m, v, seg, {});
  CHECK(m2.n() == m.n() + 1);
  CHECK(map.image[v].size() == 2);
  CHECK(map.tag[map.image[v][0]] == SurgeryTag::LEFT_PART);
  CHECK(map.tag[map.image[v][1]] == SurgeryTag::RIGHT_PART);
  // The two halves are disjoint: the cut point separates them.
  CHECK(!arcs_intersect(m2, m2.arcs[map.image[v][0]], m2.arcs[map.image[v][1]]));
  CHECK(coverage_extremes(m2).min_cov == 0);
}
