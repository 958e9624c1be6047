#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cadom/solvers.hpp"

namespace cadom {

namespace {

Solution empty_feasible(std::string label) {
  Solution s;
  s.feasible = true;
  s.value = ExtendedWeight(0);
  s.trace.push_back(std::move(label));
  return s;
}

// Keeps the first strict minimum among candidate solutions.
struct Best {
  Solution sol;
  bool has = false;
  void offer(Solution cand) {
    if (!cand.feasible || cand.value.is_infinite()) return;
    if (!has || cand.value < sol.value) {
      sol = std::move(cand);
      has = true;
    }
  }
};

ExtendedWeight edge_sum(const Graph& g, const WeightMap& w, const std::vector<int>& edges) {
  ExtendedWeight s(0);
  for (int e : edges) {
    auto [a, b] = g.edge(e);
    s += w.edge(a, b);
  }
  return s;
}

std::vector<int> all_edge_ids(const Graph& g) {
  std::vector<int> e(g.edge_count());
  for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(i);
  return e;
}

// Maps member edges of a derived model back to edge ids of the original
// graph through per-arc origins, collapsing duplicates. Edges incident to
// inserted arcs (origin -1) are dropped.
std::vector<int> map_edges_back(const std::vector<int>& members, const Graph& derived_g,
                                const SurgeryMap& map, const Graph& orig_g) {
  std::set<int> out;
  for (int e : members) {
    auto [x, y] = derived_g.edge(e);
    int ox = map.origin.at(x), oy = map.origin.at(y);
    if (ox < 0 || oy < 0) continue;
    int oe = orig_g.edge_id(ox, oy);
    if (oe < 0) throw Error(ErrorCode::Internal, "derived edge maps outside the original graph");
    out.insert(oe);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TriangleWeightings build_triangle_weightings(const CircularArcModel& orig, const WeightMap& w,
                                             const CircularArcModel& cut_model,
                                             const SurgeryMap& map) {
  TriangleWeightings tw;
  std::vector<int> split;
  for (int v = 0; v < orig.n(); ++v)
    if (map.image[v].size() == 2) split.push_back(v);
  if (split.size() != 3) throw Error(ErrorCode::PreconditionViolated, "cut is not a 3-way split");
  for (int i = 0; i < 3; ++i) {
    tw.left[i] = map.image[split[i]][0];
    tw.right[i] = map.image[split[i]][1];
  }

  Graph og = intersection_graph(orig);
  Rational sum_abs = 0;
  for (auto [a, b] : og.edges()) {
    ExtendedWeight x = w.edge(a, b);
    if (x.is_infinite()) throw Error(ErrorCode::PreconditionViolated, "infinite edge weight");
    sum_abs += abs(x.value());
  }
  tw.sum_omega = sum_abs;
  tw.bigM = ExtendedWeight(Rational(1) + 4 * sum_abs);

  Graph cg = intersection_graph(cut_model);
  auto is_penalized = [&](int i, int x, int y) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      if ((x == tw.left[i] && y == tw.left[j]) || (y == tw.left[i] && x == tw.left[j])) return true;
      if ((x == tw.right[i] && y == tw.right[j]) || (y == tw.right[i] && x == tw.right[j]))
        return true;
    }
    return false;
  };
  for (int i = 0; i < 3; ++i) {
    WeightMap omega(WeightKind::EDGE);
    for (auto [x, y] : cg.edges()) {
      if (is_penalized(i, x, y)) omega.set_edge(x, y, tw.bigM);
      else omega.set_edge(x, y, w.edge(map.origin[x], map.origin[y]));
    }
    tw.omega.push_back(std::move(omega));
  }
  return tw;
}

Solution combine_dim_triangle(const std::array<Solution, 3>& dims, const TriangleWeightings& tw,
                              const CircularArcModel& orig, const WeightMap& w,
                              const CircularArcModel& cut_model, const SurgeryMap& map) {
  Graph og = intersection_graph(orig);
  Graph cg = intersection_graph(cut_model);
  // A solution that uses a penalized edge costs at least 1 + 2 * sum_omega;
  // every clean one is bounded by 2 * sum_omega in absolute value.
  ExtendedWeight clean_bound(2 * tw.sum_omega);
  int win = -1;
  ExtendedWeight best = ExtendedWeight::infinity();
  for (int i = 0; i < 3; ++i) {
    if (!dims[i].feasible || dims[i].value.is_infinite() || dims[i].value > clean_bound) continue;
    int j = (i + 1) % 3, k = (i + 2) % 3;
    std::vector<int> orig_ids;
    for (int v = 0; v < orig.n(); ++v)
      if (map.image[v].size() == 2) orig_ids.push_back(v);
    ExtendedWeight val = dims[i].value - w.edge(orig_ids[j], orig_ids[k]);
    if (win < 0 || val < best) {
      win = i;
      best = val;
    }
  }
  if (win < 0) return Solution::infeasible_solution();

  int j = (win + 1) % 3, k = (win + 2) % 3;
  int el = cg.edge_id(tw.left[j], tw.left[k]);
  int er = cg.edge_id(tw.right[j], tw.right[k]);
  const auto& mem = dims[win].members;
  auto has = [&](int e) { return std::find(mem.begin(), mem.end(), e) != mem.end(); };
  if (el < 0 || er < 0 || !has(el) || !has(er))
    throw Error(ErrorCode::InconsistentMapping, "winning solution lacks the mandatory pair");

  Solution out;
  out.feasible = true;
  out.value = best;
  out.members = map_edges_back(mem, cg, map, og);
  return out;
}

Solution solve_mweed(const CircularArcModel& m, const WeightMap& w) {
  if (m.n() == 0) return empty_feasible("mweed/edge-precheck");
  if (count_intersecting_pairs(m) > 2LL * m.n()) {
    Solution s = Solution::infeasible_solution();
    s.trace.push_back("mweed/edge-precheck-infeasible");
    return s;
  }
  if (auto cover = find_small_cover(m, 3)) {
    Graph g = intersection_graph(m);
    Solution s = solve_dim_fixed_domset(g, w, *cover, m);
    s.trace.insert(s.trace.begin(), "mweed/small-cover-domset");
    return s;
  }
  CoverageExtremes ce = coverage_extremes(m);
  if (ce.max_cov >= 4) {
    Solution s = Solution::infeasible_solution();
    s.trace.push_back("mweed/not-k4-free");
    return s;
  }
  if (ce.min_cov == 0) {
    Solution s = solve_dim_interval(m, w, Precoloring::all_free(m.n()));
    s.trace.insert(s.trace.begin(), "mweed/interval");
    return s;
  }
  if (ce.max_cov <= 1) return empty_feasible("mweed/edgeless");
  if (ce.max_cov == 2) {
    Graph g = intersection_graph(m);
    CycleStructure cs = extract_cycle_structure(m);
    Solution s = solve_cycle_dp(CycleProblem::DIM, cs, g, w);
    s.trace.insert(s.trace.begin(), "mweed/cycle-pendants");
    return s;
  }
  auto [cut_model, map] = cut_at(m, ce.max_witness);
  TriangleWeightings tw = build_triangle_weightings(m, w, cut_model, map);
  std::array<Solution, 3> dims;
  for (int i = 0; i < 3; ++i)
    dims[i] = solve_dim_interval(cut_model, tw.omega[i], Precoloring::all_free(cut_model.n()));
  Solution s = combine_dim_triangle(dims, tw, m, w, cut_model, map);
  s.trace.insert(s.trace.begin(), "mweed/triangle-cut");
  return s;
}

std::array<PvdModel, 3> build_pvd_models(const CircularArcModel& m, int seg, int v,
                                         const WeightMap& w) {
  if (find_universal_arc(m))
    throw Error(ErrorCode::PreconditionViolated, "model has a universal arc");
  std::vector<int> at = arcs_at_segment(m, seg);
  if (at.size() != 1 || at[0] != v)
    throw Error(ErrorCode::PreconditionViolated, "segment is not privately covered by the arc");

  InsertArcSpec leaf_minus{{seg, 3}, {seg, 5}, SurgeryTag::LEAF_MINUS};
  InsertArcSpec leaf_plus{{seg, 10}, {seg, 12}, SurgeryTag::LEAF_PLUS};
  std::array<std::vector<InsertArcSpec>, 3> extras = {
      std::vector<InsertArcSpec>{leaf_minus, leaf_plus},
      std::vector<InsertArcSpec>{leaf_minus},
      std::vector<InsertArcSpec>{leaf_plus}};

  std::array<PvdModel, 3> out;
  for (int k = 0; k < 3; ++k) {
    auto [model, map] = split_arc_at(m, v, seg, extras[k]);
    WeightMap ww(WeightKind::VERTEX);
    for (int u = 0; u < m.n(); ++u) {
      if (u == v) continue;
      ww.set_vertex(map.image[u][0], w.vertex(u));
    }
    ExtendedWeight wv = w.vertex(v);
    if (wv.is_infinite()) throw Error(ErrorCode::PreconditionViolated, "infinite vertex weight");
    if (k == 0) {
      ExtendedWeight half(wv.value() / 2);
      ww.set_vertex(map.image[v][0], half);
      ww.set_vertex(map.image[v][1], half);
      for (int a : map.added) ww.set_vertex(a, ExtendedWeight::infinity());
    } else {
      ww.set_vertex(map.image[v][0], ExtendedWeight::infinity());
      ww.set_vertex(map.image[v][1], ExtendedWeight::infinity());
      ww.set_vertex(map.added[0], ExtendedWeight(0));
    }
    out[k] = PvdModel{std::move(model), std::move(ww), std::move(map)};
  }
  return out;
}

Solution map_back_pvd(const Solution& sol, const PvdModel& pm, int variant,
                      const CircularArcModel& orig, int split_vertex) {
  if (!sol.feasible || sol.value.is_infinite())
    throw Error(ErrorCode::MappingViolated, "split-model solution is not finite");
  for (int x : sol.members)
    if (pm.weights.vertex(x).is_infinite())
      throw Error(ErrorCode::MappingViolated, "solution uses a forbidden vertex");

  std::set<int> members;
  bool left = false, right = false;
  for (int x : sol.members) {
    switch (pm.map.tag.at(x)) {
      case SurgeryTag::COPY:
        members.insert(pm.map.origin[x]);
        break;
      case SurgeryTag::LEFT_PART:
        left = true;
        break;
      case SurgeryTag::RIGHT_PART:
        right = true;
        break;
      default:
        break;  // the weight-0 leaf is dropped
    }
  }
  if (variant == 0) {
    if (!left || !right)
      throw Error(ErrorCode::Internal, "split halves are forced members yet missing");
    members.insert(split_vertex);
  } else if (left || right) {
    throw Error(ErrorCode::MappingViolated, "solution uses a forbidden vertex");
  }
  (void)orig;
  Solution out;
  out.feasible = true;
  out.value = sol.value;
  out.members.assign(members.begin(), members.end());
  return out;
}

namespace {

std::vector<int> universal_arcs(const CircularArcModel& m) {
  std::vector<int> out;
  for (const Arc& a : m.arcs) {
    bool uni = true;
    for (const Arc& b : m.arcs)
      if (a.id != b.id && !arcs_intersect(m, a, b)) {
        uni = false;
        break;
      }
    if (uni) out.push_back(a.id);
  }
  return out;
}

}  // namespace

Solution solve_mwpvd(const CircularArcModel& m, const WeightMap& w) {
  if (m.n() == 0) return empty_feasible("mwpvd/universal-multi");
  int n = m.n();
  std::vector<int> uni = universal_arcs(m);

  if (uni.size() >= 2) {
    Best best;
    for (int u : uni) {
      Solution s;
      s.feasible = true;
      s.value = w.vertex(u);
      s.members = {u};
      best.offer(std::move(s));
    }
    Solution all;
    all.feasible = true;
    all.value = ExtendedWeight(0);
    for (int v = 0; v < n; ++v) {
      all.value += w.vertex(v);
      all.members.push_back(v);
    }
    best.offer(std::move(all));
    best.sol.trace.insert(best.sol.trace.begin(), "mwpvd/universal-multi");
    return best.sol;
  }

  if (uni.size() == 1) {
    // The unique universal vertex is in every optimal set; beyond it, whole
    // components of the rest may join, and exactly the negative-total ones pay.
    int u1 = uni[0];
    Graph g = intersection_graph(m);
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (v == u1 || comp[v] >= 0) continue;
      std::vector<int> stack{v};
      comp[v] = nc;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : g.neighbors(x))
          if (y != u1 && comp[y] < 0) {
            comp[y] = nc;
            stack.push_back(y);
          }
      }
      ++nc;
    }
    std::vector<ExtendedWeight> total(nc, ExtendedWeight(0));
    for (int v = 0; v < n; ++v)
      if (v != u1) total[comp[v]] += w.vertex(v);
    Solution s;
    s.feasible = true;
    s.value = w.vertex(u1);
    s.members = {u1};
    for (int v = 0; v < n; ++v)
      if (v != u1 && total[comp[v]].is_negative()) s.members.push_back(v);
    for (int c = 0; c < nc; ++c)
      if (total[c].is_negative()) s.value += total[c];
    std::sort(s.members.begin(), s.members.end());
    s.trace.push_back("mwpvd/universal-single");
    return s;
  }

  CoverageExtremes ce = coverage_extremes(m);
  Best best;
  std::string case_label;
  if (ce.min_cov == 0) {
    case_label = "mwpvd/interval";
    best.offer(solve_mwpvd_interval(m, w));
  } else if (ce.min_cov >= 2) {
    case_label = "mwpvd/full-vertex-set";
    Solution all;
    all.feasible = true;
    all.value = ExtendedWeight(0);
    for (int v = 0; v < n; ++v) {
      all.value += w.vertex(v);
      all.members.push_back(v);
    }
    best.offer(std::move(all));
  } else {
    case_label = "mwpvd/split-models";
    int seg = ce.min_witness;
    int v = arcs_at_segment(m, seg).at(0);
    auto pms = build_pvd_models(m, seg, v, w);
    for (int k = 0; k < 3; ++k) {
      Solution s = solve_mwpvd_interval(pms[k].model, pms[k].weights);
      if (!s.feasible || s.value.is_infinite()) continue;
      best.offer(map_back_pvd(s, pms[k], k, m, v));
    }
  }

  Solution eds = solve_mwevd(m, w);
  bool eds_won = false;
  if (eds.feasible && (!best.has || eds.value < best.sol.value)) eds_won = true;
  best.offer(std::move(eds));
  if (!best.has) throw Error(ErrorCode::Internal, "perfect vertex domination lost feasibility");
  best.sol.trace.clear();
  best.sol.trace.push_back(case_label);
  if (eds_won) best.sol.trace.push_back("mwpvd/eds-candidate");
  return best.sol;
}

namespace {

// Interval reduction for a model whose maximum coverage point lies in q >= 4
// arcs: split all q arcs there; the duplicated clique edges cost their
// original weight on the left side and 0 on the right. Members map back by
// merging the halves.
Solution mwped_clique_split(const CircularArcModel& mm, const WeightMap& ww) {
  CoverageExtremes ce = coverage_extremes(mm);
  auto [cut_model, map] = cut_at(mm, ce.max_witness);
  Graph cg = intersection_graph(cut_model);
  WeightMap wstar(WeightKind::EDGE);
  for (auto [x, y] : cg.edges()) {
    int ox = map.origin[x], oy = map.origin[y];
    bool xs = map.tag[x] != SurgeryTag::COPY, ys = map.tag[y] != SurgeryTag::COPY;
    if (xs && ys && map.tag[x] == SurgeryTag::RIGHT_PART) wstar.set_edge(x, y, ExtendedWeight(0));
    else wstar.set_edge(x, y, ww.edge(ox, oy));
  }
  Solution s = solve_mwped_interval(cut_model, wstar);
  if (!s.feasible || s.value.is_infinite()) return Solution::infeasible_solution();
  Graph og = intersection_graph(mm);
  Solution out;
  out.feasible = true;
  out.value = s.value;
  out.members = map_edges_back(s.members, cg, map, og);
  return out;
}

}  // namespace

Solution solve_mwped(const CircularArcModel& m, const WeightMap& w) {
  if (m.n() == 0) return empty_feasible("mwped/all-edges");
  Graph g = intersection_graph(m);

  struct Cand {
    Solution sol;
    std::string label;
  };
  std::vector<Cand> cands;

  Solution all;
  all.feasible = true;
  all.members = all_edge_ids(g);
  all.value = edge_sum(g, w, all.members);
  cands.push_back({std::move(all), "mwped/all-edges"});

  Solution dim = solve_mweed(m, w);
  if (dim.feasible && !dim.value.is_infinite()) {
    dim.trace.clear();
    cands.push_back({std::move(dim), "mwped/dim-candidate"});
  }

  std::string case_label;
  if (auto c2 = find_small_cover(m, 2)) {
    case_label = "mwped/two-cover";
    // One cover arc black, the other gray: the gray one's other neighbors
    // are white and everything else is not, so the member set is forced.
    for (int round = 0; round < 2; ++round) {
      int black = (*c2)[round], gray = (*c2)[1 - round];
      std::vector<char> white(m.n(), 0);
      for (int x : g.neighbors(gray))
        if (x != black) white[x] = 1;
      if (white[black]) continue;  // adjacent halves conflict
      std::vector<int> members;
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        if (!white[a] && !white[b]) members.push_back(e);
      }
      if (!verify(Problem::MWPED, g, members)) continue;
      Solution s;
      s.feasible = true;
      s.value = edge_sum(g, w, members);
      s.members = std::move(members);
      cands.push_back({std::move(s), "mwped/forced-coloring"});
    }
  } else if (find_small_cover(m, 3)) {
    case_label = "mwped/three-cover";  // every further color combination is invalid
  } else {
    CoverageExtremes ce = coverage_extremes(m);
    if (ce.min_cov == 0) {
      case_label = "mwped/interval";
      cands.push_back({solve_mwped_interval(m, w), "mwped/interval"});
    } else if (ce.max_cov <= 1) {
      case_label = "mwped/edgeless";
    } else if (ce.max_cov >= 4) {
      case_label = "mwped/clique-split";
      cands.push_back({mwped_clique_split(m, w), "mwped/clique-split"});
    } else if (ce.max_cov == 3) {
      case_label = "mwped/k3";
      // Branch 1: force the triangle black by completing it to a K4 with a
      // tiny zero-weight arc inside the witness segment.
      {
        int seg = ce.max_witness;
        std::vector<int> tri = arcs_at_segment(m, seg);
        auto [m2, map2] = insert_arcs(m, {InsertArcSpec{{seg, 7}, {seg, 9}, SurgeryTag::EXTRA}});
        int added = map2.added.at(0);
        WeightMap w2(WeightKind::EDGE);
        for (const auto& [k, v] : w.edge_entries()) w2.set_edge(k.first, k.second, v);
        for (int t : tri) w2.set_edge(t, added, ExtendedWeight(0));
        Solution s2 = mwped_clique_split(m2, w2);
        if (s2.feasible) {
          Graph g2 = intersection_graph(m2);
          Solution s;
          s.feasible = true;
          s.value = s2.value;  // the dropped added-arc edges all cost 0
          s.members = map_edges_back(s2.members, g2, map2, g);
          cands.push_back({std::move(s), "mwped/k3-augment"});
        }
      }
      // Branch 2: one triangle vertex white, the other two gray. Split the
      // triangle and forbid (with infinite weight) the pairings that would
      // make the white designate non-white.
      {
        auto [cut_model, map] = cut_at(m, ce.max_witness);
        Graph cg = intersection_graph(cut_model);
        std::vector<int> split;
        for (int v = 0; v < m.n(); ++v)
          if (map.image[v].size() == 2) split.push_back(v);
        for (int j = 0; j < 3; ++j) {
          WeightMap wj(WeightKind::EDGE);
          for (auto [x, y] : cg.edges()) {
            int ox = map.origin[x], oy = map.origin[y];
            bool xs = map.tag[x] != SurgeryTag::COPY, ys = map.tag[y] != SurgeryTag::COPY;
            if (!xs || !ys) {
              wj.set_edge(x, y, w.edge(ox, oy));
            } else if (ox == split[j] || oy == split[j]) {
              wj.set_edge(x, y, ExtendedWeight::infinity());
            } else if (map.tag[x] == SurgeryTag::LEFT_PART) {
              wj.set_edge(x, y, w.edge(ox, oy));
            } else {
              wj.set_edge(x, y, ExtendedWeight(0));
            }
          }
          Solution s = solve_mwped_interval(cut_model, wj);
          if (!s.feasible || s.value.is_infinite()) continue;
          Solution mapped;
          mapped.feasible = true;
          mapped.value = s.value;
          mapped.members = map_edges_back(s.members, cg, map, g);
          cands.push_back({std::move(mapped), "mwped/k3-split"});
        }
      }
    } else {
      CycleStructure cs = extract_cycle_structure(m);
      bool leaves = false;
      for (const auto& l : cs.leaves) leaves |= !l.empty();
      case_label = leaves ? "mwped/cycle-pendants" : "mwped/cycle";
      Solution s = solve_cycle_dp(CycleProblem::PED, cs, g, w);
      s.trace.clear();
      cands.push_back({std::move(s), case_label});
    }
  }

  int win = -1;
  for (size_t i = 0; i < cands.size(); ++i) {
    const Solution& s = cands[i].sol;
    if (!s.feasible || s.value.is_infinite()) continue;
    if (win < 0 || s.value < cands[win].sol.value) win = static_cast<int>(i);
  }
  if (win < 0) throw Error(ErrorCode::Internal, "perfect edge domination lost feasibility");
  Solution out = std::move(cands[win].sol);
  out.trace.clear();
  out.trace.push_back(case_label);
  if (cands[win].label != case_label) out.trace.push_back(cands[win].label);
  return out;
}

Solution solve(Problem p, const CircularArcModel& m, const WeightMap& w) {
  WeightKind need = is_edge_problem(p) ? WeightKind::EDGE : WeightKind::VERTEX;
  if (w.kind() != need) throw Error(ErrorCode::KindMismatch, "weight kind does not match problem");
  bool need_nonneg = (p == Problem::MWEVD || p == Problem::MWEED);
  auto check = [&](const ExtendedWeight& x) {
    if (x.is_infinite() || (need_nonneg && x.is_negative()))
      throw Error(ErrorCode::WeightSignViolation, "weight outside the accepted range");
  };
  for (const auto& e : w.vertex_entries()) check(e.second);
  for (const auto& e : w.edge_entries()) check(e.second);

  Solution s;
  switch (p) {
    case Problem::MWEVD: s = solve_mwevd(m, w); break;
    case Problem::MWEED: s = solve_mweed(m, w); break;
    case Problem::MWPVD: s = solve_mwpvd(m, w); break;
    case Problem::MWPED: s = solve_mwped(m, w); break;
  }
  if (s.feasible && !s.value.is_infinite() && m.n() <= 300) {
    Graph g = intersection_graph(m);
    if (!verify(p, g, s.members) || solution_weight(p, g, w, s.members) != s.value)
      throw Error(ErrorCode::Internal, "solution failed self-verification");
  }
  return s;
}

}  // namespace cadom
