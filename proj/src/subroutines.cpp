#include "cadom/subroutines.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <tuple>

namespace cadom {

namespace {

// Member trail for reconstruction: (u, v) is an edge for v >= 0, else vertex u.
struct Trail {
  int u, v;
  std::shared_ptr<const Trail> prev;
};
using TrailPtr = std::shared_ptr<const Trail>;

TrailPtr trail_add(const TrailPtr& p, int u, int v = -1) {
  return std::make_shared<const Trail>(Trail{u, v, p});
}

std::vector<int> trail_vertices(const TrailPtr& p) {
  std::vector<int> out;
  for (const Trail* t = p.get(); t; t = t->prev.get()) out.push_back(t->u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> trail_edges(const TrailPtr& p) {
  std::vector<std::pair<int, int>> out;
  for (const Trail* t = p.get(); t; t = t->prev.get())
    out.emplace_back(std::min(t->u, t->v), std::max(t->u, t->v));
  std::sort(out.begin(), out.end());
  return out;
}

// Model re-read as intervals on a line cut open at segment `cut`: coordinate
// of position p is its clockwise distance from cut+1. Arcs not crossing the
// cut satisfy s < t in line coordinates.
struct LineView {
  int g = 0;
  std::vector<int> s, t;                    // line coords per arc
  std::vector<std::pair<int, int>> events;  // per coordinate: (arc, 0 start / 1 end)
  std::vector<char> wraps;                  // arc crosses the cut

  LineView(const CircularArcModel& m, int cut) {
    g = m.grid();
    s.resize(m.n());
    t.resize(m.n());
    wraps.assign(m.n(), 0);
    events.assign(g, {-1, -1});
    Pos origin = (cut + 1) % g;
    for (const Arc& a : m.arcs) {
      s[a.id] = cw_dist(m, origin, a.s);
      t[a.id] = cw_dist(m, origin, a.t);
      if (s[a.id] > t[a.id]) wraps[a.id] = 1;
      events[s[a.id]] = {a.id, 0};
      events[t[a.id]] = {a.id, 1};
    }
  }
};

int interval_cut(const CircularArcModel& m) {
  CoverageExtremes e = coverage_extremes(m);
  if (e.min_cov != 0) throw Error(ErrorCode::PreconditionViolated, "not an interval model");
  return e.min_witness;
}

// Maps (u, v) arc pairs to edge ids of intersection_graph(m).
std::vector<int> edge_ids_of(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> out;
  for (auto [a, b] : pairs) {
    int e = g.edge_id(a, b);
    if (e < 0) throw Error(ErrorCode::Internal, "member edge not in graph");
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Costed {
  ExtendedWeight cost;
  TrailPtr trail;
};

// Keeps the first-inserted value on cost ties: deterministic tie-break.
template <typename K>
void relax(std::map<K, Costed>& dst, const K& key, ExtendedWeight cost, TrailPtr trail) {
  if (cost.is_infinite()) return;
  auto it = dst.find(key);
  if (it == dst.end() || cost < it->second.cost)
    dst[key] = Costed{std::move(cost), std::move(trail)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Minimum-weight dominating set.
//
// Negative weights are clamped: strictly negative vertices are forced members
// (including them never hurts domination and always helps the objective), the
// remaining problem has nonnegative weights. The sweep keeps Pareto states
// (M, cost) where M is the furthest line reach of chosen arcs; an arc ending
// undominated prunes the state. Arcs crossing the cut are handled by guessing
// the chosen crossing arc with the furthest head (sweep per guess), or by
// assuming none is chosen and enumerating the first chosen arc.
// ---------------------------------------------------------------------------

Solution solve_mwds_ca(const CircularArcModel& m, const WeightMap& w) {
  Solution out;
  if (m.n() == 0) {
    out.feasible = true;
    out.value = ExtendedWeight(0);
    return out;
  }
  int n = m.n();
  ExtendedWeight base(0);
  std::vector<char> forced(n, 0);
  std::vector<ExtendedWeight> cw(n, ExtendedWeight(0));
  for (int v = 0; v < n; ++v) {
    ExtendedWeight wv = w.vertex(v);
    if (wv.is_infinite()) throw Error(ErrorCode::PreconditionViolated, "infinite vertex weight");
    if (wv.is_negative()) {
      forced[v] = 1;
      base += wv;
    } else {
      cw[v] = wv;
    }
  }

  CoverageExtremes ce = coverage_extremes(m);
  LineView lv(m, ce.min_witness);
  const int INF_M = lv.g + 5;

  std::vector<int> wrap_ids, nonwrap_ids;
  for (int v = 0; v < n; ++v) (lv.wraps[v] ? wrap_ids : nonwrap_ids).push_back(v);

  auto pareto = [](std::map<int, Costed>& st) {
    ExtendedWeight best = ExtendedWeight::infinity();
    for (auto it = st.rbegin(); it != st.rend();) {
      if (it->second.cost < best) {
        best = it->second.cost;
        ++it;
      } else {
        it = decltype(it)(st.erase(std::next(it).base()));
      }
    }
  };

  ExtendedWeight best_cost = ExtendedWeight::infinity();
  TrailPtr best_trail;
  auto offer = [&](const ExtendedWeight& c, const TrailPtr& tr) {
    if (!c.is_infinite() && c < best_cost) {
      best_cost = c;
      best_trail = tr;
    }
  };

  // Sweep with one crossing arc guessed as chosen (with the furthest head).
  int max_forced_head = -1;
  for (int u : wrap_ids)
    if (forced[u]) max_forced_head = std::max(max_forced_head, lv.t[u]);
  for (int ustar : wrap_ids) {
    if (lv.t[ustar] < max_forced_head) continue;  // a forced crossing arc reaches further
    std::map<int, Costed> st;
    TrailPtr tr = trail_add(nullptr, ustar);
    for (int f : wrap_ids)
      if (forced[f] && f != ustar) tr = trail_add(tr, f);
    st[lv.t[ustar]] = Costed{cw[ustar], tr};
    for (int x = 0; x < lv.g && !st.empty(); ++x) {
      auto [arc, kind] = lv.events[x];
      if (!lv.wraps[arc]) {
        if (kind == 1) {
          // arc ends: must be dominated, i.e. some chosen reach beyond its start
          for (auto it = st.begin(); it != st.end();)
            it = (it->first <= lv.s[arc] && it->first != INF_M) ? st.erase(it) : std::next(it);
        } else {
          std::map<int, Costed> nxt;
          for (const auto& [M, cs] : st) {
            if (!forced[arc]) relax(nxt, M, cs.cost, cs.trail);
            relax(nxt, std::max(M, lv.t[arc]), cs.cost + cw[arc], trail_add(cs.trail, arc));
          }
          st = std::move(nxt);
        }
      } else if (kind == 0) {
        // tail of a crossing arc
        bool mandatory = arc == ustar || forced[arc];
        if (mandatory) {
          std::map<int, Costed> nxt;
          for (const auto& [M, cs] : st) relax(nxt, INF_M, cs.cost, cs.trail);
          st = std::move(nxt);
        } else if (lv.t[arc] < lv.t[ustar]) {
          std::map<int, Costed> nxt;
          for (const auto& [M, cs] : st) {
            relax(nxt, M, cs.cost, cs.trail);
            relax(nxt, INF_M, cs.cost + cw[arc], trail_add(cs.trail, arc));
          }
          st = std::move(nxt);
        }
      }
      pareto(st);
    }
    for (const auto& [M, cs] : st) offer(cs.cost, cs.trail);
  }

  // Sweep with no crossing arc chosen (impossible when one is forced).
  bool wrap_forced = false;
  for (int u : wrap_ids) wrap_forced = wrap_forced || forced[u];
  if (!wrap_forced && !nonwrap_ids.empty()) {
    int minT = lv.g + 1, fmin = lv.g + 1;
    for (int v : nonwrap_ids) {
      minT = std::min(minT, lv.t[v]);
      if (forced[v]) fmin = std::min(fmin, lv.s[v]);
    }
    for (int first : nonwrap_ids) {
      if (lv.s[first] >= minT || lv.s[first] > fmin) continue;
      int pmax = -1;  // crossing arcs the first choice does not reach
      for (int u : wrap_ids)
        if (lv.t[u] < lv.s[first]) pmax = std::max(pmax, lv.s[u]);
      std::map<int, Costed> st;
      st[lv.t[first]] = Costed{cw[first], trail_add(nullptr, first)};
      for (int x = lv.s[first] + 1; x < lv.g && !st.empty(); ++x) {
        auto [arc, kind] = lv.events[x];
        if (lv.wraps[arc]) continue;
        if (kind == 1) {
          for (auto it = st.begin(); it != st.end();)
            it = (it->first <= lv.s[arc] && it->first != INF_M) ? st.erase(it) : std::next(it);
        } else {
          std::map<int, Costed> nxt;
          for (const auto& [M, cs] : st) {
            if (!forced[arc]) relax(nxt, M, cs.cost, cs.trail);
            relax(nxt, std::max(M, lv.t[arc]), cs.cost + cw[arc], trail_add(cs.trail, arc));
          }
          st = std::move(nxt);
        }
        pareto(st);
      }
      for (const auto& [M, cs] : st)
        if (M > pmax) offer(cs.cost, cs.trail);
    }
  }

  if (best_cost.is_infinite()) throw Error(ErrorCode::Internal, "dominating set search failed");
  out.feasible = true;
  out.value = base + best_cost;
  out.members = trail_vertices(best_trail);
  return out;
}

// ---------------------------------------------------------------------------
// Perfect vertex domination on an interval model. State (E1, E2, k): the two
// largest member ends so far and the number of member ends below E2 still in
// the future. A non-member u needs exactly one member end beyond its start:
// E1 > s_u and E2 <= s_u. Any arc ending strictly below E2 must be a member
// whose end was pushed out of the top two (k pays for it).
// ---------------------------------------------------------------------------

Solution solve_mwpvd_interval(const CircularArcModel& m, const WeightMap& w) {
  Solution out;
  if (m.n() == 0) {
    out.feasible = true;
    out.value = ExtendedWeight(0);
    return out;
  }
  LineView lv(m, interval_cut(m));
  using Key = std::array<int, 3>;  // E1 >= E2, k
  std::map<Key, Costed> st;
  st[{-1, -1, 0}] = Costed{ExtendedWeight(0), nullptr};
  for (int x = 0; x < lv.g && !st.empty(); ++x) {
    auto [arc, kind] = lv.events[x];
    std::map<Key, Costed> nxt;
    if (kind == 0) {
      ExtendedWeight wv = w.vertex(arc);
      for (const auto& [key, cs] : st) {
        relax(nxt, key, cs.cost, cs.trail);  // postpone: membership checked at the end event
        if (wv.is_infinite()) continue;
        std::array<int, 3> ends{key[0], key[1], lv.t[arc]};
        std::sort(ends.begin(), ends.end());
        int k = key[2] + (ends[0] > x ? 1 : 0);  // pushed-out end still ahead
        relax(nxt, Key{ends[2], ends[1], k}, cs.cost + wv, trail_add(cs.trail, arc));
      }
    } else {
      for (const auto& [key, cs] : st) {
        auto [e1, e2, k] = std::tuple{key[0], key[1], key[2]};
        if (x == e1 || x == e2) {
          relax(nxt, key, cs.cost, cs.trail);  // member, exempt
        } else if (x < e2) {
          if (k >= 1) relax(nxt, Key{e1, e2, k - 1}, cs.cost, cs.trail);  // hidden member end
        } else {
          if (e1 > lv.s[arc] && e2 <= lv.s[arc]) relax(nxt, key, cs.cost, cs.trail);
        }
      }
    }
    st = std::move(nxt);
  }
  for (const auto& [key, cs] : st) {
    if (key[2] != 0) continue;
    if (!out.feasible || cs.cost < out.value) {
      out.feasible = true;
      out.value = cs.cost;
      out.members = trail_vertices(cs.trail);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dominating induced matching on an interval model. Every vertex is black or
// white; whites are independent (at most one active), black neighbors must be
// matching partners (so at most two active blacks, partnered). State:
// (last white end, black state: none / unpaired arc / paired max end).
// ---------------------------------------------------------------------------

namespace {

void validate_precoloring(const CircularArcModel& m, const Precoloring& pre) {
  if (static_cast<int>(pre.c.size()) != m.n())
    throw Error(ErrorCode::PreconditionViolated, "precoloring size mismatch");
  for (int v = 0; v < m.n(); ++v) {
    if (pre.c[v].kind != PrecolorKind::BLACK_MATCHED_TO) continue;
    int u = pre.c[v].mate;
    if (u < 0 || u >= m.n() || u == v || !arcs_intersect(m, m.arcs[v], m.arcs[u]))
      throw Error(ErrorCode::PreconditionViolated, "matched precolor without edge");
    const Precolor& pu = pre.c[u];
    if (pu.kind == PrecolorKind::WHITE ||
        (pu.kind == PrecolorKind::BLACK_MATCHED_TO && pu.mate != v))
      throw Error(ErrorCode::PreconditionViolated, "inconsistent precoloring");
  }
}

bool may_white(const Precolor& p) {
  return p.kind == PrecolorKind::FREE || p.kind == PrecolorKind::WHITE;
}
bool may_black(const Precolor& p) { return p.kind != PrecolorKind::WHITE; }
bool may_pair(const Precolor& p, int mate) {
  return p.kind == PrecolorKind::FREE || p.kind == PrecolorKind::BLACK_ANY ||
         (p.kind == PrecolorKind::BLACK_MATCHED_TO && p.mate == mate);
}

}  // namespace

Solution solve_dim_interval(const CircularArcModel& m, const WeightMap& w, const Precoloring& pre) {
  Solution out;
  if (m.n() == 0) {
    out.feasible = true;
    out.value = ExtendedWeight(0);
    return out;
  }
  validate_precoloring(m, pre);
  LineView lv(m, interval_cut(m));
  Graph g = intersection_graph(m);
  // key: (white end, black kind 0/1/2, unpaired arc id or paired max end)
  using Key = std::array<int, 3>;
  std::map<Key, Costed> st;
  st[{-1, 0, -1}] = Costed{ExtendedWeight(0), nullptr};
  for (int x = 0; x < lv.g && !st.empty(); ++x) {
    auto [arc, kind] = lv.events[x];
    std::map<Key, Costed> nxt;
    if (kind == 0) {
      for (const auto& [key0, cs] : st) {
        Key key = key0;
        if (key[1] == 2 && key[2] < x) key = Key{key[0], 0, -1};  // pair fully expired
        if (may_white(pre.c[arc]) && key[0] < x)
          relax(nxt, Key{lv.t[arc], key[1], key[2]}, cs.cost, cs.trail);
        if (may_black(pre.c[arc])) {
          if (key[1] == 0 ||
              (key[1] == 1 && lv.t[key[2]] < x))  // cannot happen: unpaired pruned at its end
            relax(nxt, Key{key[0], 1, arc}, cs.cost, cs.trail);
          else if (key[1] == 1) {
            int u = key[2];
            if (may_pair(pre.c[arc], u) && may_pair(pre.c[u], arc)) {
              ExtendedWeight we = w.edge(u, arc);
              relax(nxt, Key{key[0], 2, std::max(lv.t[u], lv.t[arc])}, cs.cost + we,
                    trail_add(cs.trail, u, arc));
            }
          }
        }
      }
    } else {
      for (const auto& [key, cs] : st) {
        if (key[1] == 1 && key[2] == arc) continue;  // black died unmatched
        Key k2 = key;
        if (key[1] == 2 && key[2] == x) k2 = Key{key[0], 0, -1};
        relax(nxt, k2, cs.cost, cs.trail);
      }
    }
    st = std::move(nxt);
  }
  for (const auto& [key, cs] : st) {
    if (!out.feasible || cs.cost < out.value) {
      out.feasible = true;
      out.value = cs.cost;
      out.members = edge_ids_of(g, trail_edges(cs.trail));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Perfect edge domination on an interval model, via black/gray/white vertex
// colorings minimizing the weight of edges with two non-white ends. A white
// needs all neighbors gray (so no active black and at most one active white);
// a gray needs exactly one non-white neighbor. Blacks are free, and every arc
// starting while a black is active is necessarily non-white, so a black pays
// its edges to all later arcs in its window up front; gray edges are paid by
// the later endpoint. State: (white end, top two black ends, up to two active
// grays with their non-white neighbor counts).
// ---------------------------------------------------------------------------

Solution solve_mwped_interval(const CircularArcModel& m, const WeightMap& w) {
  Solution out;
  if (m.n() == 0) {
    out.feasible = true;
    out.value = ExtendedWeight(0);
    return out;
  }
  LineView lv(m, interval_cut(m));
  Graph g = intersection_graph(m);
  int n = m.n();
  // Forward sums: weight of all edges from v to arcs starting inside v's window.
  std::vector<ExtendedWeight> fsum(n, ExtendedWeight(0));
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v))
      if (lv.s[u] > lv.s[v]) fsum[v] += w.edge(v, u);

  // key: (white end, black end 1, black end 2, gray1 id, gray1 cnt, gray2 id, gray2 cnt)
  using Key = std::array<int, 7>;
  std::map<Key, Costed> st;
  st[{-1, -1, -1, -1, 0, -1, 0}] = Costed{ExtendedWeight(0), nullptr};

  // Trail encodes colors: (v, color) with color 0 white, 1 gray, 2 black.
  for (int x = 0; x < lv.g && !st.empty(); ++x) {
    auto [arc, kind] = lv.events[x];
    std::map<Key, Costed> nxt;
    if (kind == 0) {
      for (const auto& [key, cs] : st) {
        int wend = key[0], b1 = key[1], b2 = key[2];
        std::array<std::pair<int, int>, 2> grays{{{key[3], key[4]}, {key[5], key[6]}}};
        int ngray = (grays[0].first >= 0) + (grays[1].first >= 0);
        // white: no active black or white; neighbors will be forced gray
        if (b1 < x && wend < x)
          relax(nxt, Key{lv.t[arc], b1, b2, key[3], key[4], key[5], key[6]}, cs.cost,
                trail_add(cs.trail, arc, 0));
        // non-white branches share the gray bookkeeping
        auto bump_grays = [&](ExtendedWeight cost, std::array<std::pair<int, int>, 2> gs,
                              bool& ok) {
          ok = true;
          for (auto& [gid, gcnt] : gs) {
            if (gid < 0) continue;
            cost += w.edge(gid, arc);
            if (++gcnt > 1) ok = false;
          }
          return std::pair{cost, gs};
        };
        // gray: needs at most one active non-white in total
        if (b2 < x) {
          int c0 = (b1 > x ? 1 : 0) + ngray;
          if (c0 <= 1) {
            bool ok;
            auto [cost, gs] = bump_grays(cs.cost, grays, ok);
            if (ok) {
              int slot = gs[0].first < 0 ? 0 : 1;
              gs[slot] = {arc, c0};
              if (gs[0].first > gs[1].first) std::swap(gs[0], gs[1]);
              relax(nxt,
                    Key{wend, b1, b2, gs[0].first, gs[0].second, gs[1].first, gs[1].second},
                    cost, trail_add(cs.trail, arc, 1));
            }
          }
        }
        // black: forbidden while a white is active
        if (wend < x) {
          bool ok;
          auto [cost, gs] = bump_grays(cs.cost + fsum[arc], grays, ok);
          if (ok) {
            int nb1 = b1, nb2 = b2, e = lv.t[arc];
            if (e > nb1) std::swap(e, nb1);
            if (e > nb2) nb2 = e;
            relax(nxt, Key{wend, nb1, nb2, gs[0].first, gs[0].second, gs[1].first, gs[1].second},
                  cost, trail_add(cs.trail, arc, 2));
          }
        }
      }
    } else {
      for (const auto& [key, cs] : st) {
        Key k2 = key;
        if (key[3] == arc || key[5] == arc) {
          int idx = key[3] == arc ? 3 : 5;
          if (key[idx + 1] != 1) continue;  // gray must end with exactly one non-white neighbor
          k2[idx] = -1;
          k2[idx + 1] = 0;
          if (k2[3] > k2[5]) {
            std::swap(k2[3], k2[5]);
            std::swap(k2[4], k2[6]);
          }
        }
        relax(nxt, k2, cs.cost, cs.trail);
      }
    }
    st = std::move(nxt);
  }
  ExtendedWeight best = ExtendedWeight::infinity();
  TrailPtr best_tr;
  for (const auto& [key, cs] : st) {
    if (cs.cost < best) {
      best = cs.cost;
      best_tr = cs.trail;
    }
  }
  if (best.is_infinite()) return Solution::infeasible_solution();
  std::vector<int> color(n, 0);
  for (const Trail* t = best_tr.get(); t; t = t->prev.get()) color[t->u] = t->v;
  std::vector<int> members;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    if (color[a] != 0 && color[b] != 0) members.push_back(e);
  }
  out.feasible = true;
  out.value = best;
  out.members = members;
  return out;
}

// ---------------------------------------------------------------------------
// DIM with a fixed dominating set of size <= 3: branching over each dominator
// state forces every color (dominators touch all vertices), so each branch is
// a consistency check plus validation.
// ---------------------------------------------------------------------------

Solution solve_dim_fixed_domset(const Graph& g, const WeightMap& w, const std::vector<int>& dom,
                                const CircularArcModel& m) {
  (void)m;
  int n = g.vertex_count();
  if (dom.empty() || dom.size() > 3)
    throw Error(ErrorCode::PreconditionViolated, "dominating set must have size 1..3");
  {
    std::vector<char> hit(n, 0);
    for (int d : dom) {
      if (d < 0 || d >= n) throw Error(ErrorCode::UnknownId, "dominator out of range");
      hit[d] = 1;
      for (int u : g.neighbors(d)) hit[u] = 1;
    }
    for (int v = 0; v < n; ++v)
      if (!hit[v]) throw Error(ErrorCode::PreconditionViolated, "set does not dominate");
  }

  Solution best = Solution::infeasible_solution();
  // state per dominator: -1 = white, otherwise matched neighbor id
  std::vector<std::vector<int>> options;
  for (int d : dom) {
    std::vector<int> opt{-1};
    for (int u : g.neighbors(d)) opt.push_back(u);
    options.push_back(std::move(opt));
  }
  std::vector<int> pick(dom.size(), 0);
  for (;;) {
    // -1 unknown, 0 white, 1 black
    std::vector<int> color(n, -1);
    std::vector<int> mate(n, -1);
    bool ok = true;
    auto set_color = [&](int v, int c) {
      if (color[v] == -1) color[v] = c;
      else if (color[v] != c) ok = false;
    };
    auto set_mate = [&](int v, int u) {
      set_color(v, 1);
      set_color(u, 1);
      if (mate[v] == -1) mate[v] = u;
      else if (mate[v] != u) ok = false;
    };
    for (size_t i = 0; i < dom.size() && ok; ++i) {
      int d = dom[i], choice = options[i][pick[i]];
      if (choice < 0) set_color(d, 0);
      else {
        set_mate(d, choice);
        set_mate(choice, d);
      }
    }
    // propagate to fixpoint: whites force black neighbors; a matched black
    // forces its other neighbors white
    for (bool changed = true; changed && ok;) {
      changed = false;
      for (int v = 0; v < n && ok; ++v) {
        if (color[v] == 0) {
          for (int u : g.neighbors(v)) {
            if (color[u] != 1) {
              set_color(u, 1);
              changed = true;
            }
            if (!ok) break;
          }
        } else if (color[v] == 1 && mate[v] >= 0) {
          for (int u : g.neighbors(v)) {
            if (u == mate[v]) continue;
            if (color[u] != 0) {
              set_color(u, 0);
              changed = true;
            }
            if (!ok) break;
          }
        }
      }
    }
    if (ok) {
      // blacks without a decided mate pair up with their unique black neighbor
      for (int v = 0; v < n && ok; ++v) {
        if (color[v] == -1) ok = false;  // cannot happen: dom dominates
        if (color[v] != 1 || mate[v] >= 0) continue;
        int partner = -1;
        for (int u : g.neighbors(v))
          if (color[u] == 1) partner = partner == -1 ? u : -2;
        if (partner < 0) ok = false;
        else mate[v] = partner;
      }
      // validate the full coloring
      for (int v = 0; v < n && ok; ++v) {
        if (color[v] == 0) {
          for (int u : g.neighbors(v))
            if (color[u] == 0) ok = false;
        } else {
          int blacks = 0;
          for (int u : g.neighbors(v))
            if (color[u] == 1) ++blacks;
          if (blacks != 1 || mate[v] < 0 || color[mate[v]] != 1 || mate[mate[v]] != v) ok = false;
        }
      }
    }
    if (ok) {
      std::vector<int> members;
      ExtendedWeight val(0);
      for (int v = 0; v < n; ++v)
        if (color[v] == 1 && v < mate[v]) {
          members.push_back(g.edge_id(v, mate[v]));
          val += w.edge(v, mate[v]);
        }
      std::sort(members.begin(), members.end());
      if (!best.feasible || val < best.value) {
        best.feasible = true;
        best.value = val;
        best.members = members;
      }
    }
    // next branch combination
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == static_cast<int>(options[i].size())) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Transfer DP around a cycle with pendant leaves. Per-problem state machines
// over the cycle vertices; leaves are resolved inside each block. The first
// block's state is enumerated to close the cycle.
// ---------------------------------------------------------------------------

namespace {

struct BlockChoice {
  int state;             // problem-specific label
  ExtendedWeight cost;   // block-internal cost
  std::vector<int> vmembers;
  std::vector<std::pair<int, int>> emembers;
};

}  // namespace

Solution solve_cycle_dp(CycleProblem p, const CycleStructure& cs, const Graph& g,
                        const WeightMap& w) {
  int k = static_cast<int>(cs.cycle.size());
  if (k < 3) throw Error(ErrorCode::PreconditionViolated, "cycle shorter than 3");
  bool edge_problem = p == CycleProblem::DIM || p == CycleProblem::PED;

  // Vertex problem states: 0 member, 1 nonmember filled by prev, 2 filled by
  // leaf, 3 filled by next (EVD/PVD).
  // DIM states: 0 W, 1 B_prev, 2 B_next, 3 B_leaf.
  // PED states: 0 W, 1 B, 2 R_prev, 3 R_next, 4 R_leaf.
  auto block_choices = [&](int i) {
    std::vector<BlockChoice> out;
    int v = cs.cycle[i];
    const std::vector<int>& leaves = cs.leaves[i];
    auto min_leaf = [&]() {
      int bestl = -1;
      ExtendedWeight bw = ExtendedWeight::infinity();
      for (int l : leaves) {
        ExtendedWeight we = w.edge(v, l);
        if (bestl < 0 || we < bw) {
          bestl = l;
          bw = we;
        }
      }
      return std::pair{bestl, bw};
    };
    if (p == CycleProblem::EVD || p == CycleProblem::PVD) {
      BlockChoice member{0, w.vertex(v), {v}, {}};
      if (p == CycleProblem::PVD) {
        for (int l : leaves) {
          ExtendedWeight wl = w.vertex(l);
          if (wl.is_negative()) {
            member.cost += wl;
            member.vmembers.push_back(l);
          }
        }
      }
      out.push_back(member);
      // nonmember: all leaves become members; v filled exactly once
      ExtendedWeight leafc(0);
      std::vector<int> lm = leaves;
      for (int l : leaves) leafc += w.vertex(l);
      int nl = static_cast<int>(leaves.size());
      if (nl == 0) {
        out.push_back({1, leafc, lm, {}});
        out.push_back({3, leafc, lm, {}});
      } else if (nl == 1) {
        out.push_back({2, leafc, lm, {}});
      }  // >= 2 leaves: nonmember impossible (filled twice)
    } else if (p == CycleProblem::DIM) {
      if (leaves.empty()) out.push_back({0, ExtendedWeight(0), {}, {}});
      ExtendedWeight zero(0);
      out.push_back({1, zero, {}, {}});
      out.push_back({2, zero, {}, {}});
      if (!leaves.empty()) {
        auto [l, lw] = min_leaf();
        out.push_back({3, lw, {}, {{v, l}}});
      }
    } else {  // PED
      if (leaves.empty()) out.push_back({0, ExtendedWeight(0), {}, {}});
      {
        BlockChoice b{1, ExtendedWeight(0), {}, {}};
        for (int l : leaves) {
          b.cost += w.edge(v, l);
          b.emembers.emplace_back(v, l);
        }
        out.push_back(b);
      }
      out.push_back({2, ExtendedWeight(0), {}, {}});
      out.push_back({3, ExtendedWeight(0), {}, {}});
      if (!leaves.empty()) {
        auto [l, lw] = min_leaf();
        out.push_back({4, lw, {}, {{v, l}}});
      }
    }
    std::vector<BlockChoice> fin;
    for (auto& b : out)
      if (!b.cost.is_infinite()) fin.push_back(std::move(b));
    return fin;
  };

  // transition validity and cost from state a at cycle[i] to state b at cycle[i+1]
  auto transition = [&](int i, int a, int b,
                        ExtendedWeight& cost) -> std::optional<std::pair<int, int>> {
    int u = cs.cycle[i], v = cs.cycle[(i + 1) % k];
    cost = ExtendedWeight(0);
    if (p == CycleProblem::EVD || p == CycleProblem::PVD) {
      // member(0) next must not be member and not filled-by-prev conflicts:
      bool a_member = a == 0, b_member = b == 0;
      if (a == 3 && !b_member) return std::nullopt;      // u demanded next member
      if (a_member && b == 1) {
        // v nonmember filled by prev = u: ok
      } else if (b == 1 && !a_member) return std::nullopt;
      if (a_member && b_member) {
        if (p == CycleProblem::EVD) return std::nullopt;  // u would be dominated twice
        // PVD: members exempt, fine
      }
      if (a_member && !b_member && b != 1) {
        // v filled elsewhere but member neighbor u also fills it
        return std::nullopt;
      }
      if (a == 0 && p == CycleProblem::EVD) {
        // u member: its own count already exactly 1; next member forbidden (handled)
      }
      if (a == 1 || a == 2) {
        if (b_member) {
          // u nonmember already filled; member next would double-fill
          return std::nullopt;
        }
      }
      return std::pair{0, 0};
    }
    if (p == CycleProblem::DIM) {
      switch (a) {
        case 0:  // W -> black not partnered with u
          if (b == 2 || b == 3) return std::pair{0, 0};
          return std::nullopt;
        case 1:  // B_prev -> W
        case 3:  // B_leaf -> W
          if (b == 0) return std::pair{0, 0};
          return std::nullopt;
        case 2:  // B_next -> B_prev, matching edge (u, v)
          if (b == 1) {
            cost = w.edge(u, v);
            return std::pair{u, v};
          }
          return std::nullopt;
      }
      return std::nullopt;
    }
    // PED: nonwhite states are 1 (B), 2 (R_prev), 3 (R_next), 4 (R_leaf)
    auto allowed = [&](int s, int t2) {
      switch (s) {
        case 0: return t2 == 3 || t2 == 4;  // white -> gray not counting u
        case 1: return t2 == 1 || t2 == 2;  // black -> nonwhite counting u
        case 2: return t2 == 0;
        case 4: return t2 == 0;
        case 3: return t2 == 1 || t2 == 2;  // R_next -> nonwhite counting u
      }
      return false;
    };
    if (!allowed(a, b)) return std::nullopt;
    bool a_nw = a != 0, b_nw = b != 0;
    if (a_nw && b_nw) {
      cost = w.edge(u, v);
      return std::pair{u, v};
    }
    return std::pair{0, 0};
  };

  Solution best = Solution::infeasible_solution();
  auto choices0 = block_choices(0);
  for (const BlockChoice& c0 : choices0) {
    // dp over blocks 1..k-1 given the first block's choice
    struct St {
      ExtendedWeight cost;
      TrailPtr trail;
      bool valid = false;
    };
    auto pack = [&](const BlockChoice& b, TrailPtr prev) {
      TrailPtr t = std::move(prev);
      for (int v : b.vmembers) t = trail_add(t, v);
      for (auto [x, y] : b.emembers) t = trail_add(t, x, y);
      return t;
    };
    std::map<int, St> cur;
    cur[c0.state] = St{c0.cost, pack(c0, nullptr), true};
    for (int i = 1; i < k; ++i) {
      std::map<int, St> nxt;
      for (const BlockChoice& cb : block_choices(i)) {
        for (const auto& [a, stv] : cur) {
          ExtendedWeight tc;
          auto tr = transition(i - 1, a, cb.state, tc);
          if (!tr) continue;
          ExtendedWeight total = stv.cost + tc + cb.cost;
          TrailPtr t = stv.trail;
          if (tr->first != tr->second) t = trail_add(t, tr->first, tr->second);
          t = pack(cb, t);
          auto it = nxt.find(cb.state);
          if (it == nxt.end() || !it->second.valid || total < it->second.cost)
            nxt[cb.state] = St{total, t, true};
        }
      }
      cur = std::move(nxt);
      if (cur.empty()) break;
    }
    for (const auto& [a, stv] : cur) {
      ExtendedWeight tc;
      auto tr = transition(k - 1, a, c0.state, tc);
      if (!tr) continue;
      ExtendedWeight total = stv.cost + tc;
      TrailPtr t = stv.trail;
      if (tr->first != tr->second) t = trail_add(t, tr->first, tr->second);
      if (!best.feasible || total < best.value) {
        best.feasible = true;
        best.value = total;
        if (edge_problem) best.members = edge_ids_of(g, trail_edges(t));
        else best.members = trail_vertices(t);
      }
    }
  }
  return best;
}

}  // namespace cadom
