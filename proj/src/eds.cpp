#include <algorithm>
#include <limits>

#include "cadom/solvers.hpp"

namespace cadom {

// Efficient vertex domination: members are pairwise disjoint arcs whose
// closed neighborhoods partition the vertex set. After cutting at a minimum
// coverage segment, at most one member crosses the cut (crossing arcs
// pairwise intersect). The solver enumerates that member (case A) or assumes
// none (case B) and runs a chain DP over candidate non-crossing members.
//
// A gap between consecutive members (end a, next start b) is valid iff no arc
// lies strictly inside it (it would touch no member) and no arc spans it (it
// would touch two members): with L1(a) = min end over arcs starting past a
// and maxT(a) = max end over arcs starting before a, that is
// maxT(a) < b < L1(a). Spanning the single member's own gap is allowed.

namespace {

constexpr int NEG = -1000000;
constexpr int POS = 1000000;

struct Pred {
  int arc = -2;  // previous chain member, -1 for chain start
};

}  // namespace

Solution solve_mwevd(const CircularArcModel& m, const WeightMap& w) {
  Solution out;
  out.trace.push_back("mwevd/eds-dp");
  if (m.n() == 0) {
    out.feasible = true;
    out.value = ExtendedWeight(0);
    return out;
  }
  int n = m.n();
  for (int v = 0; v < n; ++v)
    if (w.vertex(v).is_infinite())
      throw Error(ErrorCode::PreconditionViolated, "infinite vertex weight");

  CoverageExtremes ce = coverage_extremes(m);
  int g = m.grid();
  Pos origin = (ce.min_witness + 1) % g;
  std::vector<int> S(n), T(n);
  std::vector<int> W, N;
  for (const Arc& a : m.arcs) {
    S[a.id] = cw_dist(m, origin, a.s);
    T[a.id] = cw_dist(m, origin, a.t);
    (S[a.id] > T[a.id] ? W : N).push_back(a.id);
  }

  // maxT[x]: max end over non-crossing arcs starting before x; L1[x]: min end
  // over non-crossing arcs starting after x. Indexed by coordinate 0..g.
  std::vector<int> maxT(g + 1, NEG), L1(g + 2, POS);
  {
    std::vector<int> at_start(g, -1);
    for (int v : N) at_start[S[v]] = v;
    for (int x = 1; x <= g; ++x) {
      maxT[x] = maxT[x - 1];
      if (at_start[x - 1] >= 0) maxT[x] = std::max(maxT[x], T[at_start[x - 1]]);
    }
    for (int x = g; x >= 0; --x) {
      L1[x] = L1[x + 1];
      if (x < g && at_start[x] >= 0) L1[x] = std::min(L1[x], T[at_start[x]]);
    }
  }
  auto gap_ok = [&](int a, int b) { return maxT[a] < b && b < L1[a]; };

  int TmaxW = NEG, SminW = POS;
  for (int u : W) {
    TmaxW = std::max(TmaxW, T[u]);
    SminW = std::min(SminW, S[u]);
  }
  // Candidate middle members: disjoint from every crossing arc.
  std::vector<int> gamma;
  for (int v : N)
    if (S[v] > TmaxW && T[v] < SminW) gamma.push_back(v);
  std::sort(gamma.begin(), gamma.end(), [&](int a, int b) { return S[a] < S[b]; });

  ExtendedWeight best = ExtendedWeight::infinity();
  std::vector<int> best_members;
  auto offer = [&](ExtendedWeight val, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    if (!out.feasible || val < best) {
      out.feasible = true;
      best = std::move(val);
      best_members = std::move(members);
    }
  };

  // Chain DP over gamma given a start-gap predicate; returns per-arc best
  // costs with predecessors for reconstruction.
  auto chain = [&](auto start_ok, std::vector<ExtendedWeight>& f, std::vector<Pred>& pred) {
    size_t k = gamma.size();
    f.assign(k, ExtendedWeight::infinity());
    pred.assign(k, Pred{});
    for (size_t i = 0; i < k; ++i) {
      int v = gamma[i];
      ExtendedWeight bestp = ExtendedWeight::infinity();
      int bp = -2;
      if (start_ok(v)) {
        bestp = ExtendedWeight(0);
        bp = -1;
      }
      for (size_t j = 0; j < i; ++j) {
        if (f[j].is_infinite() || !gap_ok(T[gamma[j]], S[v])) continue;
        if (f[j] < bestp) {
          bestp = f[j];
          bp = gamma[j];
        }
      }
      if (!bestp.is_infinite()) {
        f[i] = bestp + w.vertex(v);
        pred[i].arc = bp;
      }
    }
  };
  auto rebuild = [&](const std::vector<ExtendedWeight>& f, const std::vector<Pred>& pred,
                     int last) {
    std::vector<int> members;
    int cur = last;
    while (cur >= 0) {
      members.push_back(cur);
      size_t i = std::lower_bound(gamma.begin(), gamma.end(), cur,
                                  [&](int a, int b) { return S[a] < S[b]; }) -
                 gamma.begin();
      (void)f;
      cur = pred[i].arc;
    }
    return members;
  };

  // Case A: crossing member u. All other crossing arcs touch exactly u; chain
  // members live strictly between u's two pieces.
  for (int u : W) {
    ExtendedWeight wu = w.vertex(u);
    if (L1[T[u]] > S[u]) offer(wu, {u});  // no chain member; spanning u's gap is fine
    if (gamma.empty()) continue;
    std::vector<ExtendedWeight> f;
    std::vector<Pred> pred;
    chain([&](int v) { return S[v] > T[u] && gap_ok(T[u], S[v]); }, f, pred);
    for (size_t i = 0; i < gamma.size(); ++i) {
      int v = gamma[i];
      if (f[i].is_infinite() || !(maxT[T[v]] < S[u] && L1[T[v]] > S[u])) continue;
      ExtendedWeight val = wu + f[i];
      if (out.feasible && val >= best) continue;
      auto members = rebuild(f, pred, v);
      members.push_back(u);
      offer(val, std::move(members));
    }
  }

  // Case B: no crossing member. The first member starts before every other
  // arc's end; the last ends after every other arc's start. Every crossing
  // arc must touch exactly one of the two end members.
  if (!N.empty()) {
    int minT = POS, maxS = NEG;
    for (int v : N) {
      minT = std::min(minT, T[v]);
      maxS = std::max(maxS, S[v]);
    }
    // LB/UB over crossing arcs as functions of the first member's start.
    auto lb_ub = [&](int x) {
      int lb = NEG, ub = POS;
      for (int u : W) {
        if (T[u] < x) lb = std::max(lb, S[u]);
        else ub = std::min(ub, S[u]);
      }
      return std::pair{lb, ub};
    };
    for (int b1 : N) {
      if (S[b1] >= minT) continue;
      auto [lb, ub] = lb_ub(S[b1]);
      ExtendedWeight w1 = w.vertex(b1);
      // single member
      if (T[b1] > maxS && T[b1] > lb) offer(w1, {b1});
      // two or more members
      if (!W.empty() && T[b1] >= SminW) continue;
      std::vector<ExtendedWeight> f;
      std::vector<Pred> pred;
      bool have_chain = !gamma.empty();
      if (have_chain) chain([&](int v) { return gap_ok(T[b1], S[v]); }, f, pred);
      for (int bm : N) {
        if (bm == b1 || S[bm] <= TmaxW || T[bm] <= maxS || T[bm] <= lb || T[bm] >= ub) continue;
        ExtendedWeight wm = w.vertex(bm);
        if (gap_ok(T[b1], S[bm])) offer(w1 + wm, {b1, bm});
        if (!have_chain) continue;
        for (size_t i = 0; i < gamma.size(); ++i) {
          int v = gamma[i];
          if (v == bm || f[i].is_infinite() || !gap_ok(T[v], S[bm])) continue;
          ExtendedWeight val = w1 + f[i] + wm;
          if (out.feasible && val >= best) continue;
          auto members = rebuild(f, pred, v);
          members.push_back(b1);
          members.push_back(bm);
          offer(val, std::move(members));
        }
      }
    }
  }

  if (!out.feasible) return out;
  out.value = best;
  out.members = std::move(best_members);
  return out;
}

}  // namespace cadom
