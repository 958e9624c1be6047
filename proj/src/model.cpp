#include "cadom/model.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <numeric>
#include <tuple>

namespace cadom {

namespace {

// Ranks raw endpoint values on the circle. Ties: lower arc id first, start
// before end.
CircularArcModel rank_raw(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyModel, "model has no arcs");
  int n = static_cast<int>(raw.size());
  struct Key {
    std::int64_t value;
    int arc;
    int is_end;
  };
  std::vector<Key> keys;
  keys.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    if (raw[i].first == raw[i].second)
      throw Error(ErrorCode::DegenerateArc, "arc with coincident endpoints");
    keys.push_back({raw[i].first, i, 0});
    keys.push_back({raw[i].second, i, 1});
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::tie(a.value, a.arc, a.is_end) < std::tie(b.value, b.arc, b.is_end);
  });
  CircularArcModel m;
  m.arcs.resize(n);
  for (int i = 0; i < n; ++i) m.arcs[i].id = i;
  for (int r = 0; r < 2 * n; ++r) {
    const Key& k = keys[r];
    if (k.is_end)
      m.arcs[k.arc].t = r;
    else
      m.arcs[k.arc].s = r;
  }
  return m;
}

// Sliding-window structure: for every grid position x, the best clockwise
// reach max over arcs b of arc_len(b) - cw(s_b, x), with the arc achieving it
// (ties: lowest id). Arcs strictly containing x are exactly those with
// positive reach beyond their start offset; reach > d means some arc covers
// the closed range [x, x+d].
struct ReachTable {
  std::vector<int> reach;  // may be <= 0 when nothing useful covers x
  std::vector<int> arg;

  explicit ReachTable(const CircularArcModel& m) {
    int g = m.grid();
    struct Pl {
      int sp, key, id;  // key = sp + len
    };
    std::vector<Pl> pl;
    pl.reserve(2 * m.n());
    for (const Arc& a : m.arcs) {
      int len = arc_len(m, a);
      pl.push_back({a.s, a.s + len, a.id});
      pl.push_back({a.s - g, a.s - g + len, a.id});
    }
    std::sort(pl.begin(), pl.end(), [](const Pl& a, const Pl& b) { return a.sp < b.sp; });
    reach.assign(g, 0);
    arg.assign(g, -1);
    std::deque<Pl> dq;
    size_t next = 0;
    for (int x = 0; x < g; ++x) {
      while (next < pl.size() && pl[next].sp <= x) {
        const Pl& p = pl[next++];
        while (!dq.empty() &&
               (dq.back().key < p.key || (dq.back().key == p.key && dq.back().id >= p.id)))
          dq.pop_back();
        dq.push_back(p);
      }
      while (!dq.empty() && dq.front().sp <= x - g) dq.pop_front();
      if (!dq.empty()) {
        reach[x] = dq.front().key - x;
        arg[x] = dq.front().id;
      } else {
        reach[x] = -1;
      }
    }
  }
};

}  // namespace

CircularArcModel normalize_model(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw) {
  return rank_raw(raw);
}

std::vector<Segment> segments(const CircularArcModel& m) {
  if (m.n() == 0) throw Error(ErrorCode::EmptyModel, "segments of empty model");
  int g = m.grid();
  // endpoint type per position: true if some arc starts there
  std::vector<char> is_start(g, 0);
  for (const Arc& a : m.arcs) is_start[a.s] = 1;
  std::vector<Segment> out;
  out.reserve(g);
  for (int i = 0; i < g; ++i) {
    int r = (i + 1) % g;
    SegmentKind k;
    if (is_start[i])
      k = is_start[r] ? SegmentKind::SS : SegmentKind::ST;
    else
      k = is_start[r] ? SegmentKind::TS : SegmentKind::TT;
    out.push_back({i, i, r, k});
  }
  return out;
}

std::vector<int> arcs_at_segment(const CircularArcModel& m, int seg) {
  if (seg < 0 || seg >= m.grid()) throw Error(ErrorCode::UnknownId, "segment index out of range");
  std::vector<int> out;
  for (const Arc& a : m.arcs)
    if (cw_dist(m, a.s, seg) < arc_len(m, a)) out.push_back(a.id);
  return out;
}

std::vector<int> arcs_at_point(const CircularArcModel& m, Pos p) {
  if (p < 0 || p >= m.grid()) throw Error(ErrorCode::UnknownId, "position out of range");
  std::vector<int> out;
  for (const Arc& a : m.arcs)
    if (arc_contains(m, a, p)) out.push_back(a.id);
  return out;
}

std::vector<int> coverage_profile(const CircularArcModel& m) {
  int g = m.grid();
  std::vector<int> delta(g + 1, 0);
  for (const Arc& a : m.arcs) {
    int len = arc_len(m, a);
    // covers segments a.s .. a.s+len-1 (mod g)
    if (a.s + len <= g) {
      delta[a.s] += 1;
      delta[a.s + len] -= 1;
    } else {
      delta[a.s] += 1;
      delta[g] -= 1;
      delta[0] += 1;
      delta[a.s + len - g] -= 1;
    }
  }
  std::vector<int> cov(g, 0);
  int run = 0;
  for (int i = 0; i < g; ++i) {
    run += delta[i];
    cov[i] = run;
  }
  return cov;
}

CoverageExtremes coverage_extremes(const CircularArcModel& m) {
  if (m.n() == 0) throw Error(ErrorCode::EmptyModel, "coverage of empty model");
  std::vector<int> cov = coverage_profile(m);
  CoverageExtremes e;
  e.min_cov = e.max_cov = cov[0];
  e.min_witness = e.max_witness = 0;
  for (int i = 1; i < static_cast<int>(cov.size()); ++i) {
    if (cov[i] < e.min_cov) {
      e.min_cov = cov[i];
      e.min_witness = i;
    }
    if (cov[i] > e.max_cov) {
      e.max_cov = cov[i];
      e.max_witness = i;
    }
  }
  return e;
}

std::optional<int> find_universal_arc(const CircularArcModel& m) {
  if (m.n() == 0) throw Error(ErrorCode::EmptyModel, "universal arc of empty model");
  int g = m.grid();
  // b is disjoint from a iff b fits inside a's closed complement gap.
  // Doubled line: items (start, end) at s_b and s_b + g; a query asks for an
  // item with start in [t_a, t_a + gaplen] and end <= t_a + gaplen, which can
  // reach up to 2g so the second copy must lie to the right.
  struct Item {
    int sp, ep;
  };
  std::vector<Item> items;
  items.reserve(2 * m.n());
  for (const Arc& b : m.arcs) {
    int len = arc_len(m, b);
    items.push_back({b.s, b.s + len});
    items.push_back({b.s + g, b.s + g + len});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.sp < b.sp; });
  int sz = static_cast<int>(items.size());
  // sparse table of min end over start-ranges
  int lg = 1;
  while ((1 << lg) < std::max(sz, 1)) ++lg;
  std::vector<std::vector<int>> tab(lg + 1, std::vector<int>(sz, 1 << 30));
  for (int i = 0; i < sz; ++i) tab[0][i] = items[i].ep;
  for (int j = 1; j <= lg; ++j)
    for (int i = 0; i + (1 << j) <= sz; ++i)
      tab[j][i] = std::min(tab[j - 1][i], tab[j - 1][i + (1 << (j - 1))]);
  auto range_min = [&](int lo, int hi) {  // indices [lo, hi)
    if (lo >= hi) return 1 << 30;
    int j = 31 - __builtin_clz(hi - lo);
    return std::min(tab[j][lo], tab[j][hi - (1 << j)]);
  };
  auto lower = [&](int v) {
    return static_cast<int>(std::lower_bound(items.begin(), items.end(), v,
                                             [](const Item& it, int x) { return it.sp < x; }) -
                            items.begin());
  };
  for (const Arc& a : m.arcs) {
    int gap = g - arc_len(m, a);
    int lo = a.t, hi = a.t + gap;  // closed complement [t_a, s_a]
    int i0 = lower(lo), i1 = lower(hi + 1);
    if (range_min(i0, i1) > hi) return a.id;  // nothing disjoint from a
  }
  return std::nullopt;
}

std::int64_t count_intersecting_pairs(const CircularArcModel& m) {
  int n = m.n();
  if (n == 0) return 0;
  int g = m.grid();
  // Count disjoint ordered pairs (a, b): b inside a's closed complement gap.
  struct Item {
    int sp, ep;
  };
  std::vector<Item> items;
  items.reserve(2 * n);
  for (const Arc& b : m.arcs) {
    int len = arc_len(m, b);
    items.push_back({b.s, b.s + len});
    items.push_back({b.s + g, b.s + g + len});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.ep < b.ep; });
  struct Query {
    int lo, hi;  // count items with sp in [lo, hi] and ep <= hi
  };
  std::vector<Query> qs;
  qs.reserve(n);
  for (const Arc& a : m.arcs) {
    int gap = g - arc_len(m, a);
    qs.push_back({a.t, a.t + gap});
  }
  std::sort(qs.begin(), qs.end(), [](const Query& a, const Query& b) { return a.hi < b.hi; });
  // BIT over shifted start coordinate [-g, 2g)
  int span = 3 * g + 2;
  std::vector<int> bit(span + 1, 0);
  auto upd = [&](int i) {
    for (i += 1; i <= span; i += i & -i) bit[i] += 1;
  };
  auto pref = [&](int i) {
    int s = 0;
    for (i += 1; i > 0; i -= i & -i) s += bit[i];
    return s;
  };
  auto coord = [&](int x) { return x + g; };
  std::int64_t disjoint = 0;
  size_t next = 0;
  for (const Query& q : qs) {
    while (next < items.size() && items[next].ep <= q.hi) {
      upd(coord(items[next].sp));
      ++next;
    }
    disjoint += pref(coord(q.hi)) - pref(coord(q.lo) - 1);
  }
  // each disjoint unordered pair counted twice
  return static_cast<std::int64_t>(n) * (n - 1) / 2 - disjoint / 2;
}

namespace {

// Covering test: some arc contains point p and the closed range [p, p+d].
bool covered_range(const CircularArcModel& m, const ReachTable& rt, Pos p, int d) {
  return rt.reach[p] > d;
}

std::optional<int> two_cover_partner(const CircularArcModel& m, int a, int from_id) {
  const Arc& A = m.arcs[a];
  int gap = m.grid() - arc_len(m, A);
  for (int b = from_id; b < m.n(); ++b) {
    if (b == a) continue;
    const Arc& B = m.arcs[b];
    int off = cw_dist(m, B.s, A.t);
    if (off > 0 && arc_len(m, B) - off > gap) return b;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_small_cover(const CircularArcModel& m, int k) {
  if (k != 2 && k != 3) throw Error(ErrorCode::InvalidSpec, "cover size must be 2 or 3");
  if (m.n() == 0) throw Error(ErrorCode::EmptyModel, "cover of empty model");
  int g = m.grid();
  ReachTable rt(m);
  // Pairs first. The first arc found in any pair cover is the least arc in
  // any pair cover, so the scan order yields the lexicographically least set.
  for (const Arc& a : m.arcs) {
    int gap = g - arc_len(m, a);
    if (covered_range(m, rt, a.t, gap)) {
      auto b = two_cover_partner(m, a.id, 0);
      assert(b);
      int lo = std::min(a.id, *b), hi = std::max(a.id, *b);
      return std::vector<int>{lo, hi};
    }
  }
  if (k == 2) return std::nullopt;
  // Triples, knowing no pair covers.
  int first = -1;
  for (const Arc& a : m.arcs) {
    int gap = g - arc_len(m, a);
    int r1 = rt.reach[a.t];
    if (r1 <= 0) continue;
    Pos p2 = (a.t + r1) % g;  // end of the furthest arc through t_a
    int r2 = rt.reach[p2];
    if (r2 > 0 && r1 + r2 > gap) {
      first = a.id;
      break;
    }
  }
  if (first < 0) return std::nullopt;
  const Arc& A = m.arcs[first];
  int gap = g - arc_len(m, A);
  auto piece_exists = [&](Pos p, int d) { return covered_range(m, rt, p, d); };
  for (int j = first + 1; j < m.n(); ++j) {
    const Arc& J = m.arcs[j];
    // J's coverage of the closed gap [t_A, s_A], in distance-from-t_A marks.
    int uncovered_lo = -1, uncovered_hi = -1;  // one piece [lo, hi]
    int piece2_lo = -1;                        // two pieces: [0, p1hi] and [p2lo, gap]
    int p1hi = -1;
    bool whole = false;
    if (arc_contains(m, J, A.t)) {
      int dt = cw_dist(m, A.t, J.t);
      if (dt > gap) continue;  // would be a pair cover; cannot happen
      uncovered_lo = dt;
      uncovered_hi = gap;
    } else {
      int ds = cw_dist(m, A.t, J.s);
      int de = ds + arc_len(m, J);
      if (ds >= gap) {
        whole = true;
      } else if (de > gap) {
        uncovered_lo = 0;
        uncovered_hi = ds;
      } else {
        p1hi = ds;
        piece2_lo = de;
      }
    }
    if (whole) continue;  // third arc would have to cover the gap alone
    bool ok;
    Pos anchor;
    int need;
    if (uncovered_lo >= 0) {
      anchor = (A.t + uncovered_lo) % g;
      need = uncovered_hi - uncovered_lo;
      ok = piece_exists(anchor, need);
    } else {
      anchor = (A.t + piece2_lo) % g;
      need = g - piece2_lo + p1hi;  // long way round through A's span
      ok = piece_exists(anchor, need);
    }
    if (!ok) continue;
    for (int c = 0; c < m.n(); ++c) {
      if (c == first || c == j) continue;
      const Arc& C = m.arcs[c];
      int off = cw_dist(m, C.s, anchor);
      if (off > 0 && off + need < arc_len(m, C)) {
        std::vector<int> w{first, j, c};
        std::sort(w.begin(), w.end());
        return w;
      }
    }
  }
  return std::nullopt;
}

bool is_hca_by_cover(const CircularArcModel& m) { return !find_small_cover(m, 3).has_value(); }

CycleStructure extract_cycle_structure(const CircularArcModel& m) {
  CoverageExtremes e = coverage_extremes(m);
  if (e.min_cov != 1 || e.max_cov != 2)
    throw Error(ErrorCode::PreconditionViolated, "coverage extremes not (1, 2)");
  if (find_small_cover(m, 3))
    throw Error(ErrorCode::PreconditionViolated, "small circle cover present");
  ReachTable rt(m);
  int n = m.n();
  std::vector<int> parent(n, -1);
  for (const Arc& b : m.arcs) {
    if (rt.reach[b.s] > arc_len(m, b)) parent[b.id] = rt.arg[b.s];
  }
  CycleStructure cs;
  for (int i = 0; i < n; ++i)
    if (parent[i] < 0) cs.cycle.push_back(i);
  std::sort(cs.cycle.begin(), cs.cycle.end(),
            [&](int a, int b) { return m.arcs[a].s < m.arcs[b].s; });
  int k = static_cast<int>(cs.cycle.size());
  if (k < 4) throw Error(ErrorCode::PreconditionViolated, "cycle shorter than 4");
  for (int i = 0; i < k; ++i) {
    const Arc& a = m.arcs[cs.cycle[i]];
    const Arc& b = m.arcs[cs.cycle[(i + 1) % k]];
    if (!arc_contains(m, b, a.t))
      throw Error(ErrorCode::PreconditionViolated, "cycle arcs not interleaved");
  }
  // rotate so the least cycle id comes first
  int best = static_cast<int>(std::min_element(cs.cycle.begin(), cs.cycle.end()) -
                              cs.cycle.begin());
  std::rotate(cs.cycle.begin(), cs.cycle.begin() + best, cs.cycle.end());
  cs.leaves.assign(k, {});
  std::vector<int> pos_of(n, -1);
  for (int i = 0; i < k; ++i) pos_of[cs.cycle[i]] = i;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      if (pos_of[parent[i]] < 0)
        throw Error(ErrorCode::PreconditionViolated, "pendant nested in pendant");
      cs.leaves[pos_of[parent[i]]].push_back(i);
    }
  }
  return cs;
}

namespace {

struct RawBuild {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  SurgeryMap map;
};

std::pair<CircularArcModel, SurgeryMap> finish(const CircularArcModel& /*m*/, RawBuild&& b) {
  CircularArcModel out = rank_raw(b.raw);
  return {out, std::move(b.map)};
}

}  // namespace

std::pair<CircularArcModel, SurgeryMap> cut_at(const CircularArcModel& m, int seg) {
  if (seg < 0 || seg >= m.grid()) throw Error(ErrorCode::UnknownId, "segment index out of range");
  std::vector<int> through = arcs_at_segment(m, seg);
  std::int64_t S = 8LL * (m.n() + 2);
  std::int64_t cutc = seg * S + S / 2;
  RawBuild b;
  b.map.image.assign(m.n(), {});
  int rank = 0;
  for (const Arc& a : m.arcs) {
    bool split = std::binary_search(through.begin(), through.end(), a.id);
    if (!split) {
      int nid = static_cast<int>(b.raw.size());
      b.raw.emplace_back(a.s * S, a.t * S);
      b.map.image[a.id] = {nid};
      b.map.origin.push_back(a.id);
      b.map.tag.push_back(SurgeryTag::COPY);
    } else {
      int left = static_cast<int>(b.raw.size());
      b.raw.emplace_back(a.s * S, cutc - 2 * (rank + 1));
      b.raw.emplace_back(cutc + 2 * (rank + 1), a.t * S);
      b.map.image[a.id] = {left, left + 1};
      b.map.origin.push_back(a.id);
      b.map.origin.push_back(a.id);
      b.map.tag.push_back(SurgeryTag::LEFT_PART);
      b.map.tag.push_back(SurgeryTag::RIGHT_PART);
      ++rank;
    }
  }
  return finish(m, std::move(b));
}

std::pair<CircularArcModel, SurgeryMap> insert_arcs(const CircularArcModel& m,
                                                    const std::vector<InsertArcSpec>& specs) {
  std::int64_t S = 16;
  RawBuild b;
  b.map.image.assign(m.n(), {});
  for (const Arc& a : m.arcs) {
    int nid = static_cast<int>(b.raw.size());
    b.raw.emplace_back(a.s * S, a.t * S);
    b.map.image[a.id] = {nid};
    b.map.origin.push_back(a.id);
    b.map.tag.push_back(SurgeryTag::COPY);
  }
  std::vector<std::pair<Pos, int>> used;
  auto place = [&](const InsertEndpoint& e) {
    if (e.base < 0 || e.base >= m.grid() || e.frac <= 0 || e.frac >= 16)
      throw Error(ErrorCode::PlacementConflict, "endpoint placement out of range");
    if (std::find(used.begin(), used.end(), std::pair{e.base, e.frac}) != used.end())
      throw Error(ErrorCode::PlacementConflict, "duplicate endpoint placement");
    used.emplace_back(e.base, e.frac);
    return e.base * S + e.frac;
  };
  for (const InsertArcSpec& sp : specs) {
    int nid = static_cast<int>(b.raw.size());
    b.raw.emplace_back(place(sp.start), place(sp.end));
    b.map.origin.push_back(-1);
    b.map.tag.push_back(sp.tag);
    b.map.added.push_back(nid);
  }
  return finish(m, std::move(b));
}

std::pair<CircularArcModel, SurgeryMap> split_arc_at(const CircularArcModel& m, int arc, int seg,
                                                     const std::vector<InsertArcSpec>& extras) {
  if (arc < 0 || arc >= m.n()) throw Error(ErrorCode::UnknownId, "arc id out of range");
  const Arc& a = m.arcs[arc];
  if (cw_dist(m, a.s, seg) >= arc_len(m, a))
    throw Error(ErrorCode::PreconditionViolated, "arc does not cover the split segment");
  std::int64_t S = 16;
  std::int64_t cutc = seg * S + 8;
  RawBuild b;
  b.map.image.assign(m.n(), {});
  for (const Arc& x : m.arcs) {
    if (x.id != arc) {
      int nid = static_cast<int>(b.raw.size());
      b.raw.emplace_back(x.s * S, x.t * S);
      b.map.image[x.id] = {nid};
      b.map.origin.push_back(x.id);
      b.map.tag.push_back(SurgeryTag::COPY);
    } else {
      int left = static_cast<int>(b.raw.size());
      b.raw.emplace_back(x.s * S, cutc - 1);
      b.raw.emplace_back(cutc + 1, x.t * S);
      b.map.image[x.id] = {left, left + 1};
      b.map.origin.push_back(x.id);
      b.map.origin.push_back(x.id);
      b.map.tag.push_back(SurgeryTag::LEFT_PART);
      b.map.tag.push_back(SurgeryTag::RIGHT_PART);
    }
  }
  std::vector<std::pair<Pos, int>> used;
  for (const InsertArcSpec& sp : extras) {
    auto place = [&](const InsertEndpoint& e) -> std::int64_t {
      if (e.base < 0 || e.base >= m.grid() || e.frac <= 0 || e.frac >= 16 || e.frac == 8)
        throw Error(ErrorCode::PlacementConflict, "endpoint placement out of range");
      if (std::find(used.begin(), used.end(), std::pair{e.base, e.frac}) != used.end())
        throw Error(ErrorCode::PlacementConflict, "duplicate endpoint placement");
      used.emplace_back(e.base, e.frac);
      // frac 7/9 sit immediately left/right of a cut in the same segment
      return e.base * S + e.frac;
    };
    int nid = static_cast<int>(b.raw.size());
    b.raw.emplace_back(place(sp.start), place(sp.end));
    b.map.origin.push_back(-1);
    b.map.tag.push_back(sp.tag);
    b.map.added.push_back(nid);
  }
  return finish(m, std::move(b));
}

}  // namespace cadom
