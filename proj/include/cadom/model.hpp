#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cadom/weights.hpp"

namespace cadom {

// Positions live on a discrete circle with exactly 2n distinct endpoint
// positions 0..2n-1. Arcs are open: they do not contain their endpoints.
using Pos = int;

struct Arc {
  int id;   // 0-based, dense
  Pos s;    // start (clockwise)
  Pos t;    // end
};

struct CircularArcModel {
  std::vector<Arc> arcs;  // arcs[i].id == i
  int n() const { return static_cast<int>(arcs.size()); }
  int grid() const { return 2 * n(); }
};

inline Pos cw_dist(const CircularArcModel& m, Pos a, Pos b) {
  int g = m.grid();
  int d = (b - a) % g;
  return d < 0 ? d + g : d;
}
inline Pos arc_len(const CircularArcModel& m, const Arc& a) { return cw_dist(m, a.s, a.t); }
// Strict interior containment of a point.
inline bool arc_contains(const CircularArcModel& m, const Arc& a, Pos p) {
  Pos d = cw_dist(m, a.s, p);
  return d > 0 && d < arc_len(m, a);
}
inline bool arcs_intersect(const CircularArcModel& m, const Arc& a, const Arc& b) {
  return arc_contains(m, a, b.s) || arc_contains(m, b, a.s);
}
// a strictly inside b (proper or not; equality cannot happen on a valid grid).
inline bool arc_inside(const CircularArcModel& m, const Arc& a, const Arc& b) {
  Pos d = cw_dist(m, b.s, a.s);
  return d > 0 && d + arc_len(m, a) < arc_len(m, b);
}

enum class SegmentKind { SS, ST, TS, TT };

struct Segment {
  int index;         // segment i is the open interval (i, i+1 mod 2n)
  Pos left, right;   // bounding endpoint positions
  SegmentKind kind;  // left/right bound each a start (S) or an end (T)
};

// Builds a model from raw integer endpoints on an arbitrary circle scale.
// Order-preserving: endpoints are ranked; ties broken by (value, arc id,
// start before end). An arc with raw start == raw end is degenerate.
CircularArcModel normalize_model(const std::vector<std::pair<std::int64_t, std::int64_t>>& raw);

std::vector<Segment> segments(const CircularArcModel& m);

// Arcs whose interior covers the interior of segment `seg`.
std::vector<int> arcs_at_segment(const CircularArcModel& m, int seg);
// Arcs strictly containing endpoint position p.
std::vector<int> arcs_at_point(const CircularArcModel& m, Pos p);

struct CoverageExtremes {
  int min_cov = 0, max_cov = 0;
  int min_witness = -1, max_witness = -1;  // least segment indices
};
CoverageExtremes coverage_extremes(const CircularArcModel& m);

// Per-segment coverage counts.
std::vector<int> coverage_profile(const CircularArcModel& m);

// Lowest-id arc intersecting every other arc, if any.
std::optional<int> find_universal_arc(const CircularArcModel& m);

// Lexicographically least set of k' <= k arcs whose union (of open arcs)
// covers the whole circle, including every endpoint. k in {2, 3}.
std::optional<std::vector<int>> find_small_cover(const CircularArcModel& m, int k);

// No 2 and no 3 arcs cover the circle (sufficient condition used throughout).
bool is_hca_by_cover(const CircularArcModel& m);

// Number of intersecting arc pairs, i.e. edges of the intersection graph.
std::int64_t count_intersecting_pairs(const CircularArcModel& m);

struct CycleStructure {
  std::vector<int> cycle;                // arc ids in circular order, least id first
  std::vector<std::vector<int>> leaves;  // leaves[i]: pendant arc ids under cycle[i], ascending
};

// Requires: max coverage 2, min coverage 1, no 2-arc and no 3-arc cover.
// The intersection graph is then a cycle C_k (k >= 4) with pendant vertices.
CycleStructure extract_cycle_structure(const CircularArcModel& m);

enum class SurgeryTag { COPY, LEFT_PART, RIGHT_PART, LEAF_MINUS, LEAF_PLUS, EXTRA };

struct SurgeryMap {
  // image[old id] -> derived new ids (1 for COPY, 2 for a split arc).
  std::vector<std::vector<int>> image;
  std::vector<int> origin;        // new id -> old id, or -1 for inserted arcs
  std::vector<SurgeryTag> tag;    // per new id
  std::vector<int> added;         // inserted new ids
};

// Splits every arc covering segment `seg` at an interior point of that
// segment. Split halves keep circular order; the result is re-normalized.
std::pair<CircularArcModel, SurgeryMap> cut_at(const CircularArcModel& m, int seg);

// A new arc endpoint at grid position `base` offset by `frac` (0 < frac < 16)
// sixteenths of the way toward base+1. Distinct (base, frac) pairs are
// required; frac 8 is reserved for the cut point when combined with a split.
struct InsertEndpoint {
  Pos base;
  int frac;
};
struct InsertArcSpec {
  InsertEndpoint start, end;
  SurgeryTag tag = SurgeryTag::EXTRA;
};

std::pair<CircularArcModel, SurgeryMap> insert_arcs(const CircularArcModel& m,
                                                    const std::vector<InsertArcSpec>& specs);

// Splits one arc at an interior point of segment `seg` (which it must cover),
// optionally adding the given extra arcs in the same pass.
std::pair<CircularArcModel, SurgeryMap> split_arc_at(const CircularArcModel& m, int arc, int seg,
                                                     const std::vector<InsertArcSpec>& extras);

}  // namespace cadom
