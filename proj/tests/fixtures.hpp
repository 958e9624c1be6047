#pragma once

#include <utility>
#include <vector>

#include "cadom/generator.hpp"
#include "cadom/graph.hpp"
#include "cadom/model.hpp"

namespace fixtures {

// C_n as arcs (2i, 2i+3 mod 2n): consecutive arcs overlap, others disjoint.
inline cadom::CircularArcModel cycle_model(int n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  for (int i = 0; i < n; ++i) raw.push_back({2 * i, (2 * i + 3) % (2 * n)});
  return cadom::normalize_model(raw);
}

// C_k with pendant arcs strictly inside chosen cycle arcs. pendants[i] is the
// number of leaves under cycle arc i (0, 1 or 2).
inline cadom::CircularArcModel cycle_with_pendants(int k, const std::vector<int>& pendants) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  for (int i = 0; i < k; ++i) raw.push_back({40LL * i, (40LL * i + 60) % (40LL * k)});
  // Arc i is alone on (40i+30, 40i+40); leaves there touch only arc i.
  for (int i = 0; i < k; ++i) {
    if (pendants[i] >= 1) raw.push_back({40LL * i + 31, 40LL * i + 33});
    if (pendants[i] >= 2) raw.push_back({40LL * i + 35, 40LL * i + 37});
  }
  return cadom::normalize_model(raw);
}

// Cycle-like chain of arcs (4i, 4i+6); extending arc i to length 10 makes it
// reach arc i+2, creating a coverage-3 segment. With k >= 6 and at most two
// extensions no 3 arcs cover the circle.
inline cadom::CircularArcModel triangle_model(int k, unsigned ext_mask) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  for (int i = 0; i < k; ++i) {
    int len = (ext_mask >> i) & 1u ? 10 : 6;
    raw.push_back({4LL * i, (4LL * i + len) % (4LL * k)});
  }
  return cadom::normalize_model(raw);
}

inline bool brute_cover(const cadom::CircularArcModel& m, const std::vector<int>& ids) {
  // Arc endpoints are grid points, so covering every endpoint position
  // covers the whole circle.
  for (int p = 0; p < m.grid(); ++p) {
    bool hit = false;
    for (int id : ids)
      if (cadom::arc_contains(m, m.arcs[id], p)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline cadom::Generated random_instance(std::uint64_t seed, int n, cadom::WeightStyle ws,
                                        cadom::WeightKind kind,
                                        cadom::Family fam = cadom::Family::RANDOM) {
  cadom::GenSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.family = fam;
  spec.weights = ws;
  spec.kind = kind;
  return cadom::generate(spec);
}

}  // namespace fixtures
