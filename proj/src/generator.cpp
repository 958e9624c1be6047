#include "cadom/generator.hpp"

#include <numeric>

#include "cadom/graph.hpp"
#include "cadom/rng.hpp"

namespace cadom {

namespace {

CircularArcModel from_positions(std::vector<Arc> arcs) {
  CircularArcModel m;
  m.arcs = std::move(arcs);
  return m;
}

// Pairs a shuffled slot list into arcs; slots.size() must be even.
std::vector<Arc> pair_slots(const std::vector<int>& slots, int first_id, bool sorted_pairs) {
  std::vector<Arc> arcs;
  for (size_t i = 0; i + 1 < slots.size(); i += 2) {
    int s = slots[i], t = slots[i + 1];
    if (sorted_pairs && s > t) std::swap(s, t);
    arcs.push_back(Arc{first_id + static_cast<int>(i / 2), s, t});
  }
  return arcs;
}

CircularArcModel build_model(const GenSpec& spec, SplitMix64& rng) {
  int n = spec.n;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw Error(ErrorCode::InvalidSpec, msg);
  };
  switch (spec.family) {
    case Family::RANDOM:
    case Family::INTERVAL: {
      need(n >= 1, "family needs n >= 1");
      std::vector<int> slots(2 * n);
      std::iota(slots.begin(), slots.end(), 0);
      rng.shuffle(slots);
      return from_positions(pair_slots(slots, 0, spec.family == Family::INTERVAL));
    }
    case Family::CYCLE: {
      need(n >= 3, "cycle family needs n >= 3");
      std::vector<Arc> arcs;
      for (int i = 0; i < n; ++i) arcs.push_back(Arc{i, 2 * i, (2 * i + 3) % (2 * n)});
      return from_positions(std::move(arcs));
    }
    case Family::STAR: {
      need(n >= 2, "star family needs n >= 2");
      std::vector<Arc> arcs;
      arcs.push_back(Arc{0, 0, 2 * n - 1});
      for (int i = 1; i < n; ++i) arcs.push_back(Arc{i, 2 * i - 1, 2 * i});
      return from_positions(std::move(arcs));
    }
    case Family::OCTAHEDRON: {
      need(n == 6, "octahedron family needs n == 6");
      std::vector<Arc> arcs;
      for (int i = 0; i < 6; ++i) arcs.push_back(Arc{i, 2 * i, (2 * i + 5) % 12});
      return from_positions(std::move(arcs));
    }
    case Family::COVER2: {
      need(n >= 2, "cover2 family needs n >= 2");
      // (0, 2n-1) and (2n-2, 1) jointly cover the circle.
      std::vector<Arc> arcs;
      arcs.push_back(Arc{0, 0, 2 * n - 1});
      arcs.push_back(Arc{1, 2 * n - 2, 1});
      std::vector<int> rest;
      for (int x = 2; x <= 2 * n - 3; ++x) rest.push_back(x);
      rng.shuffle(rest);
      auto tail = pair_slots(rest, 2, false);
      arcs.insert(arcs.end(), tail.begin(), tail.end());
      return from_positions(std::move(arcs));
    }
    case Family::COVER3: {
      need(n >= 3, "cover3 family needs n >= 3");
      // (0,3), (2,5), (4,1) jointly cover the circle.
      std::vector<Arc> arcs;
      arcs.push_back(Arc{0, 0, 3});
      arcs.push_back(Arc{1, 2, 5});
      arcs.push_back(Arc{2, 4, 1});
      std::vector<int> rest;
      for (int x = 6; x <= 2 * n - 1; ++x) rest.push_back(x);
      rng.shuffle(rest);
      auto tail = pair_slots(rest, 3, false);
      arcs.insert(arcs.end(), tail.begin(), tail.end());
      return from_positions(std::move(arcs));
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

Rational draw_rational(SplitMix64& rng, bool signed_range) {
  long long num = signed_range ? static_cast<long long>(rng.below(81)) - 40
                               : static_cast<long long>(rng.below(41));
  long long den = 1 + static_cast<long long>(rng.below(10));
  return Rational(num, den);
}

}  // namespace

Generated generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  Generated out;
  out.model = build_model(spec, rng);
  out.weights = WeightMap(spec.kind);
  if (spec.weights == WeightStyle::UNIT) return out;  // empty map, defaults to 1/1
  bool sgn = spec.weights == WeightStyle::RANDOM_SIGNED;
  if (spec.kind == WeightKind::VERTEX) {
    for (int v = 0; v < out.model.n(); ++v)
      out.weights.set_vertex(v, ExtendedWeight(draw_rational(rng, sgn)));
  } else {
    Graph g = intersection_graph(out.model);
    for (auto [a, b] : g.edges()) out.weights.set_edge(a, b, ExtendedWeight(draw_rational(rng, sgn)));
  }
  return out;
}

}  // namespace cadom
