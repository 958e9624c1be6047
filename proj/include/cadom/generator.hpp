#pragma once

#include <cstdint>

#include "cadom/model.hpp"
#include "cadom/weights.hpp"

namespace cadom {

enum class Family { RANDOM, CYCLE, INTERVAL, STAR, OCTAHEDRON, COVER2, COVER3 };
enum class WeightStyle { UNIT, RANDOM_NONNEG, RANDOM_SIGNED };

struct GenSpec {
  std::uint64_t seed = 0;
  int n = 0;
  Family family = Family::RANDOM;
  WeightStyle weights = WeightStyle::UNIT;
  WeightKind kind = WeightKind::VERTEX;
};

struct Generated {
  CircularArcModel model;
  WeightMap weights{WeightKind::VERTEX};
};

// Deterministic: identical spec yields identical output. Family constraints
// (n fixed for OCTAHEDRON, minimums elsewhere) raise InvalidSpec.
Generated generate(const GenSpec& spec);

}  // namespace cadom
