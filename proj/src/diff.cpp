#include "cadom/diff.hpp"

#include <sstream>

#include "cadom/io.hpp"
#include "cadom/oracle.hpp"
#include "cadom/rng.hpp"
#include "cadom/solvers.hpp"

namespace cadom {

std::string DiffReport::text() const {
  std::ostringstream os;
  os << "trials=" << trials << " mismatches=" << mismatches.size() << "\n";
  for (const auto& m : mismatches) os << m;
  return os.str();
}

DiffReport differential_run(Problem p, int trials, int n_min, int n_max, WeightStyle ws,
                            std::uint64_t seed) {
  if (n_min < 1 || n_max < n_min) throw Error(ErrorCode::InvalidSpec, "bad n range");
  SplitMix64 rng(seed);
  DiffReport rep;
  for (int t = 0; t < trials; ++t) {
    GenSpec gs;
    gs.family = Family::RANDOM;
    gs.weights = ws;
    gs.kind = is_edge_problem(p) ? WeightKind::EDGE : WeightKind::VERTEX;
    Generated gen;
    Graph g(0);
    // Edge problems: redraw until the oracle's edge budget fits.
    for (;;) {
      gs.seed = rng.next();
      gs.n = n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max - n_min + 1)));
      gen = generate(gs);
      g = intersection_graph(gen.model);
      if (!is_edge_problem(p) || g.edge_count() <= 20) break;
    }
    ++rep.trials;
    Solution got = solve(p, gen.model, gen.weights);
    Solution want = oracle_solve(p, g, gen.weights);
    bool ok = got.feasible == want.feasible;
    if (ok && got.feasible) {
      ok = got.value == want.value && verify(p, g, got.members) &&
           solution_weight(p, g, gen.weights, got.members) == got.value;
    }
    if (!ok) {
      std::ostringstream os;
      os << "MISMATCH seed=" << gs.seed << " n=" << gs.n << " solver="
         << (got.feasible ? got.value.str() : std::string("INF")) << " oracle="
         << (want.feasible ? want.value.str() : std::string("INF")) << "\n";
      os << emit_model(gen.model) << emit_weights(gen.weights);
      rep.mismatches.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace cadom
