#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cadom/diff.hpp"
#include "cadom/generator.hpp"
#include "cadom/io.hpp"
#include "cadom/solvers.hpp"

namespace {

using namespace cadom;

Problem parse_problem(const std::string& s) {
  if (s == "mwevd") return Problem::MWEVD;
  if (s == "mweed") return Problem::MWEED;
  if (s == "mwpvd") return Problem::MWPVD;
  if (s == "mwped") return Problem::MWPED;
  throw CLI::ValidationError("--problem", "expected mwevd|mweed|mwpvd|mwped");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
  return in;
}

WeightMap load_weights(const std::optional<std::string>& path, WeightKind kind) {
  if (!path) return WeightMap(kind);  // unit defaults
  std::ifstream in = open_input(*path);
  return parse_weights(in, kind);
}

int cmd_solve(const std::string& problem, const std::string& model_path,
              const std::optional<std::string>& weights_path, bool check) {
  Problem p = parse_problem(problem);
  std::ifstream mf = open_input(model_path);
  CircularArcModel m = parse_model(mf);
  WeightKind kind = is_edge_problem(p) ? WeightKind::EDGE : WeightKind::VERTEX;
  WeightMap w = load_weights(weights_path, kind);
  Solution sol = solve(p, m, w);
  Graph g = is_edge_problem(p) || check ? intersection_graph(m) : Graph(m.n());
  if (check && sol.feasible) {
    if (!verify(p, g, sol.members) || solution_weight(p, g, w, sol.members) != sol.value)
      throw Error(ErrorCode::Internal, "solution failed the requested re-check");
  }
  std::cout << emit_solution(p, g, sol);
  return sol.feasible ? 0 : 1;
}

int cmd_verify(const std::string& problem, const std::string& model_path,
               const std::optional<std::string>& weights_path, const std::string& solution_path) {
  Problem p = parse_problem(problem);
  std::ifstream mf = open_input(model_path);
  CircularArcModel m = parse_model(mf);
  WeightKind kind = is_edge_problem(p) ? WeightKind::EDGE : WeightKind::VERTEX;
  WeightMap w = load_weights(weights_path, kind);
  std::ifstream sf = open_input(solution_path);
  ParsedSolution ps = parse_solution(sf);
  if (!ps.feasible) {
    std::cout << "INFEASIBLE declared-by-solution\n";
    return 0;
  }
  Graph g = intersection_graph(m);
  std::vector<int> members;
  if (is_edge_problem(p)) {
    for (auto [a, b] : ps.edge_members) {
      int e = g.edge_id(a, b);
      if (e < 0) {
        std::cout << "INFEASIBLE not-an-edge\n";
        return 0;
      }
      members.push_back(e);
    }
  } else {
    members = ps.vertex_members;
  }
  if (!verify(p, g, members)) {
    std::cout << "INFEASIBLE verification-failed\n";
    return 0;
  }
  ExtendedWeight val = solution_weight(p, g, w, members);
  if (val != ps.value) {
    std::cout << "INFEASIBLE value-mismatch recomputed=" << val.str() << "\n";
    return 0;
  }
  std::cout << "FEASIBLE " << val.str() << "\n";
  return 0;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, const std::string& weights,
            const std::string& kind, const std::optional<std::string>& out_model,
            const std::optional<std::string>& out_weights) {
  GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  if (family == "random") spec.family = Family::RANDOM;
  else if (family == "cycle") spec.family = Family::CYCLE;
  else if (family == "interval") spec.family = Family::INTERVAL;
  else if (family == "star") spec.family = Family::STAR;
  else if (family == "octahedron") spec.family = Family::OCTAHEDRON;
  else if (family == "cover2") spec.family = Family::COVER2;
  else if (family == "cover3") spec.family = Family::COVER3;
  else throw CLI::ValidationError("--family", "unknown family");
  if (weights == "unit") spec.weights = WeightStyle::UNIT;
  else if (weights == "nonneg") spec.weights = WeightStyle::RANDOM_NONNEG;
  else if (weights == "signed") spec.weights = WeightStyle::RANDOM_SIGNED;
  else throw CLI::ValidationError("--weights", "expected unit|nonneg|signed");
  if (kind == "vertex") spec.kind = WeightKind::VERTEX;
  else if (kind == "edge") spec.kind = WeightKind::EDGE;
  else throw CLI::ValidationError("--kind", "expected vertex|edge");

  Generated gen = generate(spec);
  std::string model_text = emit_model(gen.model);
  std::string weight_text = emit_weights(gen.weights);
  if (out_model) {
    std::ofstream f(*out_model);
    if (!f) throw Error(ErrorCode::ParseError, *out_model + ": cannot write");
    f << model_text;
  } else {
    std::cout << model_text;
  }
  if (out_weights) {
    std::ofstream f(*out_weights);
    if (!f) throw Error(ErrorCode::ParseError, *out_weights + ": cannot write");
    f << weight_text;
  } else {
    std::cout << weight_text;
  }
  return 0;
}

int cmd_info(const std::string& model_path) {
  std::ifstream mf = open_input(model_path);
  CircularArcModel m = parse_model(mf);
  std::cout << "n " << m.n() << "\n";
  std::cout << "m " << count_intersecting_pairs(m) << "\n";
  if (m.n() == 0) return 0;
  CoverageExtremes ce = coverage_extremes(m);
  std::cout << "coverage min " << ce.min_cov << " at segment " << ce.min_witness << "\n";
  std::cout << "coverage max " << ce.max_cov << " at segment " << ce.max_witness << "\n";
  if (auto u = find_universal_arc(m)) std::cout << "universal arc " << *u + 1 << "\n";
  else std::cout << "universal arc none\n";
  auto print_cover = [&](int k) {
    auto c = find_small_cover(m, k);
    std::cout << "cover" << k;
    if (!c) {
      std::cout << " none\n";
      return;
    }
    for (int a : *c) std::cout << " " << a + 1;
    std::cout << "\n";
  };
  print_cover(2);
  print_cover(3);
  bool hca = is_hca_by_cover(m);
  std::cout << "hca-by-cover " << (hca ? "yes" : "no") << "\n";
  if (hca && ce.min_cov == 1 && ce.max_cov == 2) {
    CycleStructure cs = extract_cycle_structure(m);
    std::cout << "cycle";
    for (int v : cs.cycle) std::cout << " " << v + 1;
    std::cout << "\n";
    for (size_t i = 0; i < cs.cycle.size(); ++i) {
      if (cs.leaves[i].empty()) continue;
      std::cout << "leaves " << cs.cycle[i] + 1;
      for (int l : cs.leaves[i]) std::cout << " " << l + 1;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fuzz(const std::string& problem, int trials, int n_min, int n_max,
             const std::string& weights, std::uint64_t seed) {
  Problem p = parse_problem(problem);
  WeightStyle ws;
  if (weights == "unit") ws = WeightStyle::UNIT;
  else if (weights == "nonneg") ws = WeightStyle::RANDOM_NONNEG;
  else if (weights == "signed") ws = WeightStyle::RANDOM_SIGNED;
  else throw CLI::ValidationError("--weights", "expected unit|nonneg|signed");
  DiffReport r = differential_run(p, trials, n_min, n_max, ws, seed);
  std::cout << r.text();
  return r.passed() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for domination problems on circular-arc models"};
  app.require_subcommand(1);

  std::string problem, model_path, solution_path, family = "random";
  std::string weights_style = "nonneg", gen_weights = "unit", gen_kind = "vertex";
  std::optional<std::string> weights_path, out_model, out_weights;
  bool check = false;
  int n = 0, trials = 100, n_min = 2, n_max = 9;
  std::uint64_t seed = 1;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem instance");
  solve_cmd->add_option("--problem", problem)->required();
  solve_cmd->add_option("--model", model_path)->required();
  solve_cmd->add_option("--weights", weights_path);
  solve_cmd->add_flag("--check", check);

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file");
  verify_cmd->add_option("--problem", problem)->required();
  verify_cmd->add_option("--model", model_path)->required();
  verify_cmd->add_option("--weights", weights_path);
  verify_cmd->add_option("--solution", solution_path)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a model and weights");
  gen_cmd->add_option("--family", family);
  gen_cmd->add_option("--n", n)->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--weights", gen_weights);
  gen_cmd->add_option("--kind", gen_kind);
  gen_cmd->add_option("--out-model", out_model);
  gen_cmd->add_option("--out-weights", out_weights);

  auto* info_cmd = app.add_subcommand("info", "Report structural facts about a model");
  info_cmd->add_option("--model", model_path)->required();

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential test against the brute-force oracle");
  fuzz_cmd->add_option("--problem", problem)->required();
  fuzz_cmd->add_option("--trials", trials);
  fuzz_cmd->add_option("--n-min", n_min);
  fuzz_cmd->add_option("--n-max", n_max);
  fuzz_cmd->add_option("--weights", weights_style);
  fuzz_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(solve_cmd))
      return cmd_solve(problem, model_path, weights_path, check);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(problem, model_path, weights_path, solution_path);
    if (app.got_subcommand(gen_cmd))
      return cmd_gen(family, n, seed, gen_weights, gen_kind, out_model, out_weights);
    if (app.got_subcommand(info_cmd)) return cmd_info(model_path);
    if (app.got_subcommand(fuzz_cmd))
      return cmd_fuzz(problem, trials, n_min, n_max, weights_style, seed);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const cadom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code == cadom::ErrorCode::Internal || e.code == cadom::ErrorCode::InconsistentMapping
               ? 4
               : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
