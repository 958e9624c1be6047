#include "cadom/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace cadom {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (size_t j = i; j < tok.size(); ++j)
    if (!isdigit(static_cast<unsigned char>(tok[j]))) return false;
  try {
    out = std::stoll(tok);
  } catch (...) {
    return false;
  }
  return true;
}

ExtendedWeight parse_value(const std::string& tok, int line) {
  if (tok == "inf") return ExtendedWeight::infinity();
  std::string num = tok, den = "1";
  if (auto slash = tok.find('/'); slash != std::string::npos) {
    num = tok.substr(0, slash);
    den = tok.substr(slash + 1);
  }
  auto ok = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](char c) { return isdigit(static_cast<unsigned char>(c)); });
  };
  if (!ok(num) || !ok(den)) fail(line, "bad rational '" + tok + "'");
  boost::multiprecision::cpp_int p(num), q(den);
  if (q == 0) fail(line, "zero denominator");
  return ExtendedWeight(Rational(p, q));
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

}  // namespace

CircularArcModel parse_model(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<char> seen_id, seen_pos;
  CircularArcModel m;
  int arcs_read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tk = tokens(line);
    if (tk.empty() || tk[0] == "c") continue;
    if (tk[0] == "p") {
      if (n >= 0) fail(lineno, "duplicate header");
      if (tk.size() != 3 || tk[1] != "ca" || !parse_int(tk[2], n) || n < 0 || n > 1000000)
        fail(lineno, "expected 'p ca <n>'");
      m.arcs.assign(n, Arc{});
      seen_id.assign(n, 0);
      seen_pos.assign(2 * n, 0);
      continue;
    }
    if (tk[0] == "a") {
      if (n < 0) fail(lineno, "arc before header");
      long long id, s, t;
      if (tk.size() != 4 || !parse_int(tk[1], id) || !parse_int(tk[2], s) || !parse_int(tk[3], t))
        fail(lineno, "expected 'a <id> <s> <t>'");
      if (id < 1 || id > n) fail(lineno, "arc id out of range");
      if (seen_id[id - 1]) fail(lineno, "duplicate arc id");
      if (s < 0 || s >= 2 * n || t < 0 || t >= 2 * n) fail(lineno, "position out of range");
      if (seen_pos[s]) fail(lineno, "duplicate position " + std::to_string(s));
      seen_pos[s] = 1;
      if (seen_pos[t]) fail(lineno, "duplicate position " + std::to_string(t));
      seen_pos[t] = 1;
      seen_id[id - 1] = 1;
      m.arcs[id - 1] = Arc{static_cast<int>(id - 1), static_cast<Pos>(s), static_cast<Pos>(t)};
      ++arcs_read;
      continue;
    }
    fail(lineno, "unknown line type '" + tk[0] + "'");
  }
  if (n < 0) fail(lineno, "missing 'p ca' header");
  if (arcs_read != n) fail(lineno, "expected " + std::to_string(n) + " arcs");
  return m;
}

std::string emit_model(const CircularArcModel& m) {
  std::ostringstream os;
  os << "c format 1\n";
  os << "p ca " << m.n() << "\n";
  for (const Arc& a : m.arcs) os << "a " << a.id + 1 << " " << a.s << " " << a.t << "\n";
  return os.str();
}

WeightMap parse_weights(std::istream& in, WeightKind kind) {
  WeightMap w(kind);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tk = tokens(line);
    if (tk.empty() || tk[0] == "c") continue;
    if (tk[0] == "vw") {
      if (kind != WeightKind::VERTEX) fail(lineno, "vertex weight in edge-weight context");
      long long id;
      if (tk.size() != 3 || !parse_int(tk[1], id) || id < 1) fail(lineno, "expected 'vw <id> <value>'");
      w.set_vertex(static_cast<int>(id - 1), parse_value(tk[2], lineno));
      continue;
    }
    if (tk[0] == "ew") {
      if (kind != WeightKind::EDGE) fail(lineno, "edge weight in vertex-weight context");
      long long a, b;
      if (tk.size() != 4 || !parse_int(tk[1], a) || !parse_int(tk[2], b) || a < 1 || b < 1 || a == b)
        fail(lineno, "expected 'ew <id1> <id2> <value>'");
      w.set_edge(static_cast<int>(a - 1), static_cast<int>(b - 1), parse_value(tk[3], lineno));
      continue;
    }
    fail(lineno, "unknown line type '" + tk[0] + "'");
  }
  return w;
}

std::string emit_weights(const WeightMap& w) {
  std::ostringstream os;
  os << "c format 1\n";
  if (w.kind() == WeightKind::VERTEX) {
    for (const auto& [v, val] : w.vertex_entries())
      os << "vw " << v + 1 << " " << val.str() << "\n";
  } else {
    for (const auto& [e, val] : w.edge_entries())
      os << "ew " << e.first + 1 << " " << e.second + 1 << " " << val.str() << "\n";
  }
  return os.str();
}

ParsedSolution parse_solution(std::istream& in) {
  ParsedSolution ps;
  std::string line;
  int lineno = 0;
  bool have_status = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto tk = tokens(line);
    if (tk.empty() || tk[0] == "c") continue;
    if (tk[0] == "s") {
      if (have_status) fail(lineno, "duplicate status line");
      have_status = true;
      if (tk.size() == 2 && tk[1] == "INFEASIBLE") {
        ps.feasible = false;
      } else if (tk.size() == 3 && tk[1] == "OPTIMAL") {
        ps.feasible = true;
        ps.value = parse_value(tk[2], lineno);
      } else {
        fail(lineno, "expected 's OPTIMAL <p>/<q>' or 's INFEASIBLE'");
      }
      continue;
    }
    if (tk[0] == "v") {
      long long id;
      if (tk.size() != 2 || !parse_int(tk[1], id) || id < 1) fail(lineno, "expected 'v <id>'");
      ps.vertex_members.push_back(static_cast<int>(id - 1));
      continue;
    }
    if (tk[0] == "e") {
      long long a, b;
      if (tk.size() != 3 || !parse_int(tk[1], a) || !parse_int(tk[2], b) || a < 1 || b < 1)
        fail(lineno, "expected 'e <id1> <id2>'");
      ps.edge_members.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
      continue;
    }
    fail(lineno, "unknown line type '" + tk[0] + "'");
  }
  if (!have_status) fail(lineno, "missing 's' status line");
  return ps;
}

std::string emit_solution(Problem p, const Graph& g, const Solution& sol) {
  std::ostringstream os;
  if (!sol.feasible) {
    os << "s INFEASIBLE\n";
  } else {
    os << "s OPTIMAL " << sol.value.str() << "\n";
    if (is_edge_problem(p)) {
      std::vector<std::pair<int, int>> es;
      for (int e : sol.members) es.push_back(g.edge(e));
      std::sort(es.begin(), es.end());
      for (auto [a, b] : es) os << "e " << a + 1 << " " << b + 1 << "\n";
    } else {
      std::vector<int> vs = sol.members;
      std::sort(vs.begin(), vs.end());
      for (int v : vs) os << "v " << v + 1 << "\n";
    }
  }
  if (!sol.trace.empty()) {
    os << "c trace:";
    for (const auto& t : sol.trace) os << " " << t;
    os << "\n";
  }
  return os.str();
}

}  // namespace cadom
