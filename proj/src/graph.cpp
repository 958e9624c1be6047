#include "cadom/graph.hpp"

#include <algorithm>
#include <queue>

namespace cadom {

std::string rational_str(const Rational& r) {
  Rational c = r;  // cpp_rational keeps lowest terms canonically
  std::string num = numerator(c).str();
  std::string den = denominator(c).str();
  return num + "/" + den;
}

std::string ExtendedWeight::str() const {
  if (inf_) return "inf";
  return rational_str(v_);
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : adj_(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw Error(ErrorCode::UnknownId, "bad edge endpoint");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj_[edges_[e].first].push_back(edges_[e].second);
    adj_[edges_[e].second].push_back(edges_[e].first);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_.at(u);
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph intersection_graph(const CircularArcModel& m) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m.n(); ++i)
    for (int j = i + 1; j < m.n(); ++j)
      if (arcs_intersect(m, m.arcs[i], m.arcs[j])) es.emplace_back(i, j);
  return Graph(m.n(), std::move(es));
}

Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> inc;
    for (int u : g.neighbors(v)) inc.push_back(g.edge_id(v, u));
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j)
        es.emplace_back(std::min(inc[i], inc[j]), std::max(inc[i], inc[j]));
  }
  return Graph(g.edge_count(), std::move(es));
}

namespace {

void check_members(int limit, const std::vector<int>& members) {
  for (int x : members)
    if (x < 0 || x >= limit) throw Error(ErrorCode::UnknownId, "member id out of range");
}

}  // namespace

bool verify(Problem p, const Graph& g, const std::vector<int>& members) {
  int n = g.vertex_count();
  std::vector<char> in;
  switch (p) {
    case Problem::MWEVD: {
      check_members(n, members);
      in.assign(n, 0);
      for (int v : members) {
        if (in[v]) return false;  // repeated member dominates twice
        in[v] = 1;
      }
      for (int v = 0; v < n; ++v) {
        int c = in[v];
        for (int u : g.neighbors(v)) c += in[u];
        if (c != 1) return false;
      }
      return true;
    }
    case Problem::MWPVD: {
      check_members(n, members);
      in.assign(n, 0);
      for (int v : members) {
        if (in[v]) return false;
        in[v] = 1;
      }
      for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        int c = 0;
        for (int u : g.neighbors(v)) c += in[u];
        if (c != 1) return false;
      }
      return true;
    }
    case Problem::MWEED:
    case Problem::MWPED: {
      int me = g.edge_count();
      check_members(me, members);
      in.assign(me, 0);
      for (int e : members) {
        if (in[e]) return false;
        in[e] = 1;
      }
      // count, per edge, the members touching it (sharing an endpoint or equal)
      std::vector<char> vcov(n, 0);
      std::vector<int> vcnt(n, 0);
      for (int e : members) {
        auto [a, b] = g.edge(e);
        vcnt[a] += 1;
        vcnt[b] += 1;
        vcov[a] = vcov[b] = 1;
      }
      for (int e = 0; e < me; ++e) {
        auto [a, b] = g.edge(e);
        int c = vcnt[a] + vcnt[b] - (in[e] ? 1 : 0);  // member e counted at both ends
        if (p == Problem::MWEED) {
          if (c != 1) return false;
        } else {
          if (!in[e] && c != 1) return false;
        }
      }
      return true;
    }
  }
  throw Error(ErrorCode::Internal, "unknown problem");
}

ExtendedWeight solution_weight(Problem p, const Graph& g, const WeightMap& w,
                               const std::vector<int>& members) {
  ExtendedWeight total(0);
  if (is_edge_problem(p)) {
    check_members(g.edge_count(), members);
    for (int e : members) {
      auto [a, b] = g.edge(e);
      total += w.edge(a, b);
    }
  } else {
    check_members(g.vertex_count(), members);
    for (int v : members) total += w.vertex(v);
  }
  return total;
}

ThreeColoring coloring_of(const Graph& g, const std::vector<int>& edge_members) {
  check_members(g.edge_count(), edge_members);
  ThreeColoring c;
  c.color.assign(g.vertex_count(), VColor::WHITE);
  std::vector<char> in_d(g.vertex_count(), 0);
  for (int e : edge_members) {
    auto [a, b] = g.edge(e);
    in_d[a] = in_d[b] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!in_d[v]) continue;
    bool closed = true;
    for (int u : g.neighbors(v))
      if (!in_d[u]) {
        closed = false;
        break;
      }
    c.color[v] = closed ? VColor::BLACK : VColor::GRAY;
  }
  return c;
}

bool check_p1_p2(const Graph& g, const ThreeColoring& c) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (c.color[v] == VColor::GRAY) {
      int nonwhite = 0;
      for (int u : g.neighbors(v))
        if (c.color[u] != VColor::WHITE) ++nonwhite;
      if (nonwhite != 1) return false;
    } else if (c.color[v] == VColor::WHITE) {
      for (int u : g.neighbors(v))
        if (c.color[u] != VColor::GRAY) return false;
    }
  }
  return true;
}

bool k4_free_edge_bound(const Graph& g) { return g.edge_count() <= 2 * g.vertex_count(); }

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace cadom
