#pragma once

#include <string>
#include <vector>

#include "cadom/model.hpp"
#include "cadom/weights.hpp"

namespace cadom {

// Simple undirected graph. Edge ids are dense and stable: edges are sorted
// by (min endpoint, max endpoint) at construction.
class Graph {
 public:
  explicit Graph(int n) : adj_(n) {}
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  bool adjacent(int u, int v) const;
  // Edge id for (u, v), or -1.
  int edge_id(int u, int v) const;
  std::pair<int, int> edge(int e) const { return edges_.at(e); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

Graph intersection_graph(const CircularArcModel& m);
Graph line_graph(const Graph& g);

enum class Problem { MWEVD, MWEED, MWPVD, MWPED };

inline bool is_edge_problem(Problem p) { return p == Problem::MWEED || p == Problem::MWPED; }

struct Solution {
  bool feasible = false;
  ExtendedWeight value = ExtendedWeight::infinity();
  std::vector<int> members;         // vertex ids, or edge ids for edge problems
  std::vector<std::string> trace;   // dispatch labels, outermost first

  static Solution infeasible_solution() { return {}; }
};

// Checks the defining property of each problem for the given member set.
// Member ids out of range raise UnknownId.
bool verify(Problem p, const Graph& g, const std::vector<int>& members);

// Recomputes a candidate's weight (vertex weights, or edge weights of member
// edges). Kind must match the problem.
ExtendedWeight solution_weight(Problem p, const Graph& g, const WeightMap& w,
                               const std::vector<int>& members);

enum class VColor { BLACK, GRAY, WHITE };

struct ThreeColoring {
  std::vector<VColor> color;
};

// Coloring induced by an edge set D' with endpoint set D: black are the
// v in D with N[v] inside D, gray the rest of D, white everything else.
ThreeColoring coloring_of(const Graph& g, const std::vector<int>& edge_members);

// (P1) every gray vertex has exactly one non-white neighbor.
// (P2) every white vertex has only gray neighbors.
bool check_p1_p2(const Graph& g, const ThreeColoring& c);

// m <= 2n, the edge bound satisfied by every K4-free intersection graph.
bool k4_free_edge_bound(const Graph& g);

// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace cadom
