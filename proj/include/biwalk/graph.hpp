#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biwalk/matrix.hpp"

namespace biwalk {

// Undirected simple graph on vertices 0..n-1. Edges stored (u < v), sorted.
struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  static SimpleGraph from_edges(int num_vertices, std::vector<std::pair<int, int>> edges);
  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency_lists() const;  // sorted neighbors
  bool connected() const;
};

enum class Part { A, B };

// Bipartite graph with explicit parts. Edges are stored (a in partA, b in
// partB); the canonical order sorts by (min endpoint, max endpoint), which is
// what all worked matrices use. Families that fix their own edge order
// (cycles: wrap edge last) set family_order.
struct BipartiteGraph {
  std::vector<int> part_a;  // ascending
  std::vector<int> part_b;  // ascending
  std::vector<std::pair<int, int>> edges;
  std::string name;
  bool family_order = false;
  bool connected = false;

  int num_edges() const { return int(edges.size()); }
  int num_vertices() const { return int(part_a.size() + part_b.size()); }
  int degree(int vertex) const;
  bool in_part_a(int vertex) const;
  // (degree on A side, degree on B side) when both are uniform
  std::optional<std::pair<int, int>> biregular() const;
};

// Validates parts/edges, normalizes edge endpoints to (A, B), sorts edges
// canonically. Errors: NotBipartite, DuplicateEdge, IsolatedVertex, BadLabel.
BipartiteGraph from_edge_list(std::vector<int> part_a, std::vector<int> part_b,
                              std::vector<std::pair<int, int>> edges);

BipartiteGraph path_graph(int n);   // n >= 2 vertices 0..n-1, evens in partA
BipartiteGraph cycle_graph(int n);  // n >= 4 even; wrap edge (0, n-1) last
BipartiteGraph crown_graph(int n);  // K_{n,n} minus a perfect matching, n >= 3

// Subdivision graph S(G): one new vertex per edge, parts (new, original).
// New vertex for edge j carries label num_vertices + j. arc_for_edge maps the
// canonical bipartite edge index to the arc (tail, head) of G it represents.
struct Subdivision {
  BipartiteGraph graph;
  std::vector<std::pair<int, int>> arc_for_edge;
};
Subdivision subdivision(const SimpleGraph& g);

// The two edge partitions driving a walk: cells_p groups edge indices by
// their endpoint in the designated part, cells_q by the other endpoint.
// Cells are ordered by owning vertex label, ascending.
struct EdgePartitionPair {
  Part designated = Part::B;
  std::vector<std::vector<int>> cells_p;
  std::vector<int> cell_vertex_p;
  std::vector<std::vector<int>> cells_q;
  std::vector<int> cell_vertex_q;
};
EdgePartitionPair build_partitions(const BipartiteGraph& g, Part designated = Part::B);

}  // namespace biwalk
