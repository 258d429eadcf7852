#pragma once

#include <optional>
#include <vector>

#include "biwalk/exact_int.hpp"
#include "biwalk/graph.hpp"
#include "biwalk/matrix.hpp"

namespace biwalk {

// Everything a walk construction needs: a state set partitioned two ways,
// with characteristic and normalized incidence matrices. States are edges
// when the bundle comes from a bipartite graph, arcs for vertex-face walks.
struct IncidenceBundle {
  int num_states = 0;
  std::vector<std::vector<int>> cells_p;  // drive P
  std::vector<int> cell_label_p;
  std::vector<std::vector<int>> cells_q;  // drive Q
  std::vector<int> cell_label_q;

  RealMatrix p0, p0hat;  // num_states x |cells_p|
  RealMatrix p1, p1hat;  // num_states x |cells_q|
  RealMatrix c, chat;    // |cells_q| x |cells_p|; c = p1^T p0 entrywise integer

  bool connected = false;
  std::optional<BipartiteGraph> graph;  // provenance when built from a graph

  int cell_of_p(int state) const;  // index into cells_p
  int cell_of_q(int state) const;
  IntMatrix c_int() const;
  // [[0, C], [C^T, 0]] on |cells_q| + |cells_p| vertices
  RealMatrix bipartite_adjacency() const;
};

IncidenceBundle incidence_bundle(const BipartiteGraph& g, const EdgePartitionPair& parts);

// Generic entry point for non-graph state sets (vertex-face walks). Each
// state must appear in exactly one cell on each side.
IncidenceBundle bundle_from_cells(int num_states,
                                  std::vector<std::vector<int>> cells_p,
                                  std::vector<int> cell_label_p,
                                  std::vector<std::vector<int>> cells_q,
                                  std::vector<int> cell_label_q);

}  // namespace biwalk
