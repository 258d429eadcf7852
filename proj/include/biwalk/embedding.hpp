#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biwalk/bundle.hpp"
#include "biwalk/graph.hpp"

namespace biwalk {

// Cyclic neighbor order at every vertex; order[v] must be a permutation of
// the neighbor set of v.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

// Rotation system for K_n, n a prime power >= 3: identify vertices with
// GF(n), rotation at u is (u + g^0, u + g^1, ..., u + g^{n-2}) for the
// canonical primitive element g.
RotationSystem kn_rotation_system(int n);

struct EmbeddedGraph {
  SimpleGraph graph;
  RotationSystem rotation;
  // Faces as cyclic arc lists; deterministic: each face starts at its
  // smallest arc and faces are ordered by that arc.
  std::vector<std::vector<std::pair<int, int>>> faces;
  int genus = 0;

  int face_of_arc(int tail, int head) const;
  // The unique vertex the face does not visit, when exactly one is missing.
  std::optional<int> missed_vertex(int face) const;
};

// Face tracing: the arc after (a, b) is (b, c) where c precedes a in the
// rotation at b. Errors: InvalidRotation, Disconnected.
EmbeddedGraph trace_faces(const SimpleGraph& g, const RotationSystem& rotation);

// All arcs (tail, head), sorted; the state order of vertex-face walks.
std::vector<std::pair<int, int>> arcs_of(const SimpleGraph& g);

// States are arcs; P-cells group arcs by face, Q-cells by tail vertex.
IncidenceBundle vertex_face_walk_input(const EmbeddedGraph& e);

}  // namespace biwalk
