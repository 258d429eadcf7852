#include "biwalk/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "biwalk/errors.hpp"
#include "biwalk/gf.hpp"

namespace biwalk {

RotationSystem kn_rotation_system(int n) {
  require(n >= 3, Err::BadSize, "rotation system needs n >= 3");
  auto pk = prime_power(n);
  require(pk.has_value(), Err::NotPrimePower, std::to_string(n) + " is not a prime power");
  FiniteField f = FiniteField::make(pk->first, pk->second);
  const int g = f.generator();
  RotationSystem rot;
  rot.order.resize(n);
  for (int u = 0; u < n; ++u) {
    int step = 1;  // g^0
    for (int i = 0; i < n - 1; ++i) {
      rot.order[u].push_back(f.add(u, step));
      step = f.mul(step, g);
    }
  }
  return rot;
}

std::vector<std::pair<int, int>> arcs_of(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

int EmbeddedGraph::face_of_arc(int tail, int head) const {
  for (int f = 0; f < int(faces.size()); ++f)
    for (auto [a, b] : faces[f])
      if (a == tail && b == head) return f;
  fail(Err::BadLabel,
       "no face contains arc (" + std::to_string(tail) + ", " + std::to_string(head) + ")");
}

std::optional<int> EmbeddedGraph::missed_vertex(int face) const {
  require(0 <= face && face < int(faces.size()), Err::BadLabel, "face index out of range");
  std::set<int> seen;
  for (auto [a, b] : faces[face]) seen.insert(a);
  if (int(seen.size()) != graph.num_vertices - 1) return std::nullopt;
  for (int v = 0; v < graph.num_vertices; ++v)
    if (!seen.count(v)) return v;
  return std::nullopt;
}

EmbeddedGraph trace_faces(const SimpleGraph& g, const RotationSystem& rotation) {
  require(g.connected(), Err::Disconnected, "face tracing needs a connected graph");
  require(int(rotation.order.size()) == g.num_vertices, Err::InvalidRotation,
          "rotation must list every vertex");
  auto adj = g.adjacency_lists();
  for (int v = 0; v < g.num_vertices; ++v) {
    std::vector<int> sorted = rotation.order[v];
    std::sort(sorted.begin(), sorted.end());
    require(sorted == adj[v], Err::InvalidRotation,
            "rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
  }

  // position of a in the rotation at b, for predecessor lookup
  std::map<std::pair<int, int>, int> pos;
  for (int v = 0; v < g.num_vertices; ++v)
    for (int i = 0; i < int(rotation.order[v].size()); ++i)
      pos[{v, rotation.order[v][i]}] = i;

  auto next_arc = [&](std::pair<int, int> arc) {
    auto [a, b] = arc;
    const auto& order = rotation.order[b];
    int i = pos.at({b, a});
    int c = order[(i + int(order.size()) - 1) % order.size()];  // predecessor of a at b
    return std::make_pair(b, c);
  };

  EmbeddedGraph out;
  out.graph = g;
  out.rotation = rotation;

  auto arcs = arcs_of(g);
  std::set<std::pair<int, int>> unused(arcs.begin(), arcs.end());
  for (const auto& start : arcs) {
    if (!unused.count(start)) continue;
    std::vector<std::pair<int, int>> face;
    auto cur = start;
    do {
      require(unused.erase(cur) == 1, Err::InvalidRotation, "face trace revisited an arc");
      face.push_back(cur);
      cur = next_arc(cur);
    } while (cur != start);
    out.faces.push_back(std::move(face));
  }

  const int v = g.num_vertices;
  const int e = int(g.edges.size());
  const int f = int(out.faces.size());
  int euler = v - e + f;
  require((2 - euler) % 2 == 0 && euler <= 2, Err::InternalInconsistency,
          "Euler characteristic " + std::to_string(euler) + " is not of the form 2 - 2g");
  out.genus = (2 - euler) / 2;
  return out;
}

IncidenceBundle vertex_face_walk_input(const EmbeddedGraph& e) {
  auto arcs = arcs_of(e.graph);
  const int na = int(arcs.size());
  const int nv = e.graph.num_vertices;
  const int nf = int(e.faces.size());

  std::vector<std::vector<int>> face_cells(nf), tail_cells(nv);
  for (int i = 0; i < na; ++i) {
    face_cells[e.face_of_arc(arcs[i].first, arcs[i].second)].push_back(i);
    tail_cells[arcs[i].first].push_back(i);
  }
  std::vector<int> face_labels(nf), tail_labels(nv);
  for (int f = 0; f < nf; ++f) face_labels[f] = f;
  for (int v = 0; v < nv; ++v) tail_labels[v] = v;
  return bundle_from_cells(na, std::move(face_cells), std::move(face_labels),
                           std::move(tail_cells), std::move(tail_labels));
}

}  // namespace biwalk
