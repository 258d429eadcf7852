#include "biwalk/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "biwalk/errors.hpp"

namespace biwalk {

int IncidenceBundle::cell_of_p(int state) const {
  for (int c = 0; c < int(cells_p.size()); ++c)
    if (std::binary_search(cells_p[c].begin(), cells_p[c].end(), state)) return c;
  fail(Err::InternalInconsistency, "state " + std::to_string(state) + " has no P cell");
}

int IncidenceBundle::cell_of_q(int state) const {
  for (int c = 0; c < int(cells_q.size()); ++c)
    if (std::binary_search(cells_q[c].begin(), cells_q[c].end(), state)) return c;
  fail(Err::InternalInconsistency, "state " + std::to_string(state) + " has no Q cell");
}

IntMatrix IncidenceBundle::c_int() const { return to_int_matrix(c); }

RealMatrix IncidenceBundle::bipartite_adjacency() const {
  const int q = c.rows(), p = c.cols();
  RealMatrix a(q + p, q + p);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) {
      a(i, q + j) = c(i, j);
      a(q + j, i) = c(i, j);
    }
  return a;
}

IncidenceBundle bundle_from_cells(int num_states,
                                  std::vector<std::vector<int>> cells_p,
                                  std::vector<int> cell_label_p,
                                  std::vector<std::vector<int>> cells_q,
                                  std::vector<int> cell_label_q) {
  require(num_states >= 1, Err::BadSize, "need at least one state");
  IncidenceBundle b;
  b.num_states = num_states;
  b.cells_p = std::move(cells_p);
  b.cell_label_p = std::move(cell_label_p);
  b.cells_q = std::move(cells_q);
  b.cell_label_q = std::move(cell_label_q);

  auto check_partition = [&](std::vector<std::vector<int>>& cells, const char* side) {
    std::vector<int> hits(num_states, 0);
    for (auto& cell : cells) {
      require(!cell.empty(), Err::BadSize, std::string("empty cell on side ") + side);
      std::sort(cell.begin(), cell.end());
      for (int s : cell) {
        require(0 <= s && s < num_states, Err::BadLabel, "state index out of range");
        ++hits[s];
      }
    }
    for (int s = 0; s < num_states; ++s)
      require(hits[s] == 1, Err::BadSize,
              "state " + std::to_string(s) + " appears " + std::to_string(hits[s]) +
                  " times on side " + side);
  };
  check_partition(b.cells_p, "P");
  check_partition(b.cells_q, "Q");

  const int p = int(b.cells_p.size());
  const int q = int(b.cells_q.size());
  b.p0 = RealMatrix(num_states, p);
  b.p0hat = RealMatrix(num_states, p);
  for (int c = 0; c < p; ++c) {
    double inv = 1.0 / std::sqrt(double(b.cells_p[c].size()));
    for (int s : b.cells_p[c]) {
      b.p0(s, c) = 1.0;
      b.p0hat(s, c) = inv;
    }
  }
  b.p1 = RealMatrix(num_states, q);
  b.p1hat = RealMatrix(num_states, q);
  for (int c = 0; c < q; ++c) {
    double inv = 1.0 / std::sqrt(double(b.cells_q[c].size()));
    for (int s : b.cells_q[c]) {
      b.p1(s, c) = 1.0;
      b.p1hat(s, c) = inv;
    }
  }

  // integer cell intersections; equals P1^T P0 entrywise
  b.c = RealMatrix(q, p);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) {
      int count = 0;
      for (int s : b.cells_q[i])
        if (std::binary_search(b.cells_p[j].begin(), b.cells_p[j].end(), s)) ++count;
      b.c(i, j) = double(count);
    }
  b.chat = b.p1hat.transposed() * b.p0hat;

  // connectivity of the cell incidence structure via union-find over cells
  std::vector<int> parent(p + q);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> pcell(num_states), qcell(num_states);
  for (int c = 0; c < p; ++c)
    for (int s : b.cells_p[c]) pcell[s] = c;
  for (int c = 0; c < q; ++c)
    for (int s : b.cells_q[c]) qcell[s] = c;
  for (int s = 0; s < num_states; ++s) {
    int x = find(pcell[s]), y = find(p + qcell[s]);
    if (x != y) parent[x] = y;
  }
  int root = find(0);
  b.connected = true;
  for (int x = 1; x < p + q; ++x)
    if (find(x) != root) b.connected = false;

  return b;
}

IncidenceBundle incidence_bundle(const BipartiteGraph& g, const EdgePartitionPair& parts) {
  IncidenceBundle b = bundle_from_cells(g.num_edges(), parts.cells_p, parts.cell_vertex_p,
                                        parts.cells_q, parts.cell_vertex_q);
  require(b.connected == g.connected, Err::InternalInconsistency,
          "cell connectivity disagrees with graph connectivity");
  b.graph = g;
  return b;
}

}  // namespace biwalk
