#include "biwalk/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "biwalk/errors.hpp"

namespace biwalk {

SimpleGraph SimpleGraph::from_edges(int num_vertices, std::vector<std::pair<int, int>> edges) {
  require(num_vertices >= 1, Err::BadSize, "graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    require(u != v, Err::DuplicateEdge, "loop at vertex " + std::to_string(u));
    require(0 <= u && u < num_vertices && 0 <= v && v < num_vertices, Err::BadLabel,
            "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    require(edges[i] != edges[i - 1], Err::DuplicateEdge,
            "repeated edge (" + std::to_string(edges[i].first) + ", " +
                std::to_string(edges[i].second) + ")");
  SimpleGraph g;
  g.num_vertices = num_vertices;
  g.edges = std::move(edges);
  return g;
}

SimpleGraph SimpleGraph::complete(int n) {
  require(n >= 2, Err::BadSize, "complete graph needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return from_edges(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int n) {
  require(n >= 2, Err::BadSize, "path needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  return from_edges(n, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int n) {
  require(n >= 3, Err::BadSize, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  e.push_back({0, n - 1});
  return from_edges(n, std::move(e));
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(num_vertices, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> SimpleGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool SimpleGraph::connected() const {
  if (num_vertices == 0) return false;
  auto adj = adjacency_lists();
  std::vector<char> seen(num_vertices, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == num_vertices;
}

int BipartiteGraph::degree(int vertex) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a == vertex || b == vertex) ++d;
  return d;
}

bool BipartiteGraph::in_part_a(int vertex) const {
  return std::binary_search(part_a.begin(), part_a.end(), vertex);
}

std::optional<std::pair<int, int>> BipartiteGraph::biregular() const {
  if (part_a.empty() || part_b.empty()) return std::nullopt;
  std::map<int, int> deg;
  for (auto [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  int da = deg[part_a[0]], db = deg[part_b[0]];
  for (int v : part_a)
    if (deg[v] != da) return std::nullopt;
  for (int v : part_b)
    if (deg[v] != db) return std::nullopt;
  return std::make_pair(da, db);
}

namespace {

bool bipartite_connected(const BipartiteGraph& g) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (adj.empty()) return false;
  std::set<int> seen;
  std::vector<int> stack = {adj.begin()->first};
  seen.insert(stack[0]);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (seen.insert(v).second) stack.push_back(v);
  }
  return int(seen.size()) == g.num_vertices();
}

void canonical_sort(std::vector<std::pair<int, int>>& edges) {
  std::sort(edges.begin(), edges.end(), [](auto x, auto y) {
    auto key = [](std::pair<int, int> e) {
      return std::make_pair(std::min(e.first, e.second), std::max(e.first, e.second));
    };
    return key(x) < key(y);
  });
}

}  // namespace

BipartiteGraph from_edge_list(std::vector<int> part_a, std::vector<int> part_b,
                              std::vector<std::pair<int, int>> edges) {
  std::sort(part_a.begin(), part_a.end());
  std::sort(part_b.begin(), part_b.end());
  require(std::adjacent_find(part_a.begin(), part_a.end()) == part_a.end() &&
              std::adjacent_find(part_b.begin(), part_b.end()) == part_b.end(),
          Err::BadLabel, "repeated vertex label inside a part");
  std::vector<int> common;
  std::set_intersection(part_a.begin(), part_a.end(), part_b.begin(), part_b.end(),
                        std::back_inserter(common));
  require(common.empty(), Err::NotBipartite, "parts share a vertex label");
  require(!part_a.empty() && !part_b.empty(), Err::BadSize, "both parts must be non-empty");

  auto in = [](const std::vector<int>& part, int v) {
    return std::binary_search(part.begin(), part.end(), v);
  };
  for (auto& [x, y] : edges) {
    if (in(part_a, x) && in(part_b, y)) continue;
    if (in(part_b, x) && in(part_a, y)) {
      std::swap(x, y);
      continue;
    }
    require(in(part_a, x) || in(part_b, x), Err::BadLabel,
            "edge endpoint " + std::to_string(x) + " is not a declared vertex");
    require(in(part_a, y) || in(part_b, y), Err::BadLabel,
            "edge endpoint " + std::to_string(y) + " is not a declared vertex");
    fail(Err::NotBipartite, "edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") joins two vertices of the same part");
  }
  canonical_sort(edges);
  for (size_t i = 1; i < edges.size(); ++i)
    require(edges[i] != edges[i - 1], Err::DuplicateEdge,
            "repeated edge (" + std::to_string(edges[i].first) + ", " +
                std::to_string(edges[i].second) + ")");

  std::set<int> touched;
  for (auto [a, b] : edges) {
    touched.insert(a);
    touched.insert(b);
  }
  for (int v : part_a)
    require(touched.count(v), Err::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
  for (int v : part_b)
    require(touched.count(v), Err::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");

  BipartiteGraph g;
  g.part_a = std::move(part_a);
  g.part_b = std::move(part_b);
  g.edges = std::move(edges);
  g.connected = bipartite_connected(g);
  return g;
}

BipartiteGraph path_graph(int n) {
  require(n >= 2, Err::BadSize, "path graph needs n >= 2");
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (v % 2 == 0 ? a : b).push_back(v);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  BipartiteGraph g = from_edge_list(a, b, e);
  g.name = "path:" + std::to_string(n);
  return g;
}

BipartiteGraph cycle_graph(int n) {
  require(n >= 4 && n % 2 == 0, Err::BadSize, "cycle graph needs even n >= 4");
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) (v % 2 == 0 ? a : b).push_back(v);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  e.push_back({0, n - 1});  // wrap edge is e_{n-1}, after the path edges
  BipartiteGraph g = from_edge_list(a, b, e);
  // from_edge_list sorts canonically, which would move the wrap edge to
  // second position; restore the family order
  g.edges.clear();
  for (int v = 0; v + 1 < n; ++v)
    g.edges.push_back(v % 2 == 0 ? std::make_pair(v, v + 1) : std::make_pair(v + 1, v));
  g.edges.push_back({0, n - 1});
  g.family_order = true;
  g.name = "cycle:" + std::to_string(n);
  return g;
}

BipartiteGraph crown_graph(int n) {
  require(n >= 3, Err::BadSize, "crown graph needs n >= 3");
  std::vector<int> a, b;
  for (int v = 0; v < n; ++v) a.push_back(v);
  for (int v = 0; v < n; ++v) b.push_back(n + v);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.push_back({i, n + j});
  BipartiteGraph g = from_edge_list(a, b, e);
  g.name = "crown:" + std::to_string(n);
  return g;
}

Subdivision subdivision(const SimpleGraph& g) {
  require(!g.edges.empty(), Err::BadSize, "subdivision needs at least one edge");
  const int n = g.num_vertices;
  const int m = int(g.edges.size());
  std::vector<int> part_a, part_b;
  for (int j = 0; j < m; ++j) part_a.push_back(n + j);  // one new vertex per edge
  for (int v = 0; v < n; ++v) part_b.push_back(v);
  auto deg = g.degrees();
  for (int v = 0; v < n; ++v)
    require(deg[v] > 0, Err::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");

  std::vector<std::pair<int, int>> e;
  for (int j = 0; j < m; ++j) {
    e.push_back({n + j, g.edges[j].first});
    e.push_back({n + j, g.edges[j].second});
  }
  Subdivision out;
  out.graph = from_edge_list(part_a, part_b, e);
  out.graph.name = "subdivision";
  out.arc_for_edge.resize(out.graph.edges.size());
  for (size_t i = 0; i < out.graph.edges.size(); ++i) {
    auto [mid, orig] = out.graph.edges[i];
    int j = mid - n;
    int other = g.edges[j].first == orig ? g.edges[j].second : g.edges[j].first;
    out.arc_for_edge[i] = {orig, other};
  }
  return out;
}

EdgePartitionPair build_partitions(const BipartiteGraph& g, Part designated) {
  const std::vector<int>& dpart = designated == Part::A ? g.part_a : g.part_b;
  const std::vector<int>& opart = designated == Part::A ? g.part_b : g.part_a;

  EdgePartitionPair out;
  out.designated = designated;
  auto collect = [&](const std::vector<int>& part, std::vector<std::vector<int>>& cells,
                     std::vector<int>& labels) {
    for (int v : part) {
      std::vector<int> cell;
      for (int e = 0; e < g.num_edges(); ++e)
        if (g.edges[e].first == v || g.edges[e].second == v) cell.push_back(e);
      cells.push_back(std::move(cell));
      labels.push_back(v);
    }
  };
  collect(dpart, out.cells_p, out.cell_vertex_p);
  collect(opart, out.cells_q, out.cell_vertex_q);
  return out;
}

}  // namespace biwalk
