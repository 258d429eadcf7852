#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "biwalk/bundle.hpp"
#include "biwalk/graph.hpp"
#include "test_support.hpp"

using namespace biwalk;
using biwalk::test::err_of;

namespace {

// The eight-vertex tree used as the running worked example: evens on one
// side, odds on the other.
BipartiteGraph worked_tree() {
  return from_edge_list({0, 2, 4, 6}, {1, 3, 5, 7},
                        {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {5, 6}, {6, 7}});
}

}  // namespace

TEST_SUITE("simple graphs") {
  TEST_CASE("families have the expected shape") {
    auto k4 = SimpleGraph::complete(4);
    CHECK(k4.num_vertices == 4);
    CHECK(k4.edges.size() == 6);
    CHECK(k4.degrees() == std::vector<int>({3, 3, 3, 3}));
    CHECK(k4.connected());

    auto p5 = SimpleGraph::path(5);
    CHECK(p5.edges.size() == 4);
    CHECK(p5.degrees() == std::vector<int>({1, 2, 2, 2, 1}));

    auto c5 = SimpleGraph::cycle(5);
    CHECK(c5.edges.size() == 5);
    CHECK(c5.degrees() == std::vector<int>({2, 2, 2, 2, 2}));
  }

  TEST_CASE("edges normalize to (low, high) and sort") {
    auto g = SimpleGraph::from_edges(4, {{3, 1}, {2, 0}, {1, 0}});
    CHECK(g.edges == std::vector<std::pair<int, int>>({{0, 1}, {0, 2}, {1, 3}}));
    CHECK(g.connected());
    auto adj = g.adjacency_lists();
    CHECK(adj[0] == std::vector<int>({1, 2}));
    CHECK(adj[1] == std::vector<int>({0, 3}));

    auto split = SimpleGraph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(split.connected());
  }
}

TEST_SUITE("bipartite construction") {
  TEST_CASE("edge order is canonical regardless of input order") {
    auto g = from_edge_list({0, 2}, {1, 3}, {{2, 3}, {1, 2}, {0, 1}});
    CHECK(g.edges == std::vector<std::pair<int, int>>({{0, 1}, {2, 1}, {2, 3}}));
    CHECK(g.connected);
    CHECK(g.in_part_a(0));
    CHECK_FALSE(g.in_part_a(1));
    CHECK(g.degree(1) == 2);
  }

  TEST_CASE("endpoints normalize to (A, B) order") {
    auto g = from_edge_list({1}, {0, 2}, {{0, 1}, {2, 1}});
    for (auto [a, b] : g.edges) {
      CHECK(g.in_part_a(a));
      CHECK_FALSE(g.in_part_a(b));
    }
    CHECK(g.edges == std::vector<std::pair<int, int>>({{1, 0}, {1, 2}}));
  }

  TEST_CASE("labels may be sparse") {
    auto g = from_edge_list({0, 20}, {9}, {{0, 9}, {20, 9}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>({{0, 9}, {20, 9}}));
    auto parts = build_partitions(g, Part::B);
    CHECK(parts.cell_vertex_p == std::vector<int>{9});
    CHECK(parts.cells_p == std::vector<std::vector<int>>{{0, 1}});
    CHECK(parts.cell_vertex_q == std::vector<int>({0, 20}));
  }

  TEST_CASE("worked tree partitions split by endpoint") {
    auto g = worked_tree();
    REQUIRE(g.num_edges() == 7);
    auto parts = build_partitions(g, Part::B);
    CHECK(parts.cell_vertex_p == std::vector<int>({1, 3, 5, 7}));
    CHECK(parts.cells_p ==
          std::vector<std::vector<int>>({{0, 2, 3}, {4}, {1, 5}, {6}}));
    CHECK(parts.cell_vertex_q == std::vector<int>({0, 2, 4, 6}));
    CHECK(parts.cells_q ==
          std::vector<std::vector<int>>({{0, 1}, {2, 4}, {3}, {5, 6}}));

    auto swapped = build_partitions(g, Part::A);
    CHECK(swapped.cells_p == parts.cells_q);
    CHECK(swapped.cells_q == parts.cells_p);
    CHECK(swapped.cell_vertex_p == parts.cell_vertex_q);
  }

  TEST_CASE("rejects malformed inputs") {
    CHECK(err_of([] { from_edge_list({0}, {0}, {{0, 0}}); }) == Err::NotBipartite);
    CHECK(err_of([] { from_edge_list({0, 1}, {2}, {{0, 1}}); }) == Err::NotBipartite);
    CHECK(err_of([] { from_edge_list({0}, {1}, {{0, 2}}); }) == Err::BadLabel);
    CHECK(err_of([] { from_edge_list({0, 0}, {1}, {{0, 1}}); }) == Err::BadLabel);
    CHECK(err_of([] { from_edge_list({0}, {1}, {{0, 1}, {0, 1}}); }) == Err::DuplicateEdge);
    CHECK(err_of([] { from_edge_list({0, 2}, {1}, {{0, 1}}); }) == Err::IsolatedVertex);
    CHECK(err_of([] { from_edge_list({}, {1}, {}); }) == Err::BadSize);
  }
}

TEST_SUITE("bipartite families") {
  TEST_CASE("paths put evens in part A") {
    auto g = path_graph(6);
    CHECK(g.part_a == std::vector<int>({0, 2, 4}));
    CHECK(g.part_b == std::vector<int>({1, 3, 5}));
    CHECK(g.edges == std::vector<std::pair<int, int>>(
                         {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}}));
    CHECK(g.biregular() == std::nullopt);
    CHECK(err_of([] { path_graph(1); }) == Err::BadSize);
  }

  TEST_CASE("cycles keep the family edge order with the wrap edge last") {
    auto g = cycle_graph(6);
    CHECK(g.family_order);
    CHECK(g.edges == std::vector<std::pair<int, int>>(
                         {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}}));
    auto parts = build_partitions(g, Part::B);
    CHECK(parts.cells_p == std::vector<std::vector<int>>({{0, 1}, {2, 3}, {4, 5}}));
    CHECK(parts.cells_q == std::vector<std::vector<int>>({{0, 5}, {1, 2}, {3, 4}}));
    CHECK(g.biregular() == std::pair(2, 2));
    CHECK(err_of([] { cycle_graph(5); }) == Err::BadSize);
    CHECK(err_of([] { cycle_graph(2); }) == Err::BadSize);
  }

  TEST_CASE("crowns are complete bipartite minus a matching") {
    auto g = crown_graph(4);
    CHECK(g.part_a == std::vector<int>({0, 1, 2, 3}));
    CHECK(g.part_b == std::vector<int>({4, 5, 6, 7}));
    CHECK(g.num_edges() == 12);
    for (auto [a, b] : g.edges) CHECK(a != b - 4);
    CHECK(g.biregular() == std::pair(3, 3));

    auto b = incidence_bundle(g, build_partitions(g, Part::B));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(b.c(i, j) == (i == j ? 0.0 : 1.0));
  }
}

TEST_SUITE("subdivision") {
  TEST_CASE("one midpoint per edge, arcs in canonical order") {
    auto k4 = SimpleGraph::complete(4);
    auto sub = subdivision(k4);
    CHECK(sub.graph.part_a == std::vector<int>({4, 5, 6, 7, 8, 9}));
    CHECK(sub.graph.part_b == std::vector<int>({0, 1, 2, 3}));
    CHECK(sub.graph.num_edges() == 12);
    REQUIRE(sub.arc_for_edge.size() == 12);

    // every arc of the base graph appears exactly once
    std::vector<std::pair<int, int>> arcs = sub.arc_for_edge;
    std::sort(arcs.begin(), arcs.end());
    std::vector<std::pair<int, int>> expect;
    for (auto [u, v] : k4.edges) {
      expect.push_back({u, v});
      expect.push_back({v, u});
    }
    std::sort(expect.begin(), expect.end());
    CHECK(arcs == expect);

    // bipartite edge i joins the midpoint of its base edge to the arc tail
    for (size_t i = 0; i < sub.arc_for_edge.size(); ++i) {
      auto [tail, head] = sub.arc_for_edge[i];
      auto [mid, orig] = sub.graph.edges[i];
      CHECK(orig == tail);
      int base = mid - 4;
      auto [u, v] = k4.edges[base];
      CHECK(((u == tail && v == head) || (v == tail && u == head)));
    }
  }
}

TEST_SUITE("incidence bundles") {
  TEST_CASE("worked tree matrices obey the construction rules") {
    auto g = worked_tree();
    auto b = incidence_bundle(g, build_partitions(g, Part::B));
    REQUIRE(b.num_states == 7);
    REQUIRE(b.p0hat.rows() == 7);
    REQUIRE(b.p0hat.cols() == 4);

    // normalized columns: 1/sqrt(cell size) on the cell's states
    for (int c = 0; c < 4; ++c) {
      double inv = 1.0 / std::sqrt(double(b.cells_p[c].size()));
      for (int s = 0; s < 7; ++s) {
        bool member = std::binary_search(b.cells_p[c].begin(), b.cells_p[c].end(), s);
        CHECK(b.p0hat(s, c) == doctest::Approx(member ? inv : 0.0).epsilon(1e-15));
        CHECK(b.p0(s, c) == (member ? 1.0 : 0.0));
      }
    }
    CHECK(max_abs_diff(b.p0hat.transposed() * b.p0hat, RealMatrix::identity(4)) < 1e-12);
    CHECK(max_abs_diff(b.p1hat.transposed() * b.p1hat, RealMatrix::identity(4)) < 1e-12);

    // integer intersections match the normalized product structure
    CHECK(max_abs_diff(b.c, b.p1.transposed() * b.p0) < 1e-12);
    CHECK(max_abs_diff(b.chat, b.p1hat.transposed() * b.p0hat) < 1e-12);
    auto ci = b.c_int();
    int total = 0;
    for (auto& row : ci)
      for (long long x : row) {
        CHECK((x == 0 || x == 1));
        total += int(x);
      }
    CHECK(total == 7);

    CHECK(b.cell_of_p(0) == 0);
    CHECK(b.cell_of_p(6) == 3);
    CHECK(b.cell_of_q(4) == 1);
    CHECK(b.connected);

    auto adj = b.bipartite_adjacency();
    CHECK(adj.rows() == 8);
    CHECK(max_abs_diff(adj, adj.transposed()) == 0.0);
  }

  TEST_CASE("free-form cells work without a graph") {
    auto b = bundle_from_cells(3, {{0, 1}, {2}}, {0, 1}, {{0, 2}, {1}}, {10, 11});
    CHECK(b.c(0, 0) == 1.0);  // {0,2} meets {0,1} in state 0
    CHECK(b.c(0, 1) == 1.0);
    CHECK(b.c(1, 0) == 1.0);
    CHECK(b.c(1, 1) == 0.0);
    CHECK(b.connected);
    CHECK(!b.graph.has_value());
  }

  TEST_CASE("rejects covers that are not partitions") {
    CHECK(err_of([] { bundle_from_cells(2, {{0}}, {0}, {{0, 1}}, {1}); }) == Err::BadSize);
    CHECK(err_of([] { bundle_from_cells(2, {{0, 1}, {1}}, {0, 1}, {{0, 1}}, {2}); }) ==
          Err::BadSize);
    CHECK(err_of([] { bundle_from_cells(2, {{0, 5}}, {0}, {{0, 1}}, {1}); }) == Err::BadLabel);
    CHECK(err_of([] { bundle_from_cells(0, {}, {}, {}, {}); }) == Err::BadSize);
  }

  TEST_CASE("disconnected cell structure is flagged") {
    auto b = bundle_from_cells(2, {{0}, {1}}, {0, 1}, {{0}, {1}}, {2, 3});
    CHECK_FALSE(b.connected);
  }
}
