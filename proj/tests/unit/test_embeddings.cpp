#include <doctest.h>

#include <algorithm>
#include <set>

#include "biwalk/embedding.hpp"
#include "biwalk/gf.hpp"
#include "test_support.hpp"

using namespace biwalk;
using biwalk::test::err_of;

using Face = std::vector<std::pair<int, int>>;

TEST_SUITE("finite fields") {
  TEST_CASE("primality and prime power detection") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK(prime_power(8) == std::pair(2, 3));
    CHECK(prime_power(9) == std::pair(3, 2));
    CHECK(prime_power(13) == std::pair(13, 1));
    CHECK(prime_power(12) == std::nullopt);
    CHECK(prime_power(1) == std::nullopt);
  }

  TEST_CASE("field axioms hold over every element") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
      auto f = FiniteField::of_order(q);
      REQUIRE(f.order() == q);
      for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (int b = 0; b < q; ++b) {
          CHECK(f.add(a, b) == f.add(b, a));
          CHECK(f.mul(a, b) == f.mul(b, a));
          for (int c = 0; c < q; ++c) {
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          }
        }
      }
    }
  }

  TEST_CASE("the generator sweeps the nonzero elements") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
      auto f = FiniteField::of_order(q);
      std::set<int> seen;
      int x = 1;
      for (int e = 0; e < q - 1; ++e) {
        seen.insert(x);
        x = f.mul(x, f.generator());
      }
      CHECK(x == 1);
      CHECK(int(seen.size()) == q - 1);
    }
  }

  TEST_CASE("canonical choices for small orders") {
    CHECK(FiniteField::of_order(2).generator() == 1);
    auto f4 = FiniteField::of_order(4);
    CHECK(f4.generator() == 2);
    CHECK(f4.irreducible() == std::vector<int>({1, 1, 1}));
    CHECK(f4.add(2, 3) == 1);  // addition is xor in characteristic 2
    CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1
    CHECK(FiniteField::of_order(5).generator() == 2);
    CHECK(FiniteField::of_order(7).generator() == 3);
  }

  TEST_CASE("rejects non prime powers") {
    CHECK(err_of([] { FiniteField::of_order(6); }) == Err::NotPrimePower);
    CHECK(err_of([] { FiniteField::of_order(1); }) == Err::NotPrimePower);
  }
}

TEST_SUITE("rotation systems") {
  TEST_CASE("field rotations for four vertices") {
    auto rot = kn_rotation_system(4);
    REQUIRE(rot.order.size() == 4);
    CHECK(rot.order[0] == std::vector<int>({1, 2, 3}));
    CHECK(rot.order[1] == std::vector<int>({0, 3, 2}));
    CHECK(rot.order[2] == std::vector<int>({3, 0, 1}));
    CHECK(rot.order[3] == std::vector<int>({2, 1, 0}));
  }

  TEST_CASE("rotations exist exactly at prime power sizes") {
    for (int n : {3, 4, 5, 7, 8, 9}) CHECK(int(kn_rotation_system(n).order.size()) == n);
    CHECK(err_of([] { kn_rotation_system(6); }) == Err::NotPrimePower);
    CHECK(err_of([] { kn_rotation_system(2); }) == Err::BadSize);
  }
}

TEST_SUITE("face tracing") {
  TEST_CASE("complete graph on four vertices is planar with four triangles") {
    auto emb = trace_faces(SimpleGraph::complete(4), kn_rotation_system(4));
    CHECK(emb.genus == 0);
    REQUIRE(emb.faces.size() == 4);
    CHECK(emb.faces[0] == Face({{0, 1}, {1, 2}, {2, 0}}));
    CHECK(emb.faces[1] == Face({{0, 2}, {2, 3}, {3, 0}}));
    CHECK(emb.faces[2] == Face({{0, 3}, {3, 1}, {1, 0}}));
    CHECK(emb.faces[3] == Face({{1, 3}, {3, 2}, {2, 1}}));
    CHECK(emb.missed_vertex(0) == 3);
    CHECK(emb.missed_vertex(1) == 1);
    CHECK(emb.missed_vertex(2) == 2);
    CHECK(emb.missed_vertex(3) == 0);

    // every arc lies on exactly one face, and face_of_arc agrees
    std::set<std::pair<int, int>> seen;
    for (size_t fi = 0; fi < emb.faces.size(); ++fi)
      for (auto [a, b] : emb.faces[fi]) {
        CHECK(seen.insert({a, b}).second);
        CHECK(emb.face_of_arc(a, b) == int(fi));
      }
    CHECK(seen.size() == 12);
  }

  TEST_CASE("complete graph on five vertices lives on the torus") {
    auto emb = trace_faces(SimpleGraph::complete(5), kn_rotation_system(5));
    CHECK(emb.genus == 1);
    REQUIRE(emb.faces.size() == 5);
    std::set<int> missed;
    for (int f = 0; f < 5; ++f) {
      CHECK(emb.faces[f].size() == 4);
      auto mv = emb.missed_vertex(f);
      REQUIRE(mv.has_value());
      missed.insert(*mv);
    }
    CHECK(missed == std::set<int>({0, 1, 2, 3, 4}));
  }

  TEST_CASE("complete graph on seven vertices gives fourteen triangles") {
    auto emb = trace_faces(SimpleGraph::complete(7), kn_rotation_system(7));
    CHECK(emb.genus == 1);
    REQUIRE(emb.faces.size() == 14);
    for (auto& f : emb.faces) CHECK(f.size() == 3);
  }

  TEST_CASE("any primitive element yields the same face census") {
    auto canonical = trace_faces(SimpleGraph::complete(5), kn_rotation_system(5));
    // 3 also generates the multiplicative group mod 5: powers 1, 3, 4, 2
    RotationSystem alt;
    alt.order.resize(5);
    for (int u = 0; u < 5; ++u)
      for (int x : {1, 3, 4, 2}) alt.order[u].push_back((u + x) % 5);
    auto other = trace_faces(SimpleGraph::complete(5), alt);
    CHECK(other.genus == canonical.genus);
    CHECK(other.faces.size() == canonical.faces.size());
    std::multiset<size_t> lens_a, lens_b;
    for (auto& f : canonical.faces) lens_a.insert(f.size());
    for (auto& f : other.faces) lens_b.insert(f.size());
    CHECK(lens_a == lens_b);
  }

  TEST_CASE("a plain cycle bounds two square faces") {
    auto c4 = SimpleGraph::cycle(4);
    RotationSystem rot;
    rot.order.resize(4);
    auto adj = c4.adjacency_lists();
    for (int v = 0; v < 4; ++v) rot.order[v] = adj[v];
    auto emb = trace_faces(c4, rot);
    CHECK(emb.genus == 0);
    REQUIRE(emb.faces.size() == 2);
    CHECK(emb.faces[0].size() == 4);
    CHECK(emb.faces[1].size() == 4);
    CHECK_FALSE(emb.missed_vertex(0).has_value());
  }

  TEST_CASE("rejects rotations that do not match the neighbor sets") {
    auto k4 = SimpleGraph::complete(4);
    RotationSystem bad;
    bad.order = {{1, 2, 2}, {0, 3, 2}, {3, 0, 1}, {2, 1, 0}};
    CHECK(err_of([&] { trace_faces(k4, bad); }) == Err::InvalidRotation);
    bad.order = {{1, 2}, {0, 3, 2}, {3, 0, 1}, {2, 1, 0}};
    CHECK(err_of([&] { trace_faces(k4, bad); }) == Err::InvalidRotation);
  }

  TEST_CASE("rejects disconnected graphs") {
    auto g = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    RotationSystem rot;
    rot.order.resize(6);
    auto adj = g.adjacency_lists();
    for (int v = 0; v < 6; ++v) rot.order[v] = adj[v];
    CHECK(err_of([&] { trace_faces(g, rot); }) == Err::Disconnected);
  }
}

TEST_SUITE("vertex-face walk input") {
  TEST_CASE("arcs enumerate in sorted order") {
    auto arcs = arcs_of(SimpleGraph::complete(3));
    CHECK(arcs == std::vector<std::pair<int, int>>(
                      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}));
  }

  TEST_CASE("states are arcs, cells follow faces and tails") {
    auto emb = trace_faces(SimpleGraph::complete(4), kn_rotation_system(4));
    auto b = vertex_face_walk_input(emb);
    REQUIRE(b.num_states == 12);
    REQUIRE(b.cells_p.size() == 4);  // one per face
    REQUIRE(b.cells_q.size() == 4);  // one per tail vertex
    for (auto& cell : b.cells_p) CHECK(cell.size() == 3);
    for (auto& cell : b.cells_q) CHECK(cell.size() == 3);
    CHECK(b.connected);

    auto arcs = arcs_of(emb.graph);
    for (int c = 0; c < 4; ++c)
      for (int s : b.cells_p[c]) CHECK(emb.face_of_arc(arcs[s].first, arcs[s].second) == c);
    for (int c = 0; c < 4; ++c)
      for (int s : b.cells_q[c]) CHECK(arcs[s].first == b.cell_label_q[c]);

    // vertex i touches face j unless i is the missed vertex of j
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(b.c(i, j) == (emb.missed_vertex(j) == i ? 0.0 : 1.0));
  }
}
