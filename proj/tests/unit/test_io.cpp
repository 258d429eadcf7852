#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>

#include <json.hpp>

#include "biwalk/io.hpp"
#include "test_support.hpp"

using namespace biwalk;
using biwalk::test::err_of;

namespace {

// Writes content to a fresh file under the system temp dir; removed on scope exit.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("biwalk_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".tmp");
    write_text_file(path.string(), content);
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

BipartiteGraph worked_tree() {
  return from_edge_list({0, 2, 4, 6}, {1, 3, 5, 7},
                        {{0, 1}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {5, 6}, {6, 7}});
}

}  // namespace

TEST_SUITE("number formatting") {
  TEST_CASE("shortest round-trip decimals") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-1.5) == "-1.5");
    CHECK(format_double(0.1) == "0.1");
    for (double x : {1.0 / 3.0, -2.0 / 3.0, 1e-17, 12345.6789, 6.02e23}) {
      CHECK(std::stod(format_double(x)) == x);
    }
  }
}

TEST_SUITE("graph files") {
  TEST_CASE("json round trip preserves parts and edges") {
    auto g = worked_tree();
    std::string text = graph_json(g);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"partA\"") < text.find("\"partB\""));
    CHECK(text.find("\"partB\"") < text.find("\"edges\""));

    TempFile f(text);
    auto back = read_graph_json(f.str());
    CHECK(back.part_a == g.part_a);
    CHECK(back.part_b == g.part_b);
    CHECK(back.edges == g.edges);
    CHECK(graph_json(back) == text);
  }

  TEST_CASE("json parse failures") {
    TempFile broken("{\"partA\": [0],");
    CHECK(err_of([&] { read_graph_json(broken.str()); }) == Err::Parse);
    TempFile missing("{\"partA\": [0], \"partB\": [1]}");
    CHECK(err_of([&] { read_graph_json(missing.str()); }) == Err::Parse);
    TempFile triple("{\"partA\": [0], \"partB\": [1], \"edges\": [[0, 1, 2]]}");
    CHECK(err_of([&] { read_graph_json(triple.str()); }) == Err::Parse);
    CHECK(err_of([] { read_graph_json("/nonexistent/biwalk.json"); }) == Err::Parse);
  }

  TEST_CASE("edge list text with comments and blank lines") {
    TempFile f("# a small tree\n0 1\n2 1\n\n2 3 # leaf\n");
    auto g = read_edge_list_text(f.str());
    CHECK(g.part_a == std::vector<int>({0, 2}));
    CHECK(g.part_b == std::vector<int>({1, 3}));
    CHECK(g.edges == std::vector<std::pair<int, int>>({{0, 1}, {2, 1}, {2, 3}}));
  }

  TEST_CASE("every component anchors its smallest label in the first part") {
    TempFile f("5 4\n0 1\n");
    auto g = read_edge_list_text(f.str());
    CHECK(g.part_a == std::vector<int>({0, 4}));
    CHECK(g.part_b == std::vector<int>({1, 5}));
    CHECK_FALSE(g.connected);
  }

  TEST_CASE("edge list failures") {
    TempFile odd("0 1\n1 2\n0 2\n");
    CHECK(err_of([&] { read_edge_list_text(odd.str()); }) == Err::NotBipartite);
    TempFile trailing("0 1 2\n");
    CHECK(err_of([&] { read_edge_list_text(trailing.str()); }) == Err::Parse);
    TempFile lonely("7\n");
    CHECK(err_of([&] { read_edge_list_text(lonely.str()); }) == Err::Parse);
    TempFile huge("0 2000000\n");
    CHECK(err_of([&] { read_edge_list_text(huge.str()); }) == Err::Parse);
    TempFile empty("# nothing here\n");
    CHECK(err_of([&] { read_edge_list_text(empty.str()); }) == Err::Parse);
  }
}

TEST_SUITE("matrix files") {
  TEST_CASE("csv round trip is bit exact") {
    RealMatrix m(3, 4);
    double values[] = {1.0 / 3.0, -2.0 / 7.0, 0.0,     -0.0,   1e-300, 12345.6789,
                       -1e18,     0.5,        2.0 / 3., 1e-17,  -42.0,  9.99};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = values[i * 4 + j];

    std::string text = matrix_csv(m);
    TempFile f(text);
    auto back = read_matrix_csv(f.str());
    REQUIRE(back.rows() == 3);
    REQUIRE(back.cols() == 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) CHECK(back(i, j) == m(i, j));
    CHECK(matrix_csv(back) == text);
  }

  TEST_CASE("csv failures") {
    TempFile ragged("1,2\n3\n");
    CHECK(err_of([&] { read_matrix_csv(ragged.str()); }) == Err::Parse);
    TempFile alpha("1,x\n");
    CHECK(err_of([&] { read_matrix_csv(alpha.str()); }) == Err::Parse);
    TempFile empty("");
    CHECK(err_of([&] { read_matrix_csv(empty.str()); }) == Err::Parse);
  }
}

TEST_SUITE("spectrum and digraph exports") {
  TEST_CASE("spectral json lists components in angle order") {
    auto w = build_walk(worked_tree(), Part::B);
    auto s = spectral_decomposition(w);
    auto doc = nlohmann::json::parse(spectral_json(s));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == s.components.size());
    for (size_t i = 0; i < doc.size(); ++i) {
      CHECK(doc[i]["theta"].get<double>() == s.components[i].theta);
      auto re = doc[i]["projector_real"];
      REQUIRE(int(re.size()) == w.bundle.num_states);
      CHECK(re[0][0].get<double>() == s.components[i].projector(0, 0).real());
      CHECK(doc[i]["projector_imag"].size() == re.size());
    }
    for (size_t i = 1; i < doc.size(); ++i)
      CHECK(doc[i - 1]["theta"].get<double>() < doc[i]["theta"].get<double>());
  }

  TEST_CASE("dot export writes every state and labeled arc") {
    HDigraph d;
    d.skew = RealMatrix(2, 2);
    d.skew(0, 1) = 0.5;
    d.skew(1, 0) = -0.5;
    d.arcs = {{0, 1, 0.5}};
    d.components = {{0, 1}};
    d.threshold = 1e-8;
    CHECK(hdigraph_dot(d) ==
          "digraph hdigraph {\n  s0;\n  s1;\n  s0 -> s1 [label=\"0.5\"];\n}\n");

    auto doc = nlohmann::json::parse(hdigraph_json(d));
    CHECK(doc["states"] == 2);
    CHECK(doc["threshold"].get<double>() == 1e-8);
    REQUIRE(doc["arcs"].size() == 1);
    CHECK(doc["arcs"][0]["from"] == 0);
    CHECK(doc["arcs"][0]["to"] == 1);
    CHECK(doc["arcs"][0]["weight"].get<double>() == 0.5);
    CHECK(doc["components"] == nlohmann::json::parse("[[0, 1]]"));
  }
}

TEST_SUITE("embedding files") {
  TEST_CASE("rotation json rebuilds the graph and the cyclic orders") {
    TempFile f(R"({"rotations": {"0": [1, 2, 3], "1": [0, 3, 2], "2": [3, 0, 1], "3": [2, 1, 0]}})");
    SimpleGraph g;
    auto rot = read_rotation_json(f.str(), g);
    CHECK(g.num_vertices == 4);
    CHECK(g.edges.size() == 6);
    REQUIRE(rot.order.size() == 4);
    CHECK(rot.order[0] == std::vector<int>({1, 2, 3}));
    CHECK(rot.order[2] == std::vector<int>({3, 0, 1}));

    auto e = trace_faces(g, rot);
    auto doc = nlohmann::json::parse(faces_json(e));
    CHECK(doc["vertices"] == 4);
    CHECK(doc["edges"] == 6);
    CHECK(doc["genus"] == 0);
    REQUIRE(doc["faces"].size() == 4);
    CHECK(doc["faces"][0] == nlohmann::json::parse("[[0, 1], [1, 2], [2, 0]]"));
  }

  TEST_CASE("rotation json failures") {
    SimpleGraph g;
    TempFile nokey(R"({"faces": []})");
    CHECK(err_of([&] { read_rotation_json(nokey.str(), g); }) == Err::Parse);
    TempFile badkey(R"({"rotations": {"x": [1]}})");
    CHECK(err_of([&] { read_rotation_json(badkey.str(), g); }) == Err::Parse);
    TempFile gap(R"({"rotations": {"0": [2], "2": [0]}})");
    CHECK(err_of([&] { read_rotation_json(gap.str(), g); }) == Err::Parse);
    TempFile stranger(R"({"rotations": {"0": [1], "1": [0, 5]}})");
    CHECK(err_of([&] { read_rotation_json(stranger.str(), g); }) == Err::Parse);
  }
}

TEST_SUITE("scan exports") {
  TEST_CASE("scan events serialize one json object per line") {
    auto w = build_walk(worked_tree(), Part::B);
    auto scan = discrete_pst_scan(w, 2, 1e-6, PowerMode::Eigen);
    std::string text = scan_jsonl(scan);
    size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == scan.events.size());

    std::istringstream in(text);
    std::string line;
    size_t i = 0;
    while (std::getline(in, line)) {
      auto doc = nlohmann::json::parse(line);
      CHECK(doc["source"] == scan.events[i].source);
      CHECK(doc["target"] == scan.events[i].target);
      CHECK(doc["k"] == scan.events[i].step);
      CHECK(doc["fidelity"].get<double>() == scan.events[i].fidelity);
      ++i;
    }
    CHECK(i == scan.events.size());
  }

  TEST_CASE("schedule csv for the smallest universal graph") {
    auto sched = upst_verify(upst_generate(4));
    CHECK(schedule_csv(sched) ==
          "source,target,k\n"
          "0,2,1\n1,0,1\n2,1,1\n"
          "0,1,2\n1,2,2\n2,0,2\n");
  }
}
