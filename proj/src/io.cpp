#include "biwalk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "biwalk/errors.hpp"

namespace biwalk {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  require(ec == std::errc(), Err::InternalInconsistency, "number formatting failed");
  return std::string(buf, ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Err::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Err::Parse, "cannot write " + path);
  out << content;
  require(out.good(), Err::Parse, "write to " + path + " failed");
}

BipartiteGraph read_graph_json(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<int> a = doc.at("partA").get<std::vector<int>>();
    std::vector<int> b = doc.at("partB").get<std::vector<int>>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges")) {
      require(e.is_array() && e.size() == 2, Err::Parse, "each edge must be a pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return from_edge_list(std::move(a), std::move(b), std::move(edges));
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("graph JSON shape: ") + e.what());
  }
}

std::string graph_json(const BipartiteGraph& g) {
  ordered_json doc;
  doc["partA"] = g.part_a;
  doc["partB"] = g.part_b;
  auto edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  doc["edges"] = edges;
  return doc.dump() + "\n";
}

BipartiteGraph read_edge_list_text(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::pair<int, int>> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;  // blank
    require(bool(ls >> v), Err::Parse, "line " + std::to_string(lineno) + ": expected two labels");
    long long extra;
    require(!(ls >> extra), Err::Parse, "line " + std::to_string(lineno) + ": trailing tokens");
    require(u >= 0 && v >= 0 && u <= 1'000'000 && v <= 1'000'000, Err::Parse,
            "line " + std::to_string(lineno) + ": label out of range");
    raw.push_back({int(u), int(v)});
  }
  require(!raw.empty(), Err::Parse, "no edges found");

  // 2-color; the smallest label of every component lands in partA
  std::map<int, std::vector<int>> adj;
  for (auto [u, v] : raw) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::map<int, int> color;
  for (auto it = adj.begin(); it != adj.end(); ++it) {
    int start = it->first;  // ascending, so first unseen is the component minimum
    if (color.count(start)) continue;
    color[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!color.count(v)) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else {
          require(color[v] != color[u], Err::NotBipartite,
                  "odd cycle through vertices " + std::to_string(u) + " and " + std::to_string(v));
        }
      }
    }
  }
  std::vector<int> part_a, part_b;
  for (auto [v, c] : color) (c == 0 ? part_a : part_b).push_back(v);
  return from_edge_list(std::move(part_a), std::move(part_b), std::move(raw));
}

std::string matrix_csv(const RealMatrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

RealMatrix read_matrix_csv(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    size_t pos = 0;
    while (pos <= line.size()) {
      size_t comma = line.find(',', pos);
      std::string cell = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      double v = 0;
      auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      require(ec == std::errc() && p == cell.data() + cell.size(), Err::Parse,
              "bad CSV cell '" + cell + "'");
      row.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), Err::Parse, "empty CSV");
  RealMatrix m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == rows[0].size(), Err::Parse, "ragged CSV");
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  }
  return m;
}

namespace {

json matrix_rows(const RealMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string spectral_json(const SpectralDecomposition& s) {
  ordered_json doc = ordered_json::array();
  for (const auto& c : s.components) {
    ordered_json entry;
    entry["theta"] = c.theta;
    entry["projector_real"] = matrix_rows(c.projector.real_part());
    entry["projector_imag"] = matrix_rows(c.projector.imag_part());
    doc.push_back(entry);
  }
  return doc.dump() + "\n";
}

std::string hdigraph_dot(const HDigraph& d) {
  std::string out = "digraph hdigraph {\n";
  for (int v = 0; v < d.skew.rows(); ++v) out += "  s" + std::to_string(v) + ";\n";
  for (const auto& a : d.arcs) {
    char buf[64];
    snprintf(buf, sizeof(buf), "%.6g", a.weight);
    out += "  s" + std::to_string(a.from) + " -> s" + std::to_string(a.to) +
           " [label=\"" + buf + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string hdigraph_json(const HDigraph& d) {
  ordered_json doc;
  doc["states"] = d.skew.rows();
  doc["threshold"] = d.threshold;
  ordered_json arcs = ordered_json::array();
  for (const auto& a : d.arcs) {
    ordered_json arc;
    arc["from"] = a.from;
    arc["to"] = a.to;
    arc["weight"] = a.weight;
    arcs.push_back(arc);
  }
  doc["arcs"] = arcs;
  doc["components"] = d.components;
  return doc.dump() + "\n";
}

RotationSystem read_rotation_json(const std::string& path, SimpleGraph& graph_out) {
  json doc;
  try {
    doc = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    fail(Err::Parse, std::string("invalid JSON: ") + e.what());
  }
  require(doc.contains("rotations") && doc["rotations"].is_object(), Err::Parse,
          "expected a top-level \"rotations\" object");
  std::map<int, std::vector<int>> rot;
  for (auto& [key, value] : doc["rotations"].items()) {
    int v = 0;
    auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    require(ec == std::errc() && p == key.data() + key.size() && v >= 0, Err::Parse,
            "vertex key '" + key + "' is not a label");
    require(value.is_array(), Err::Parse, "rotation at " + key + " must be a list");
    rot[v] = value.get<std::vector<int>>();
  }
  require(!rot.empty(), Err::Parse, "no rotations given");
  int n = rot.rbegin()->first + 1;
  require(int(rot.size()) == n, Err::Parse, "vertex labels must be 0..n-1");

  std::set<std::pair<int, int>> edge_set;
  for (auto& [v, nbrs] : rot)
    for (int u : nbrs) {
      require(rot.count(u), Err::Parse, "neighbor " + std::to_string(u) + " has no rotation");
      edge_set.insert({std::min(u, v), std::max(u, v)});
    }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  graph_out = SimpleGraph::from_edges(n, edges);

  RotationSystem out;
  out.order.resize(n);
  for (auto& [v, nbrs] : rot) out.order[v] = nbrs;
  return out;
}

std::string faces_json(const EmbeddedGraph& e) {
  ordered_json doc;
  doc["vertices"] = e.graph.num_vertices;
  doc["edges"] = int(e.graph.edges.size());
  doc["genus"] = e.genus;
  ordered_json faces = ordered_json::array();
  for (const auto& face : e.faces) {
    ordered_json arcs = ordered_json::array();
    for (auto [a, b] : face) arcs.push_back({a, b});
    faces.push_back(arcs);
  }
  doc["faces"] = faces;
  return doc.dump() + "\n";
}

std::string scan_jsonl(const PstScanReport& r) {
  std::string out;
  for (const auto& e : r.events) {
    ordered_json line;
    line["source"] = e.source;
    line["target"] = e.target;
    line["k"] = e.step;
    line["fidelity"] = e.fidelity;
    out += line.dump() + "\n";
  }
  return out;
}

std::string schedule_csv(const UpstSchedule& s) {
  std::string out = "source,target,k\n";
  for (const auto& e : s.events)
    out += std::to_string(e.source) + "," + std::to_string(e.target) + "," +
           std::to_string(e.step) + "\n";
  return out;
}

}  // namespace biwalk
