#pragma once

#include <string>
#include <vector>

#include "biwalk/embedding.hpp"
#include "biwalk/graph.hpp"
#include "biwalk/hamiltonian.hpp"
#include "biwalk/matrix.hpp"
#include "biwalk/pst.hpp"
#include "biwalk/walk.hpp"

namespace biwalk {

// Shortest round-trip decimal, locale independent (std::to_chars).
std::string format_double(double x);

// --- graphs ---------------------------------------------------------------
// JSON: {"partA": [...], "partB": [...], "edges": [[a, b], ...]}
BipartiteGraph read_graph_json(const std::string& path);
std::string graph_json(const BipartiteGraph& g);

// Plain text, one "a b" pair per line, '#' comments. The graph is 2-colored;
// in every component the smallest label lands in partA. Errors: Parse,
// NotBipartite.
BipartiteGraph read_edge_list_text(const std::string& path);

// --- matrices ---------------------------------------------------------------
std::string matrix_csv(const RealMatrix& m);
RealMatrix read_matrix_csv(const std::string& path);

// --- spectra ----------------------------------------------------------------
// [{"theta": t, "projector_real": [[..]], "projector_imag": [[..]]}, ...]
std::string spectral_json(const SpectralDecomposition& s);

// --- digraphs ---------------------------------------------------------------
std::string hdigraph_dot(const HDigraph& d);
std::string hdigraph_json(const HDigraph& d);

// --- embeddings -------------------------------------------------------------
// {"rotations": {"0": [1, 2, 3], ...}}; vertices and adjacency are implied.
RotationSystem read_rotation_json(const std::string& path, SimpleGraph& graph_out);
std::string faces_json(const EmbeddedGraph& e);

// --- scans ------------------------------------------------------------------
// One {"source": a, "target": b, "k": k, "fidelity": f} object per line.
std::string scan_jsonl(const PstScanReport& r);
std::string schedule_csv(const UpstSchedule& s);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace biwalk
