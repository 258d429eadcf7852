// biwalk: build bipartite walks, inspect their spectra and generators, export
// digraphs and transfer schedules.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biwalk/eigen.hpp"
#include "biwalk/embedding.hpp"
#include "biwalk/errors.hpp"
#include "biwalk/exact_int.hpp"
#include "biwalk/hamiltonian.hpp"
#include "biwalk/io.hpp"
#include "biwalk/pst.hpp"
#include "biwalk/walk.hpp"

using namespace biwalk;

namespace {

constexpr int kMaxFamilySize = 64;

struct Job {
  std::string input;
  std::string family;
  std::string part = "B";
  bool exact_check = true;
  Tolerances tol = Tolerances::from_env();
};

void add_common(CLI::App* cmd, Job& job, bool with_part = true) {
  cmd->add_option("--input", job.input,
                  "graph file (.json with partA/partB/edges, .txt edge list)");
  cmd->add_option("--family", job.family,
                  "built-in input: path:n | cycle:n | crown:n | kn-embed:n");
  if (with_part)
    cmd->add_option("--part", job.part, "designated edge partition for graph inputs (A or B)")
        ->check(CLI::IsMember({"A", "B"}));
  cmd->add_flag("--exact-check,!--no-exact-check", job.exact_check,
                "report the integer rank cross-validation (default on)");
  cmd->add_option("--tol-symmetry", job.tol.symmetry, "");
  cmd->add_option("--tol-off-diag-stop", job.tol.off_diag_stop, "");
  cmd->add_option("--tol-eig-residual", job.tol.eig_residual, "");
  cmd->add_option("--tol-cluster", job.tol.cluster, "");
  cmd->add_option("--tol-mu-window", job.tol.mu_window, "");
  cmd->add_option("--tol-kernel", job.tol.kernel, "");
  cmd->add_option("--tol-spectral-check", job.tol.spectral_check, "");
  cmd->add_option("--tol-orthogonality", job.tol.orthogonality, "");
  cmd->add_option("--tol-is-form-real", job.tol.is_form_real, "");
  cmd->add_option("--tol-arc-weight", job.tol.arc_weight, "");
  cmd->add_option("--tol-entry-rule", job.tol.entry_rule, "");
  cmd->add_option("--tol-gamma-residual", job.tol.gamma_residual, "");
  cmd->add_option("--tol-pst-permutation", job.tol.pst_permutation, "");
  cmd->add_option("--tol-pst-generic", job.tol.pst_generic, "");
  cmd->add_option("--tol-power-drift", job.tol.power_drift, "");
  cmd->add_option("--tol-equivalence", job.tol.equivalence, "");
}

std::pair<std::string, int> parse_family(const std::string& spec) {
  auto colon = spec.find(':');
  require(colon != std::string::npos, Err::Usage,
          "family must look like path:8 (path | cycle | crown | kn-embed)");
  std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (...) {
    fail(Err::Usage, "family size is not a number: " + spec);
  }
  require(n >= 1 && n <= kMaxFamilySize, Err::Usage,
          "family size must lie in 1.." + std::to_string(kMaxFamilySize));
  return {kind, n};
}

BipartiteGraph family_graph(const std::string& kind, int n) {
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "crown") return crown_graph(n);
  fail(Err::Usage, "unknown graph family '" + kind + "' (path | cycle | crown)");
}

EmbeddedGraph family_embedding(const std::string& spec) {
  auto [kind, n] = parse_family(spec);
  require(kind == "kn-embed", Err::Usage, "this command takes --family kn-embed:n");
  return trace_faces(SimpleGraph::complete(n), kn_rotation_system(n));
}

WalkOperator load_walk(const Job& job) {
  require(job.input.empty() != job.family.empty(), Err::Usage,
          "give exactly one of --input or --family");
  if (!job.family.empty()) {
    auto [kind, n] = parse_family(job.family);
    if (kind == "kn-embed") {
      auto emb = trace_faces(SimpleGraph::complete(n), kn_rotation_system(n));
      return build_walk(vertex_face_walk_input(emb), job.tol);
    }
    return build_walk(family_graph(kind, n), job.part == "A" ? Part::A : Part::B, job.tol);
  }
  BipartiteGraph g = job.input.size() > 5 && job.input.substr(job.input.size() - 5) == ".json"
                         ? read_graph_json(job.input)
                         : read_edge_list_text(job.input);
  return build_walk(g, job.part == "A" ? Part::A : Part::B, job.tol);
}

SimpleGraph load_simple(const Job& job) {
  require(job.input.empty() != job.family.empty(), Err::Usage,
          "give exactly one of --input or --family");
  if (!job.family.empty()) {
    auto [kind, n] = parse_family(job.family);
    if (kind == "kn") return SimpleGraph::complete(n);
    if (kind == "cn") return SimpleGraph::cycle(n);
    if (kind == "pn") return SimpleGraph::path(n);
    fail(Err::Usage, "unknown simple-graph family '" + kind + "' (kn | cn | pn)");
  }
  std::istringstream in(read_text_file(job.input));
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int top = -1, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    require(bool(ls >> v), Err::Parse, "line " + std::to_string(lineno) + ": expected two labels");
    require(u >= 0 && v >= 0 && u <= kMaxFamilySize && v <= kMaxFamilySize, Err::Parse,
            "line " + std::to_string(lineno) + ": label out of range");
    edges.push_back({u, v});
    top = std::max({top, u, v});
  }
  require(top >= 0, Err::Parse, "no edges found");
  return SimpleGraph::from_edges(top + 1, edges);
}

EmbeddedGraph load_embedding(const Job& job, const std::string& rotation_path) {
  require(rotation_path.empty() != job.family.empty(), Err::Usage,
          "give exactly one of --rotation or --family kn-embed:n");
  if (!job.family.empty()) return family_embedding(job.family);
  SimpleGraph g;
  RotationSystem rot = read_rotation_json(rotation_path, g);
  return trace_faces(g, rot);
}

void print_exact_check(const Job& job, const IncidenceBundle& b) {
  if (!job.exact_check) return;
  auto exact = exact_rank_det(b.c_int());
  printf("exact-rank %d of %dx%d", exact.rank, int(b.cells_q.size()), int(b.cells_p.size()));
  if (exact.determinant) printf(", det %s", exact.determinant->str().c_str());
  printf("\n");
}

std::string part_sizes(const IncidenceBundle& b) {
  return std::to_string(b.cells_q.size()) + " + " + std::to_string(b.cells_p.size());
}

// --- subcommand bodies -------------------------------------------------------

int run_build(const Job& job, const std::string& out, const std::string& graph_json_out) {
  WalkOperator w = load_walk(job);
  printf("states %d\n", w.bundle.num_states);
  printf("cells %s\n", part_sizes(w.bundle).c_str());
  printf("unitarity %s\n",
         format_double(max_abs_diff(w.u.transposed() * w.u,
                                    RealMatrix::identity(w.bundle.num_states)))
             .c_str());
  print_exact_check(job, w.bundle);
  if (!out.empty()) {
    write_text_file(out, matrix_csv(w.u));
    printf("wrote %s\n", out.c_str());
  }
  if (!graph_json_out.empty()) {
    require(w.bundle.graph.has_value(), Err::Usage,
            "this walk was built from cells, not a graph; no JSON to write");
    write_text_file(graph_json_out, graph_json(*w.bundle.graph));
    printf("wrote %s\n", graph_json_out.c_str());
  }
  return 0;
}

int run_spectrum(const Job& job, const std::string& out) {
  WalkOperator w = load_walk(job);
  auto sd = spectral_decomposition(w, job.tol);
  printf("states %d\n", sd.dim);
  printf("components %zu\n", sd.components.size());
  for (const auto& c : sd.components) {
    double tr = 0;
    for (int i = 0; i < sd.dim; ++i) tr += c.projector(i, i).real();
    printf("theta %s rank %d\n", format_double(c.theta).c_str(), int(std::lround(tr)));
  }
  printf("flip-dimension %d\n", sd.dim_minus_one);
  print_exact_check(job, w.bundle);
  if (!out.empty()) {
    write_text_file(out, spectral_json(sd));
    printf("wrote %s\n", out.c_str());
  }
  return 0;
}

int run_hamiltonian(const Job& job, int power, const std::string& out) {
  WalkOperator w = load_walk(job);
  auto sd = spectral_decomposition(w, job.tol);
  auto h = principal_hamiltonian(sd, power, job.tol);
  auto isf = is_form(h, sd, w.bundle, job.tol);
  printf("power %d\n", power);
  printf("skew-form %s\n", isf.is_is_form ? "yes" : "no");
  printf("real-residual %s\n", format_double(isf.real_residual).c_str());
  printf("flip-dimension %d\n", isf.dim_minus_one);
  print_exact_check(job, w.bundle);
  if (!out.empty()) {
    write_text_file(out, matrix_csv(isf.skew));
    printf("wrote %s\n", out.c_str());
  }
  return 0;
}

int run_hdigraph(const Job& job, int power, const std::string& dot_out,
                 const std::string& json_out) {
  WalkOperator w = load_walk(job);
  auto sd = spectral_decomposition(w, job.tol);
  auto h = principal_hamiltonian(sd, power, job.tol);
  auto isf = is_form(h, sd, w.bundle, job.tol);
  auto d = h_digraph(isf.skew, job.tol);
  printf("states %d\n", d.skew.rows());
  printf("arcs %zu\n", d.arcs.size());
  printf("threshold %s\n", format_double(d.threshold).c_str());
  printf("components %zu\n", d.components.size());
  print_exact_check(job, w.bundle);
  if (!dot_out.empty()) {
    write_text_file(dot_out, hdigraph_dot(d));
    printf("wrote %s\n", dot_out.c_str());
  }
  if (!json_out.empty()) {
    write_text_file(json_out, hdigraph_json(d));
    printf("wrote %s\n", json_out.c_str());
  }
  return 0;
}

int run_classify(const Job& job, int power) {
  WalkOperator w = load_walk(job);
  auto sd = spectral_decomposition(w, job.tol);
  auto h = principal_hamiltonian(sd, power, job.tol);
  auto isf = is_form(h, sd, w.bundle, job.tol);
  auto rep = classify(h_digraph(isf.skew, job.tol));
  printf("structure %s\n", rep.describe().c_str());
  for (const auto& c : rep.components)
    printf("component size %zu complete %s\n", c.vertices.size(),
           c.oriented_complete ? "yes" : "no");
  print_exact_check(job, w.bundle);
  return 0;
}

int run_pst_scan(const Job& job, long long kmax, double pst_tol, const std::string& mode,
                 const std::string& out) {
  WalkOperator w = load_walk(job);
  PowerMode pm = mode == "eigen" ? PowerMode::Eigen
                 : mode == "multiply" ? PowerMode::Multiply
                                      : PowerMode::Auto;
  auto scan = discrete_pst_scan(w, kmax, pst_tol, pm, job.tol);
  printf("kmax %lld\n", scan.k_max);
  printf("events %zu\n", scan.events.size());
  for (size_t i = 0; i < scan.events.size() && i < 50; ++i) {
    const auto& e = scan.events[i];
    printf("event %d -> %d at %lld fidelity %s\n", e.source, e.target, e.step,
           format_double(e.fidelity).c_str());
  }
  printf("one-directional %zu\n", scan.one_directional.size());
  for (auto [a, b] : scan.one_directional) printf("only %d -> %d\n", a, b);
  if (!out.empty()) {
    write_text_file(out, scan_jsonl(scan));
    printf("wrote %s\n", out.c_str());
  }
  return 0;
}

int run_upst(const Job& job, int n, const std::string& weights_out,
             const std::string& schedule_out) {
  auto g = upst_generate(n);
  auto sched = upst_verify(g, job.tol.pst_permutation, job.tol);
  printf("n %d\n", n);
  printf("vertices %d\n", n - 1);
  printf("universal %s\n", sched.universal ? "yes" : "no");
  printf("events %zu\n", sched.events.size());
  if (!weights_out.empty()) {
    write_text_file(weights_out, matrix_csv(g.weights));
    printf("wrote %s\n", weights_out.c_str());
  }
  if (!schedule_out.empty()) {
    write_text_file(schedule_out, schedule_csv(sched));
    printf("wrote %s\n", schedule_out.c_str());
  }
  return 0;
}

int run_check_arc_reversal(const Job& job) {
  SimpleGraph g = load_simple(job);
  auto rep = check_arc_reversal_equivalence(g, job.tol);
  printf("arc-states %d\n", rep.dim);
  printf("deviation %s\n", format_double(rep.max_deviation).c_str());
  printf("equivalent yes\n");
  return 0;
}

int run_check_vertex_face(const Job& job, const std::string& rotation_path) {
  EmbeddedGraph e = load_embedding(job, rotation_path);
  auto rep = check_vertex_face_equivalence(e, job.tol);
  printf("arc-states %d\n", rep.dim);
  printf("deviation %s\n", format_double(rep.max_deviation).c_str());
  printf("equivalent yes\n");
  return 0;
}

int run_check_identity(const Job& job, std::string target, int k, int l) {
  WalkOperator w = load_walk(job);
  bool is_embed = !job.family.empty() && job.family.find("kn-embed") == 0;
  if (target.empty()) target = is_embed ? "walk" : "walk-squared";
  if (k <= 0 || l <= 0) {
    if (is_embed) {
      k = l = parse_family(job.family).second - 1;
    } else {
      require(w.bundle.graph.has_value(), Err::Usage, "give --k and --l for cell inputs");
      auto kl = w.bundle.graph->biregular();
      require(kl.has_value(), Err::Usage,
              "graph is not biregular; give --k and --l explicitly");
      k = kl->first;
      l = kl->second;
    }
  }
  auto rep = skew_identity_check(w, k, l,
                                 target == "walk" ? SkewTarget::Walk : SkewTarget::WalkSquared,
                                 job.tol);
  printf("target %s\n", target.c_str());
  printf("degrees %d %d\n", k, l);
  printf("gamma %s\n", format_double(rep.gamma).c_str());
  printf("residual %s\n", format_double(rep.residual).c_str());
  printf("entry-rule %s\n", rep.entry_rule_ok ? "yes" : "no");
  printf("adjacency-eigenvalues %d\n", rep.distinct_adjacency_eigenvalues);
  return 0;
}

int run_embed(const Job& job, const std::string& rotation_path, const std::string& out) {
  EmbeddedGraph e = load_embedding(job, rotation_path);
  printf("vertices %d\n", e.graph.num_vertices);
  printf("edges %zu\n", e.graph.edges.size());
  printf("faces %zu\n", e.faces.size());
  printf("genus %d\n", e.genus);
  for (size_t f = 0; f < e.faces.size(); ++f) {
    printf("face %zu length %zu", f, e.faces[f].size());
    auto mv = e.missed_vertex(int(f));
    if (mv) printf(" missed %d", *mv);
    printf("\n");
  }
  if (!out.empty()) {
    write_text_file(out, faces_json(e));
    printf("wrote %s\n", out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite walk toolkit"};
  app.require_subcommand(1);

  Job job;
  int power = 1;
  long long kmax = 1000;
  double pst_tol = 1e-9;
  int upst_n = 0;
  int k_deg = 0, l_deg = 0;
  std::string out, graph_json_out, dot_out, json_out, mode = "auto", rotation_path;
  std::string weights_out, schedule_out, target;

  auto* build = app.add_subcommand("build", "construct the walk operator");
  add_common(build, job);
  build->add_option("--out", out, "write the walk matrix as CSV");
  build->add_option("--graph-json", graph_json_out, "write the canonical graph as JSON");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue angles and projectors");
  add_common(spectrum, job);
  spectrum->add_option("--out", out, "write the decomposition as JSON");

  auto* hamiltonian = app.add_subcommand("hamiltonian", "principal generator of the walk");
  add_common(hamiltonian, job);
  hamiltonian->add_option("--power", power, "walk power (1 or 2)")->check(CLI::IsMember({1, 2}));
  hamiltonian->add_option("--out", out, "write the skew generator as CSV");

  auto* hdigraph = app.add_subcommand("hdigraph", "weighted digraph of the generator");
  add_common(hdigraph, job);
  hdigraph->add_option("--power", power, "walk power (1 or 2)")->check(CLI::IsMember({1, 2}));
  hdigraph->add_option("--dot", dot_out, "write DOT");
  hdigraph->add_option("--json", json_out, "write JSON");

  auto* classify_cmd = app.add_subcommand("classify", "oriented clique structure");
  add_common(classify_cmd, job);
  classify_cmd->add_option("--power", power, "walk power (1 or 2)")
      ->check(CLI::IsMember({1, 2}));

  auto* pst = app.add_subcommand("pst-scan", "search walk powers for perfect transfers");
  add_common(pst, job);
  pst->add_option("--kmax", kmax, "largest power to scan")->required();
  pst->add_option("--pst-tol", pst_tol, "fidelity slack for an event");
  pst->add_option("--mode", mode, "powering mode")->check(CLI::IsMember({"auto", "eigen", "multiply"}));
  pst->add_option("--out", out, "write events as JSON lines");

  auto* upst = app.add_subcommand("upst", "weighted clique with universal transfer");
  add_common(upst, job, false);
  upst->add_option("--n", upst_n, "even path size >= 4 behind the construction")->required();
  upst->add_option("--weights", weights_out, "write the skew weights as CSV");
  upst->add_option("--schedule", schedule_out, "write the transfer schedule as CSV");

  auto* car = app.add_subcommand("check-arc-reversal",
                                 "subdivision walk equals the coined arc walk");
  add_common(car, job, false);
  car->get_option("--family")
      ->description("simple graph family: kn:n | cn:n | pn:n");
  car->get_option("--input")->description("plain edge list (.txt)");

  auto* cvf = app.add_subcommand("check-vertex-face",
                                 "incidence walk equals the reflection product");
  add_common(cvf, job, false);
  cvf->add_option("--rotation", rotation_path, "rotation system JSON");

  auto* cid = app.add_subcommand("check-identity", "walk as a skew exponential");
  add_common(cid, job);
  cid->add_option("--target", target, "walk | walk-squared (default by input kind)")
      ->check(CLI::IsMember({"", "walk", "walk-squared"}));
  cid->add_option("--k", k_deg, "degree on the first part");
  cid->add_option("--l", l_deg, "degree on the second part");

  auto* embed = app.add_subcommand("embed", "trace the faces of a rotation system");
  add_common(embed, job, false);
  embed->add_option("--rotation", rotation_path, "rotation system JSON");
  embed->add_option("--out", out, "write faces as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fprintf(stderr, "error: %s\n\n", e.what());
    const auto parsed = app.get_subcommands();
    fputs((parsed.empty() ? app : *parsed.front()).help().c_str(), stderr);
    return 2;
  }

  try {
    if (build->parsed()) return run_build(job, out, graph_json_out);
    if (spectrum->parsed()) return run_spectrum(job, out);
    if (hamiltonian->parsed()) return run_hamiltonian(job, power, out);
    if (hdigraph->parsed()) return run_hdigraph(job, power, dot_out, json_out);
    if (classify_cmd->parsed()) return run_classify(job, power);
    if (pst->parsed()) return run_pst_scan(job, kmax, pst_tol, mode, out);
    if (upst->parsed()) return run_upst(job, upst_n, weights_out, schedule_out);
    if (car->parsed()) return run_check_arc_reversal(job);
    if (cvf->parsed()) return run_check_vertex_face(job, rotation_path);
    if (cid->parsed()) return run_check_identity(job, target, k_deg, l_deg);
    if (embed->parsed()) return run_embed(job, rotation_path, out);
  } catch (const Error& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return e.code() == Err::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
