// Python bindings for the walk toolkit. Matrices cross the boundary as numpy
// arrays; everything else maps to small readonly classes.
#include <complex>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biwalk/eigen.hpp"
#include "biwalk/embedding.hpp"
#include "biwalk/errors.hpp"
#include "biwalk/hamiltonian.hpp"
#include "biwalk/pst.hpp"
#include "biwalk/walk.hpp"

namespace py = pybind11;
using namespace biwalk;

namespace {

py::array_t<double> to_np(const RealMatrix& m) {
  py::array_t<double> a({m.rows(), m.cols()});
  auto r = a.mutable_unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return a;
}

py::array_t<std::complex<double>> to_np(const ComplexMatrix& m) {
  py::array_t<std::complex<double>> a({m.rows(), m.cols()});
  auto r = a.mutable_unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return a;
}

RealMatrix real_from_np(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  require(a.ndim() == 2, Err::BadSize, "expected a 2-d array");
  RealMatrix m(int(a.shape(0)), int(a.shape(1)));
  auto r = a.unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = r(i, j);
  return m;
}

ComplexMatrix complex_from_np(
    const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
  require(a.ndim() == 2, Err::BadSize, "expected a 2-d array");
  ComplexMatrix m(int(a.shape(0)), int(a.shape(1)));
  auto r = a.unchecked<2>();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = r(i, j);
  return m;
}

Part parse_part(const std::string& part) {
  require(part == "A" || part == "B", Err::Usage, "part must be 'A' or 'B'");
  return part == "A" ? Part::A : Part::B;
}

PowerMode parse_mode(const std::string& mode) {
  if (mode == "eigen") return PowerMode::Eigen;
  if (mode == "multiply") return PowerMode::Multiply;
  require(mode == "auto", Err::Usage, "mode must be auto, eigen, or multiply");
  return PowerMode::Auto;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bipartite walk operators, their generators, and transfer scans";

  py::register_exception<Error>(m, "Error");

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_readonly("part_a", &BipartiteGraph::part_a)
      .def_readonly("part_b", &BipartiteGraph::part_b)
      .def_readonly("edges", &BipartiteGraph::edges)
      .def_readonly("name", &BipartiteGraph::name)
      .def("__repr__", [](const BipartiteGraph& g) {
        return "BipartiteGraph(" + (g.name.empty() ? std::to_string(g.num_vertices()) + " vertices"
                                                   : g.name) +
               ", " + std::to_string(g.num_edges()) + " edges)";
      });

  m.def("from_edge_list", &from_edge_list, py::arg("part_a"), py::arg("part_b"),
        py::arg("edges"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("crown_graph", &crown_graph, py::arg("n"));

  py::class_<SimpleGraph>(m, "SimpleGraph")
      .def(py::init(&SimpleGraph::from_edges), py::arg("num_vertices"), py::arg("edges"))
      .def_readonly("num_vertices", &SimpleGraph::num_vertices)
      .def_readonly("edges", &SimpleGraph::edges)
      .def_static("complete", &SimpleGraph::complete, py::arg("n"))
      .def_static("path", &SimpleGraph::path, py::arg("n"))
      .def_static("cycle", &SimpleGraph::cycle, py::arg("n"));

  py::class_<EmbeddedGraph>(m, "EmbeddedGraph")
      .def_property_readonly("graph", [](const EmbeddedGraph& e) { return e.graph; })
      .def_readonly("faces", &EmbeddedGraph::faces)
      .def_readonly("genus", &EmbeddedGraph::genus)
      .def("missed_vertex", &EmbeddedGraph::missed_vertex, py::arg("face"));

  m.def(
      "trace_faces",
      [](const SimpleGraph& g, const std::vector<std::vector<int>>& order) {
        return trace_faces(g, RotationSystem{order});
      },
      py::arg("graph"), py::arg("rotation"));
  m.def(
      "kn_embedding",
      [](int n) { return trace_faces(SimpleGraph::complete(n), kn_rotation_system(n)); },
      py::arg("n"));

  py::class_<WalkOperator>(m, "WalkOperator")
      .def_property_readonly("u", [](const WalkOperator& w) { return to_np(w.u); })
      .def_property_readonly("p", [](const WalkOperator& w) { return to_np(w.p); })
      .def_property_readonly("q", [](const WalkOperator& w) { return to_np(w.q); })
      .def_property_readonly("num_states",
                             [](const WalkOperator& w) { return w.bundle.num_states; })
      .def_property_readonly("cells_p", [](const WalkOperator& w) { return w.bundle.cells_p; })
      .def_property_readonly("cells_q", [](const WalkOperator& w) { return w.bundle.cells_q; })
      .def_property_readonly("graph", [](const WalkOperator& w) { return w.bundle.graph; });

  m.def(
      "build_walk",
      [](const BipartiteGraph& g, const std::string& part) {
        return build_walk(g, parse_part(part));
      },
      py::arg("graph"), py::arg("part") = "B");
  m.def(
      "vertex_face_walk",
      [](const EmbeddedGraph& e) { return build_walk(vertex_face_walk_input(e)); },
      py::arg("embedding"));

  py::class_<SpectralComponent>(m, "SpectralComponent")
      .def_readonly("theta", &SpectralComponent::theta)
      .def_property_readonly("projector",
                             [](const SpectralComponent& c) { return to_np(c.projector); });

  py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
      .def_readonly("components", &SpectralDecomposition::components)
      .def_readonly("has_zero", &SpectralDecomposition::has_zero)
      .def_readonly("has_pi", &SpectralDecomposition::has_pi)
      .def_readonly("dim", &SpectralDecomposition::dim)
      .def_readonly("dim_minus_one", &SpectralDecomposition::dim_minus_one);

  m.def(
      "spectral_decomposition",
      [](const WalkOperator& w) { return spectral_decomposition(w); }, py::arg("walk"));

  py::class_<PermutationReport>(m, "PermutationReport")
      .def_readonly("is_permutation", &PermutationReport::is_permutation)
      .def_readonly("image", &PermutationReport::image)
      .def_readonly("cycles", &PermutationReport::cycles)
      .def_readonly("order", &PermutationReport::order);

  m.def(
      "permutation_report", [](const WalkOperator& w) { return permutation_report(w); },
      py::arg("walk"));

  m.def(
      "evolve",
      [](const WalkOperator& w, const std::vector<cdouble>& state, long long k) {
        return evolve(w, state, k);
      },
      py::arg("walk"), py::arg("state"), py::arg("k"));

  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def_property_readonly("h", [](const Hamiltonian& h) { return to_np(h.h); })
      .def_readonly("source_power", &Hamiltonian::source_power);

  m.def(
      "principal_hamiltonian",
      [](const SpectralDecomposition& s, int power) { return principal_hamiltonian(s, power); },
      py::arg("spectrum"), py::arg("power") = 1);

  py::class_<IsFormResult>(m, "IsFormResult")
      .def_readonly("is_is_form", &IsFormResult::is_is_form)
      .def_property_readonly("skew", [](const IsFormResult& r) { return to_np(r.skew); })
      .def_readonly("real_residual", &IsFormResult::real_residual)
      .def_readonly("dim_minus_one", &IsFormResult::dim_minus_one);

  m.def(
      "is_form",
      [](const Hamiltonian& h, const SpectralDecomposition& s, const WalkOperator& w) {
        return is_form(h, s, w.bundle);
      },
      py::arg("hamiltonian"), py::arg("spectrum"), py::arg("walk"));

  py::class_<WeightedArc>(m, "WeightedArc")
      .def_readonly("source", &WeightedArc::from)
      .def_readonly("target", &WeightedArc::to)
      .def_readonly("weight", &WeightedArc::weight);

  py::class_<HDigraph>(m, "HDigraph")
      .def_property_readonly("skew", [](const HDigraph& d) { return to_np(d.skew); })
      .def_readonly("arcs", &HDigraph::arcs)
      .def_readonly("components", &HDigraph::components)
      .def_readonly("threshold", &HDigraph::threshold);

  m.def(
      "h_digraph",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& skew) {
        return h_digraph(real_from_np(skew));
      },
      py::arg("skew"));

  py::class_<ComponentStructure>(m, "ComponentStructure")
      .def_readonly("vertices", &ComponentStructure::vertices)
      .def_readonly("oriented_complete", &ComponentStructure::oriented_complete);

  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("components", &StructureReport::components)
      .def_readonly("all_complete", &StructureReport::all_complete)
      .def("describe", &StructureReport::describe)
      .def("__repr__", [](const StructureReport& r) { return r.describe(); });

  m.def("classify", &classify, py::arg("digraph"));

  py::class_<PstEvent>(m, "PstEvent")
      .def_readonly("source", &PstEvent::source)
      .def_readonly("target", &PstEvent::target)
      .def_readonly("step", &PstEvent::step)
      .def_readonly("fidelity", &PstEvent::fidelity);

  py::class_<PstScanReport>(m, "PstScanReport")
      .def_readonly("events", &PstScanReport::events)
      .def_property_readonly("fidelity_suprema",
                             [](const PstScanReport& r) { return to_np(r.fidelity_suprema); })
      .def_readonly("suprema_step", &PstScanReport::suprema_step)
      .def_readonly("one_directional", &PstScanReport::one_directional)
      .def_readonly("k_max", &PstScanReport::k_max);

  m.def(
      "discrete_pst_scan",
      [](const WalkOperator& w, long long k_max, double pst_tol, const std::string& mode) {
        return discrete_pst_scan(w, k_max, pst_tol, parse_mode(mode));
      },
      py::arg("walk"), py::arg("k_max"), py::arg("pst_tol") = 1e-9, py::arg("mode") = "auto");

  m.def(
      "continuous_evolve",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& h,
         double t) { return to_np(continuous_evolve(complex_from_np(h), t)); },
      py::arg("h"), py::arg("t"));

  py::class_<UpstGraph>(m, "UpstGraph")
      .def_readonly("n", &UpstGraph::n)
      .def_property_readonly("weights", [](const UpstGraph& g) { return to_np(g.weights); })
      .def_property_readonly("h", [](const UpstGraph& g) { return to_np(g.h); });

  py::class_<UpstSchedule>(m, "UpstSchedule")
      .def_readonly("step_for_pair", &UpstSchedule::step_for_pair)
      .def_readonly("events", &UpstSchedule::events)
      .def_readonly("universal", &UpstSchedule::universal);

  m.def("upst_generate", &upst_generate, py::arg("n"));
  m.def("upst_weight", &upst_weight, py::arg("n"), py::arg("s"), py::arg("t"));
  m.def(
      "upst_verify",
      [](const UpstGraph& g, double pst_tol) { return upst_verify(g, pst_tol); }, py::arg("graph"),
      py::arg("pst_tol") = 1e-9);

  py::class_<EquivalenceReport>(m, "EquivalenceReport")
      .def_readonly("dim", &EquivalenceReport::dim)
      .def_readonly("max_deviation", &EquivalenceReport::max_deviation);

  m.def(
      "check_arc_reversal",
      [](const SimpleGraph& g) { return check_arc_reversal_equivalence(g); }, py::arg("graph"));
  m.def(
      "check_vertex_face",
      [](const EmbeddedGraph& e) { return check_vertex_face_equivalence(e); },
      py::arg("embedding"));

  py::class_<SkewIdentityReport>(m, "SkewIdentityReport")
      .def_readonly("gamma", &SkewIdentityReport::gamma)
      .def_readonly("residual", &SkewIdentityReport::residual)
      .def_readonly("entry_rule_ok", &SkewIdentityReport::entry_rule_ok)
      .def_readonly("distinct_adjacency_eigenvalues",
                    &SkewIdentityReport::distinct_adjacency_eigenvalues)
      .def_property_readonly("scaled_skew",
                             [](const SkewIdentityReport& r) { return to_np(r.scaled_skew); });

  m.def(
      "skew_identity_check",
      [](const WalkOperator& w, int k, int l, const std::string& target) {
        require(target == "walk" || target == "walk-squared", Err::Usage,
                "target must be 'walk' or 'walk-squared'");
        return skew_identity_check(
            w, k, l, target == "walk" ? SkewTarget::Walk : SkewTarget::WalkSquared);
      },
      py::arg("walk"), py::arg("k"), py::arg("l"), py::arg("target") = "walk-squared");
}
