#include "biwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "biwalk/eigen.hpp"
#include "biwalk/errors.hpp"
#include "biwalk/exact_int.hpp"

namespace biwalk {

namespace {
constexpr double kPi = std::numbers::pi;
}

namespace {

// One rounding of 1/|cell| per entry; keeps small-cell walks exactly integral.
RealMatrix cell_projection(int m, const std::vector<std::vector<int>>& cells) {
  RealMatrix p(m, m);
  for (const auto& cell : cells) {
    double inv = 1.0 / double(cell.size());
    for (int i : cell)
      for (int j : cell) p(i, j) = inv;
  }
  return p;
}

}  // namespace

WalkOperator build_walk(const IncidenceBundle& bundle, const Tolerances& tol) {
  WalkOperator w;
  w.bundle = bundle;
  w.p = cell_projection(bundle.num_states, bundle.cells_p);
  w.q = cell_projection(bundle.num_states, bundle.cells_q);
  const int m = bundle.num_states;
  RealMatrix id = RealMatrix::identity(m);
  RealMatrix rp = 2.0 * w.p - id;
  RealMatrix rq = 2.0 * w.q - id;
  w.u = rp * rq;

  // the construction must deliver projections and an orthogonal product
  require(max_abs_diff(w.p * w.p, w.p) < 1e-12, Err::InternalInconsistency, "P not idempotent");
  require(max_abs_diff(w.q * w.q, w.q) < 1e-12, Err::InternalInconsistency, "Q not idempotent");
  require(max_abs_diff(w.u.transposed() * w.u, id) < tol.orthogonality,
          Err::InternalInconsistency, "U not orthogonal");
  return w;
}

WalkOperator build_walk(const BipartiteGraph& g, Part designated, const Tolerances& tol) {
  return build_walk(incidence_bundle(g, build_partitions(g, designated)), tol);
}

const ComplexMatrix* SpectralDecomposition::projector_at(double theta, double tol) const {
  for (const auto& c : components)
    if (std::fabs(c.theta - theta) < tol) return &c.projector;
  return nullptr;
}

SpectralDecomposition spectral_decomposition(const WalkOperator& w, const Tolerances& tol) {
  const IncidenceBundle& b = w.bundle;
  require(b.connected, Err::Disconnected, "spectral decomposition needs a connected bundle");
  const int m = b.num_states;

  SpectralDecomposition out;
  out.dim = m;

  // eigenvalues of Chat Chat^T in (0, 1) give the conjugate projector pairs
  RealMatrix cc = b.chat * b.chat.transposed();
  EigenDecomposition eig = eigh_symmetric(cc, tol);
  auto groups = cluster_values(eig.values, tol.cluster);

  const RealMatrix& p = w.p;
  for (const auto& g : groups) {
    double mu = 0;
    for (int i : g) mu += eig.values[i];
    mu /= double(g.size());
    if (mu <= tol.mu_window || mu >= 1.0 - tol.mu_window) continue;

    RealMatrix f(cc.rows(), cc.rows());
    for (int col : g)
      for (int i = 0; i < cc.rows(); ++i)
        for (int j = 0; j < cc.rows(); ++j)
          f(i, j) += eig.vectors(i, col) * eig.vectors(j, col);

    RealMatrix wm = b.p1hat * (f * b.p1hat.transposed());
    double c2t = std::clamp(2.0 * mu - 1.0, -1.0, 1.0);
    double theta = std::acos(c2t);
    double s2 = 1.0 - c2t * c2t;  // sin^2 theta

    RealMatrix pw = p * wm;
    RealMatrix wp = wm * p;
    RealMatrix pwp = pw * p;

    auto projector = [&](double sign) {
      cdouble eit = std::exp(cdouble(0.0, sign * theta));
      cdouble emt = std::exp(cdouble(0.0, -sign * theta));
      ComplexMatrix e(m, m);
      accumulate(e, (c2t + 1.0) / s2, wm);
      accumulate(e, -(eit + 1.0) / s2, pw);
      accumulate(e, -(emt + 1.0) / s2, wp);
      accumulate(e, 2.0 / s2, pwp);
      return e;
    };
    out.components.push_back({theta, projector(+1.0)});
    out.components.push_back({-theta, projector(-1.0)});
  }

  // theta = 0: all-ones direction plus the kernel of P + Q
  ComplexMatrix e0 = ComplexMatrix::from_real(RealMatrix::constant(m, m, 1.0 / double(m)));
  {
    EigenDecomposition pq = eigh_symmetric(w.p + w.q, tol);
    for (int j = 0; j < m; ++j) {
      if (pq.values[j] >= tol.kernel) continue;
      for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
          e0(i, k) += pq.vectors(i, j) * pq.vectors(k, j);
    }
  }
  out.components.push_back({0.0, e0});
  out.has_zero = true;

  // theta = pi takes whatever the resolution of the identity still misses
  ComplexMatrix sum(m, m);
  for (const auto& c : out.components) accumulate(sum, 1.0, c.projector);
  ComplexMatrix epi = ComplexMatrix::identity(m) - sum;
  double tr = 0;
  for (int i = 0; i < m; ++i) tr += epi(i, i).real();
  require(std::fabs(tr - std::round(tr)) < 1e-6, Err::SpectralMismatch,
          "non-integer dimension at theta = pi: " + std::to_string(tr));
  int dim_pi = int(std::lround(tr));
  require(dim_pi >= 0, Err::SpectralMismatch, "negative dimension at theta = pi");
  if (dim_pi > 0) {
    out.components.push_back({kPi, epi});
    out.has_pi = true;
  } else {
    require(epi.max_abs() < tol.spectral_check, Err::SpectralMismatch,
            "trace-zero remainder at theta = pi is not the zero matrix");
  }
  out.dim_minus_one = dim_pi;

  std::sort(out.components.begin(), out.components.end(),
            [](const SpectralComponent& x, const SpectralComponent& y) { return x.theta < y.theta; });

  // --- validation -----------------------------------------------------------
  // resolution of the identity
  ComplexMatrix total(m, m);
  for (const auto& c : out.components) accumulate(total, 1.0, c.projector);
  require(max_abs_diff(total, ComplexMatrix::identity(m)) < tol.spectral_check,
          Err::SpectralMismatch, "projectors do not sum to the identity");

  // idempotence, mutual orthogonality, conjugate pairing, reality at 0 and pi
  for (size_t i = 0; i < out.components.size(); ++i) {
    const auto& ci = out.components[i];
    require(max_abs_diff(ci.projector * ci.projector, ci.projector) < tol.spectral_check,
            Err::SpectralMismatch, "projector not idempotent");
    require(max_abs_diff(ci.projector, ci.projector.adjoint()) < tol.spectral_check,
            Err::SpectralMismatch, "projector not Hermitian");
    for (size_t j = i + 1; j < out.components.size(); ++j) {
      ComplexMatrix prod = ci.projector * out.components[j].projector;
      require(prod.max_abs() < tol.spectral_check, Err::SpectralMismatch,
              "projectors at distinct angles are not orthogonal");
    }
    if (std::fabs(ci.theta) < 1e-12 || std::fabs(ci.theta - kPi) < 1e-12) {
      require(ci.projector.imag_part().max_abs() < tol.spectral_check, Err::SpectralMismatch,
              "projector at a real eigenvalue is not real");
    } else {
      const ComplexMatrix* mate = out.projector_at(-ci.theta);
      require(mate != nullptr, Err::SpectralMismatch, "unpaired angle in the decomposition");
      require(max_abs_diff(ci.projector.conjugated(), *mate) < tol.spectral_check,
              Err::SpectralMismatch, "conjugate pairing violated");
    }
  }

  // reconstruction of U
  ComplexMatrix rebuilt(m, m);
  for (const auto& c : out.components)
    accumulate(rebuilt, std::exp(cdouble(0.0, c.theta)), c.projector);
  require(max_abs_diff(rebuilt, ComplexMatrix::from_real(w.u)) < tol.spectral_check,
          Err::SpectralMismatch, "projector reconstruction does not give U back");

  // exact dimension of the -1 eigenspace: |cells_q| + |cells_p| - 2 rank(C)
  ExactIntResult exact = exact_rank_det(b.c_int());
  int expected = int(b.cells_q.size()) + int(b.cells_p.size()) - 2 * exact.rank;
  require(dim_pi == expected, Err::SpectralMismatch,
          "dim E_pi = " + std::to_string(dim_pi) + " but the rank formula gives " +
              std::to_string(expected));

  return out;
}

std::vector<cdouble> evolve(const WalkOperator& w, const std::vector<cdouble>& state,
                            long long k, const Tolerances& tol) {
  require(int(state.size()) == w.bundle.num_states, Err::BadSize, "state dimension mismatch");
  require(k >= 0, Err::BadSize, "negative step count");
  double norm2 = 0;
  for (const cdouble& z : state) norm2 += std::norm(z);
  require(std::fabs(norm2 - 1.0) < 1e-10, Err::NotUnit,
          "state norm " + std::to_string(std::sqrt(norm2)));
  (void)tol;
  std::vector<cdouble> cur = state;
  for (long long i = 0; i < k; ++i) cur = apply_matrix(w.u, cur);
  return cur;
}

PermutationReport permutation_report(const WalkOperator& w, const Tolerances& tol) {
  const int m = w.bundle.num_states;
  PermutationReport rep;
  rep.image.assign(m, -1);
  rep.is_permutation = true;
  const double close = 1e-9;
  for (int col = 0; col < m && rep.is_permutation; ++col) {
    int hit = -1;
    for (int row = 0; row < m; ++row) {
      double v = w.u(row, col);
      if (std::fabs(v - 1.0) <= close) {
        if (hit >= 0) {
          rep.is_permutation = false;
          break;
        }
        hit = row;
      } else if (std::fabs(v) > close) {
        rep.is_permutation = false;
        break;
      }
    }
    if (hit < 0) rep.is_permutation = false;
    if (rep.is_permutation) rep.image[col] = hit;
  }

  if (rep.is_permutation) {
    std::vector<char> seen(m, 0);
    for (int start = 0; start < m; ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      int cur = start;
      while (!seen[cur]) {
        seen[cur] = 1;
        cycle.push_back(cur);
        cur = rep.image[cur];
      }
      rep.cycles.push_back(std::move(cycle));
    }
    rep.order = 1;
    for (const auto& c : rep.cycles) rep.order = std::lcm(rep.order, (long long)c.size());
  } else {
    rep.image.clear();
  }

  // for connected graph walks, permutation structure <=> max degree <= 2
  if (w.bundle.graph && w.bundle.graph->connected) {
    int max_deg = 0;
    for (const auto& cell : w.bundle.cells_p) max_deg = std::max(max_deg, int(cell.size()));
    for (const auto& cell : w.bundle.cells_q) max_deg = std::max(max_deg, int(cell.size()));
    bool expected = max_deg <= 2;
    require(rep.is_permutation == expected, Err::InternalInconsistency,
            "permutation structure disagrees with the degree bound");
  }
  (void)tol;
  return rep;
}

EquivalenceReport check_arc_reversal_equivalence(const SimpleGraph& g, const Tolerances& tol) {
  require(g.connected(), Err::Disconnected, "arc-reversal check needs a connected graph");
  Subdivision sub = subdivision(g);
  // the new (edge) vertices carry partA and drive P
  WalkOperator bip = build_walk(sub.graph, Part::A, tol);

  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : g.edges) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  std::sort(arcs.begin(), arcs.end());
  const int na = int(arcs.size());
  std::map<std::pair<int, int>, int> arc_index;
  for (int i = 0; i < na; ++i) arc_index[arcs[i]] = i;

  // coin step: Grover coin (2/d) J - I on the arcs sharing a tail
  auto deg = g.degrees();
  RealMatrix coins(na, na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      if (arcs[i].first != arcs[j].first) continue;
      double d = double(deg[arcs[i].first]);
      coins(i, j) = 2.0 / d - (i == j ? 1.0 : 0.0);
    }
  // reversal step
  RealMatrix rev(na, na);
  for (int i = 0; i < na; ++i) rev(arc_index[{arcs[i].second, arcs[i].first}], i) = 1.0;
  RealMatrix u_arc = rev * coins;

  // edge (mid, orig) of the subdivision <-> arc (orig, other end)
  std::vector<int> to_arc(na);
  for (int e = 0; e < na; ++e) to_arc[e] = arc_index.at(sub.arc_for_edge[e]);

  double dev = 0;
  for (int r = 0; r < na; ++r)
    for (int c = 0; c < na; ++c)
      dev = std::max(dev, std::fabs(u_arc(to_arc[r], to_arc[c]) - bip.u(r, c)));

  require(dev <= tol.equivalence, Err::Mismatch,
          "arc-reversal deviation " + std::to_string(dev));
  return {na, dev};
}

EquivalenceReport check_vertex_face_equivalence(const EmbeddedGraph& e, const Tolerances& tol) {
  auto arcs = arcs_of(e.graph);
  const int na = int(arcs.size());
  const int nv = e.graph.num_vertices;
  const int nf = int(e.faces.size());

  // route 1: reflections straight from the face / tail incidences
  RealMatrix mhat(na, nf), nhat(na, nv);
  {
    std::vector<int> fsize(nf, 0), tsize(nv, 0);
    for (int i = 0; i < na; ++i) {
      ++fsize[e.face_of_arc(arcs[i].first, arcs[i].second)];
      ++tsize[arcs[i].first];
    }
    for (int i = 0; i < na; ++i) {
      int f = e.face_of_arc(arcs[i].first, arcs[i].second);
      mhat(i, f) = 1.0 / std::sqrt(double(fsize[f]));
      nhat(i, arcs[i].first) = 1.0 / std::sqrt(double(tsize[arcs[i].first]));
    }
  }
  RealMatrix id = RealMatrix::identity(na);
  RealMatrix u_mn = (2.0 * (mhat * mhat.transposed()) - id) *
                    (2.0 * (nhat * nhat.transposed()) - id);

  // route 2: the bipartite walk on the vertex-face incidence graph
  std::vector<int> part_a, part_b;
  for (int v = 0; v < nv; ++v) part_a.push_back(v);
  for (int f = 0; f < nf; ++f) part_b.push_back(nv + f);
  std::vector<std::pair<int, int>> inc_edges;
  for (int i = 0; i < na; ++i)
    inc_edges.push_back({arcs[i].first, nv + e.face_of_arc(arcs[i].first, arcs[i].second)});
  BipartiteGraph incidence = from_edge_list(part_a, part_b, inc_edges);  // DuplicateEdge if a face repeats a vertex
  WalkOperator bip = build_walk(incidence, Part::B, tol);

  // incidence edge (v, face) <-> the unique arc with that tail on that face
  std::map<std::pair<int, int>, int> by_pair;
  for (int i = 0; i < na; ++i)
    by_pair[{arcs[i].first, e.face_of_arc(arcs[i].first, arcs[i].second)}] = i;
  std::vector<int> to_arc(na);
  for (int ei = 0; ei < incidence.num_edges(); ++ei) {
    auto [v, f] = incidence.edges[ei];
    to_arc[ei] = by_pair.at({v, f - nv});
  }

  double dev = 0;
  for (int r = 0; r < na; ++r)
    for (int c = 0; c < na; ++c)
      dev = std::max(dev, std::fabs(u_mn(to_arc[r], to_arc[c]) - bip.u(r, c)));

  require(dev <= tol.equivalence, Err::Mismatch,
          "vertex-face deviation " + std::to_string(dev));
  return {na, dev};
}

}  // namespace biwalk
