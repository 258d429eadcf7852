#include "biwalk/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "biwalk/eigen.hpp"
#include "biwalk/errors.hpp"
#include "biwalk/exact_int.hpp"

namespace biwalk {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_angle(double t) {
  // into (-pi, pi]
  while (t > kPi + 1e-12) t -= 2.0 * kPi;
  while (t <= -kPi + 1e-12) t += 2.0 * kPi;
  if (std::fabs(t - kPi) < 1e-12) t = kPi;
  if (std::fabs(t) < 1e-12) t = 0.0;
  return t;
}
}  // namespace

Hamiltonian principal_hamiltonian(const SpectralDecomposition& s, int power,
                                  const Tolerances& tol) {
  require(power == 1 || power == 2, Err::BadSize, "power must be 1 or 2");
  const int m = s.dim;
  Hamiltonian out;
  out.source_power = power;
  out.h = ComplexMatrix(m, m);

  if (power == 1) {
    for (const auto& c : s.components)
      if (std::fabs(c.theta) > 1e-12) accumulate(out.h, c.theta, c.projector);
  } else {
    for (const auto& c : s.components)
      require(std::fabs(std::fabs(c.theta) - kPi / 2.0) > tol.cluster, Err::MinusOnePersists,
              "angle pi/2 present: the squared walk keeps eigenvalue -1");
    // double every angle back into (-pi, pi] and merge the collisions
    std::vector<std::pair<double, const ComplexMatrix*>> doubled;
    for (const auto& c : s.components) doubled.push_back({wrap_angle(2.0 * c.theta), &c.projector});
    std::sort(doubled.begin(), doubled.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t i = 0;
    while (i < doubled.size()) {
      size_t j = i;
      double theta = doubled[i].first;
      while (j < doubled.size() && doubled[j].first - theta < tol.cluster) ++j;
      if (std::fabs(theta) > 1e-12)
        for (size_t k = i; k < j; ++k) accumulate(out.h, theta, *doubled[k].second);
      i = j;
    }
  }

  // numerically Hermitian by construction; make it exact
  ComplexMatrix adj = out.h.adjoint();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.h(i, j) = 0.5 * (out.h(i, j) + adj(i, j));
  return out;
}

IsFormResult is_form(const Hamiltonian& h, const SpectralDecomposition& s,
                     const IncidenceBundle& bundle, const Tolerances& tol) {
  IsFormResult out;
  out.real_residual = h.h.real_part().max_abs();
  out.is_is_form = out.real_residual < tol.is_form_real;
  out.dim_minus_one = h.source_power == 1 ? s.dim_minus_one : 0;

  RealMatrix skew = h.h.imag_part();
  RealMatrix t = skew.transposed();
  out.skew = RealMatrix(skew.rows(), skew.cols());
  for (int i = 0; i < skew.rows(); ++i)
    for (int j = 0; j < skew.cols(); ++j)
      out.skew(i, j) = i == j ? 0.0 : 0.5 * (skew(i, j) - t(i, j));

  // exact criterion for power-1 graph walks: C square and invertible
  if (h.source_power == 1) {
    ExactIntResult exact = exact_rank_det(bundle.c_int());
    bool square = bundle.c.rows() == bundle.c.cols();
    bool exact_yes = square && exact.rank == bundle.c.rows();
    require(exact_yes == out.is_is_form, Err::InternalInconsistency,
            "numeric iS decision disagrees with the exact rank criterion");
  }
  return out;
}

HDigraph h_digraph(const RealMatrix& skew, const Tolerances& tol) {
  require(skew.rows() == skew.cols(), Err::BadSize, "skew matrix must be square");
  const int n = skew.rows();
  require(max_abs_diff(skew, -1.0 * skew.transposed()) < 1e-10, Err::BadSize,
          "matrix is not skew-symmetric");

  HDigraph d;
  d.skew = RealMatrix(n, n);
  RealMatrix t = skew.transposed();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.skew(i, j) = i == j ? 0.0 : 0.5 * (skew(i, j) - t(i, j));

  d.threshold = tol.arc_weight * d.skew.max_abs();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.skew(i, j) > d.threshold) d.arcs.push_back({i, j, d.skew(i, j)});

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : d.arcs) {
    int x = find(a.from), y = find(a.to);
    if (x != y) parent[x] = y;
  }
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < n; ++v) comps[find(v)].push_back(v);
  for (auto& [root, members] : comps) d.components.push_back(members);
  std::sort(d.components.begin(), d.components.end());
  return d;
}

StructureReport classify(const HDigraph& d) {
  StructureReport out;
  out.all_complete = true;
  for (const auto& comp : d.components) {
    ComponentStructure cs;
    cs.vertices = comp;
    cs.oriented_complete = true;  // vacuously for singletons
    for (size_t i = 0; i < comp.size() && cs.oriented_complete; ++i)
      for (size_t j = i + 1; j < comp.size(); ++j) {
        double v = d.skew(comp[i], comp[j]);
        if (std::fabs(v) <= d.threshold) {
          cs.oriented_complete = false;
          break;
        }
      }
    if (!cs.oriented_complete) out.all_complete = false;
    out.components.push_back(std::move(cs));
  }
  return out;
}

std::string StructureReport::describe() const {
  std::map<size_t, int> complete_sizes;
  int other = 0;
  for (const auto& c : components) {
    if (c.oriented_complete)
      ++complete_sizes[c.vertices.size()];
    else
      ++other;
  }
  std::string s;
  for (auto [size, count] : complete_sizes) {
    if (!s.empty()) s += ", ";
    s += std::to_string(count) + " x oriented K" + std::to_string(size);
  }
  if (other) {
    if (!s.empty()) s += ", ";
    s += std::to_string(other) + " incomplete component(s)";
  }
  if (s.empty()) s = "empty";
  return s;
}

std::vector<std::pair<int, int>> kn_ordered_pairs(int n) {
  std::vector<std::pair<int, int>> states;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) states.push_back({x, y});
  return states;
}

RealMatrix line_digraph_kn(int n) {
  require(n >= 3, Err::BadSize, "line digraph needs n >= 3");
  auto states = kn_ordered_pairs(n);
  const int m = int(states.size());
  RealMatrix s(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [x, y] = states[i];
      auto [w, z] = states[j];
      if (y == w && z != x) s(i, j) = 1.0;  // (x,y) -> (y,z)
    }
  // arcs never come in opposite pairs here, so this is skew
  return s - s.transposed();
}

LineDigraphCheck line_digraph_iso_check(const HDigraph& d, int n,
                                        const std::vector<int>& tails,
                                        const std::vector<int>& missed) {
  const int m = d.skew.rows();
  require(m == n * (n - 1), Err::NotIsomorphic,
          "state count " + std::to_string(m) + " is not n(n-1)");
  require(int(tails.size()) == m && int(missed.size()) == m, Err::BadSize,
          "tail / missed vertex maps must cover every state");

  // f(s) = (tail, missed vertex) must be a bijection onto the ordered pairs
  std::set<std::pair<int, int>> image;
  for (int s = 0; s < m; ++s) {
    int u = missed[s], a = tails[s];
    require(0 <= u && u < n && 0 <= a && a < n, Err::NotIsomorphic,
            "vertex map leaves the ground set");
    require(u != a, Err::NotIsomorphic,
            "state " + std::to_string(s) + " maps to a diagonal pair");
    require(image.insert({a, u}).second, Err::NotIsomorphic,
            "vertex map is not injective at state " + std::to_string(s));
  }

  LineDigraphCheck out;
  out.arc_count = int(d.arcs.size());
  require(out.arc_count == n * (n - 1) * (n - 2), Err::NotIsomorphic,
          "arc count " + std::to_string(out.arc_count) + " is not n(n-1)(n-2)");
  for (const auto& arc : d.arcs) {
    auto [x, y] = std::pair(tails[arc.from], missed[arc.from]);
    auto [w, z] = std::pair(tails[arc.to], missed[arc.to]);
    require(w == y && z != x, Err::NotIsomorphic,
            "arc " + std::to_string(arc.from) + " -> " + std::to_string(arc.to) +
                " does not map to a line-digraph arc");
  }
  out.isomorphic = true;
  out.detail = "mapped onto the line digraph of K" + std::to_string(n);
  return out;
}

SkewIdentityReport skew_identity_check(const WalkOperator& w, int k, int l,
                                       SkewTarget target, const Tolerances& tol) {
  const int m = w.bundle.num_states;
  RealMatrix skew = w.u - w.u.transposed();  // K

  SkewIdentityReport out;
  out.scaled_skew = (double(k) * double(l) / 4.0) * (w.u.transposed() - w.u);

  // combinatorial rule: +1 when the Q-cell of i meets the P-cell of j in one
  // state and the P-cell of i misses the Q-cell of j, -1 mirrored, else 0
  out.entry_rule_ok = true;
  auto intersects = [](const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    for (int x : a)
      if (std::binary_search(b.begin(), b.end(), x)) ++count;
    return count;
  };
  std::vector<int> pcell(m), qcell(m);
  for (int c = 0; c < int(w.bundle.cells_p.size()); ++c)
    for (int s : w.bundle.cells_p[c]) pcell[s] = c;
  for (int c = 0; c < int(w.bundle.cells_q.size()); ++c)
    for (int s : w.bundle.cells_q[c]) qcell[s] = c;
  for (int i = 0; i < m && out.entry_rule_ok; ++i)
    for (int j = 0; j < m; ++j) {
      int forward = intersects(w.bundle.cells_q[qcell[i]], w.bundle.cells_p[pcell[j]]);
      int backward = intersects(w.bundle.cells_p[pcell[i]], w.bundle.cells_q[qcell[j]]);
      double expected = 0.0;
      if (i != j && forward == 1 && backward == 0) expected = 1.0;
      if (i != j && forward == 0 && backward == 1) expected = -1.0;
      if (std::fabs(out.scaled_skew(i, j) - expected) > tol.entry_rule) {
        out.entry_rule_ok = false;
        break;
      }
    }

  // distinct adjacency eigenvalues of the underlying bipartite structure
  {
    EigenDecomposition adj = eigh_symmetric(w.bundle.bipartite_adjacency(), tol);
    out.distinct_adjacency_eigenvalues =
        int(cluster_values(adj.values, 1e-8).size());
  }

  // target T should be exp(gamma K) (squared walk) or exp(-gamma K) (walk)
  RealMatrix t_real = target == SkewTarget::WalkSquared ? w.u * w.u : w.u;
  ComplexMatrix t = ComplexMatrix::from_real(t_real);
  ComplexMatrix ik = scaled(cdouble(0.0, 1.0), skew);  // Hermitian
  double kappa_scale = ik.max_abs();
  if (kappa_scale < 1e-12) {
    // K = 0: the identity holds iff T = I, with gamma = 0
    double resid = max_abs_diff(t, ComplexMatrix::identity(m));
    require(resid < tol.gamma_residual, Err::NoGamma,
            "skew part vanishes but the target is not the identity");
    out.gamma = 0.0;
    out.residual = resid;
    return out;
  }

  HermitianEigenDecomposition eig = eigh_hermitian(ik, tol);
  int top = 0;
  for (int i = 1; i < m; ++i)
    if (std::fabs(eig.values[i]) > std::fabs(eig.values[top])) top = i;
  double kappa = eig.values[top];

  // phase of the target on the top eigenvector pins gamma modulo 2 pi / kappa
  cdouble z = 0;
  for (int i = 0; i < m; ++i) {
    cdouble row = 0;
    for (int j = 0; j < m; ++j) row += t(i, j) * eig.vectors(j, top);
    z += std::conj(eig.vectors(i, top)) * row;
  }
  require(std::abs(z) > 1e-3, Err::NoGamma, "target does not act as a scalar on the top eigenvector");

  // exp(gamma K) = exp(-i gamma (iK)): phase on the top pair is e^{-i gamma kappa}
  double base = -std::arg(z) / kappa;
  if (target == SkewTarget::Walk) base = -base;  // exp(-gamma K) instead

  double best_gamma = 0, best_resid = 1e300;
  for (int j = -3; j <= 3; ++j) {
    double gamma = base + 2.0 * kPi * double(j) / kappa;
    double tpar = target == SkewTarget::WalkSquared ? -gamma : gamma;
    ComplexMatrix guess = expm_hermitian(ik, tpar, tol);
    double resid = max_abs_diff(guess, t);
    if (resid < best_resid) {
      best_resid = resid;
      best_gamma = gamma;
    }
  }
  require(best_resid < tol.gamma_residual, Err::NoGamma,
          "best residual " + std::to_string(best_resid) + " across the candidate sweep");
  out.gamma = best_gamma;
  out.residual = best_resid;
  return out;
}

}  // namespace biwalk
