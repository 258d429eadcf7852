#pragma once

#include <string>
#include <vector>

#include "biwalk/matrix.hpp"
#include "biwalk/tolerances.hpp"
#include "biwalk/walk.hpp"

namespace biwalk {

struct Hamiltonian {
  ComplexMatrix h;
  int source_power = 1;  // exp(i H) = U^source_power
};

// H = sum theta_r E_r over the principal angles. power = 2 doubles every
// angle back into (-pi, pi] and merges projectors; if +/- pi/2 occurs the
// doubled walk keeps eigenvalue -1 and MinusOnePersists is raised.
Hamiltonian principal_hamiltonian(const SpectralDecomposition& s, int power = 1,
                                  const Tolerances& tol = {});

struct IsFormResult {
  bool is_is_form = false;   // H == i S with S real skew-symmetric
  RealMatrix skew;           // S = Im H, symmetrized
  double real_residual = 0;  // max |Re H|
  int dim_minus_one = 0;     // rank of E_pi, the obstruction
};

// Numeric decision max |Re H| < tol.is_form_real, cross-checked for power-1
// graph walks against the exact criterion (C square of full Bareiss rank).
// Disagreement raises InternalInconsistency.
IsFormResult is_form(const Hamiltonian& h, const SpectralDecomposition& s,
                     const IncidenceBundle& bundle, const Tolerances& tol = {});

struct WeightedArc {
  int from = 0, to = 0;
  double weight = 0;  // positive
};

// Oriented weighted digraph read off a skew-symmetric matrix: one arc per
// positive entry above tol.arc_weight * max |S|.
struct HDigraph {
  RealMatrix skew;
  std::vector<WeightedArc> arcs;
  std::vector<std::vector<int>> components;  // weak components, sorted
  double threshold = 0;
};

HDigraph h_digraph(const RealMatrix& skew, const Tolerances& tol = {});

struct ComponentStructure {
  std::vector<int> vertices;
  bool oriented_complete = false;  // every pair joined by exactly one arc
};

struct StructureReport {
  std::vector<ComponentStructure> components;
  bool all_complete = false;
  std::string describe() const;  // e.g. "2 x oriented K3"
};

StructureReport classify(const HDigraph& d);

// Unweighted line digraph of K_n as a (+1/-1) skew matrix; states are the
// ordered pairs (x, y), x != y, sorted.
RealMatrix line_digraph_kn(int n);
std::vector<std::pair<int, int>> kn_ordered_pairs(int n);

struct LineDigraphCheck {
  bool isomorphic = false;
  int arc_count = 0;
  std::string detail;
};

// Checks that s -> (tails[s], missed[s]) maps the digraph onto the line
// digraph of K_n. Throws NotIsomorphic with the first violation.
LineDigraphCheck line_digraph_iso_check(const HDigraph& d, int n,
                                        const std::vector<int>& tails,
                                        const std::vector<int>& missed);

enum class SkewTarget {
  WalkSquared,  // U^2 = exp(gamma (U - U^T))
  Walk,         // U   = exp(gamma (U^T - U))
};

struct SkewIdentityReport {
  double gamma = 0;
  double residual = 0;
  bool entry_rule_ok = false;  // (k l / 4)(U^T - U) matches the cell rule
  int distinct_adjacency_eigenvalues = 0;
  RealMatrix scaled_skew;  // (k l / 4)(U^T - U)
};

// The (k, l)-semiregular skew identity. gamma is recovered from the top
// eigenpair of i(U - U^T) plus a 2 pi ambiguity sweep; NoGamma if no
// candidate brings the residual under tol.gamma_residual.
SkewIdentityReport skew_identity_check(const WalkOperator& w, int k, int l,
                                       SkewTarget target, const Tolerances& tol = {});

}  // namespace biwalk
