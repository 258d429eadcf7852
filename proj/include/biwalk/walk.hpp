#pragma once

#include <complex>
#include <vector>

#include "biwalk/bundle.hpp"
#include "biwalk/embedding.hpp"
#include "biwalk/matrix.hpp"
#include "biwalk/tolerances.hpp"

namespace biwalk {

struct WalkOperator {
  RealMatrix u;  // (2P - I)(2Q - I)
  RealMatrix p;  // projection onto cell-constant functions of cells_p
  RealMatrix q;
  IncidenceBundle bundle;
};

WalkOperator build_walk(const IncidenceBundle& bundle, const Tolerances& tol = {});
WalkOperator build_walk(const BipartiteGraph& g, Part designated = Part::B,
                        const Tolerances& tol = {});

struct SpectralComponent {
  double theta;  // in (-pi, pi]
  ComplexMatrix projector;
};

struct SpectralDecomposition {
  std::vector<SpectralComponent> components;  // ascending theta
  bool has_zero = false;
  bool has_pi = false;
  int dim = 0;
  int dim_minus_one = 0;  // rank of the projector at theta = pi

  const ComplexMatrix* projector_at(double theta, double tol = 1e-9) const;
};

// Eigenprojectors of U through the cell intersection route: eigenvalues of
// Chat Chat^T in (0,1) produce conjugate projector pairs at +/- theta with
// cos theta = 2 mu - 1; theta = 0 collects J/m plus ker(P + Q); theta = pi is
// the remainder. Validates idempotence, orthogonality, the resolution of the
// identity, reconstruction of U, and the exact rank formula for dim E_pi.
// Errors: Disconnected, SpectralMismatch.
SpectralDecomposition spectral_decomposition(const WalkOperator& w, const Tolerances& tol = {});

// U^k z by repeated multiplication. The state must be unit norm (NotUnit).
std::vector<cdouble> evolve(const WalkOperator& w, const std::vector<cdouble>& state,
                            long long k, const Tolerances& tol = {});

struct PermutationReport {
  bool is_permutation = false;
  std::vector<int> image;                 // sigma with U e_i = e_sigma(i)
  std::vector<std::vector<int>> cycles;   // each starts at its smallest element
  long long order = 0;                    // lcm of cycle lengths
};

// Detects 0/1 permutation structure of U. For a connected graph walk this
// must agree with "max degree <= 2"; disagreement is InternalInconsistency.
PermutationReport permutation_report(const WalkOperator& w, const Tolerances& tol = {});

struct EquivalenceReport {
  int dim = 0;
  double max_deviation = 0.0;
};

// Arc-reversal walk of G (Grover coins + reversal) against the bipartite
// walk on the subdivision of G, conjugated by the arc/edge bijection.
// Throws Mismatch above tol.equivalence.
EquivalenceReport check_arc_reversal_equivalence(const SimpleGraph& g,
                                                 const Tolerances& tol = {});

// Vertex-face walk from face/tail reflections against the bipartite walk on
// the vertex-face incidence graph. Throws Mismatch above tol.equivalence.
EquivalenceReport check_vertex_face_equivalence(const EmbeddedGraph& e,
                                                const Tolerances& tol = {});

}  // namespace biwalk
