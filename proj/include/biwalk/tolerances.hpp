#pragma once

namespace biwalk {

// Central knobs. Defaults are pinned here; BIWALK_TOL_<NAME> environment
// variables override defaults, explicit CLI flags override both.
struct Tolerances {
  double symmetry = 1e-12;        // max |A - A^T| accepted by eigh_symmetric
  double off_diag_stop = 1e-13;   // Jacobi stop, relative to ||A||_F
  double eig_residual = 1e-9;     // ||A V - V D|| acceptance, relative
  double cluster = 1e-9;          // eigenvalue clustering gap
  double mu_window = 1e-9;        // mu in (w, 1-w) feeds the theta formula
  double kernel = 1e-9;           // eigenvalues below this are kernel
  double spectral_check = 1e-8;   // resolution-of-identity / reconstruction
  double orthogonality = 1e-10;   // walk operator unitarity check
  double is_form_real = 1e-8;     // max |Re H| for the iS decision
  double arc_weight = 1e-8;       // arc threshold, relative to max |S|
  double entry_rule = 1e-9;       // scaled skew entries vs {-1,0,1}
  double gamma_residual = 1e-7;   // exp(gamma K) identity acceptance
  double pst_permutation = 1e-9;  // strict transfer fidelity
  double pst_generic = 1e-6;      // loose transfer fidelity
  double power_drift = 1e-7;      // ||(U^k)^T U^k - I|| in multiply mode
  double equivalence = 1e-12;     // walk-equivalence checks

  // Defaults overridden by BIWALK_TOL_* variables where set, e.g.
  // BIWALK_TOL_CLUSTER=1e-7. Unknown variables are ignored.
  static Tolerances from_env();
};

}  // namespace biwalk
