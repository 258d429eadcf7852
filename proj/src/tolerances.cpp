#include "biwalk/tolerances.hpp"

#include <cstdlib>
#include <string>

namespace biwalk {
namespace {

void load(const char* name, double& slot) {
  const char* raw = std::getenv(name);
  if (!raw) return;
  char* end = nullptr;
  double v = std::strtod(raw, &end);
  if (end != raw && v > 0) slot = v;
}

}  // namespace

Tolerances Tolerances::from_env() {
  Tolerances t;
  load("BIWALK_TOL_SYMMETRY", t.symmetry);
  load("BIWALK_TOL_OFF_DIAG_STOP", t.off_diag_stop);
  load("BIWALK_TOL_EIG_RESIDUAL", t.eig_residual);
  load("BIWALK_TOL_CLUSTER", t.cluster);
  load("BIWALK_TOL_MU_WINDOW", t.mu_window);
  load("BIWALK_TOL_KERNEL", t.kernel);
  load("BIWALK_TOL_SPECTRAL_CHECK", t.spectral_check);
  load("BIWALK_TOL_ORTHOGONALITY", t.orthogonality);
  load("BIWALK_TOL_IS_FORM_REAL", t.is_form_real);
  load("BIWALK_TOL_ARC_WEIGHT", t.arc_weight);
  load("BIWALK_TOL_ENTRY_RULE", t.entry_rule);
  load("BIWALK_TOL_GAMMA_RESIDUAL", t.gamma_residual);
  load("BIWALK_TOL_PST_PERMUTATION", t.pst_permutation);
  load("BIWALK_TOL_PST_GENERIC", t.pst_generic);
  load("BIWALK_TOL_POWER_DRIFT", t.power_drift);
  load("BIWALK_TOL_EQUIVALENCE", t.equivalence);
  return t;
}

}  // namespace biwalk
