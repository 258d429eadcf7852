#pragma once

#include <vector>

#include "biwalk/matrix.hpp"
#include "biwalk/tolerances.hpp"
#include "biwalk/walk.hpp"

namespace biwalk {

struct PstEvent {
  int source = 0, target = 0;
  long long step = 0;
  double fidelity = 0;
};

enum class PowerMode {
  Auto,      // Eigen for dim <= 64, Multiply above
  Eigen,     // U^k = sum e^{i k theta} E_theta
  Multiply,  // repeated multiplication with drift monitoring
};

struct PstScanReport {
  std::vector<PstEvent> events;  // ordered pairs a != b, by (step, source, target)
  RealMatrix fidelity_suprema;   // per ordered pair over 1..k_max, diagonal 0
  std::vector<long long> suprema_step;  // row-major argmax, -1 where never positive
  std::vector<std::pair<int, int>> one_directional;  // a->b seen, b->a never
  long long k_max = 0;
  double pst_tol = 0;
};

// Records (a -> b, k) whenever |(U^k)_{a,b}| >= 1 - pst_tol.
// Multiply mode checks ||(U^k)^T U^k - I|| every 1000 steps (DriftExceeded).
PstScanReport discrete_pst_scan(const WalkOperator& w, long long k_max, double pst_tol,
                                PowerMode mode = PowerMode::Auto,
                                const Tolerances& tol = {});

// exp(i t H); alias of expm_hermitian with the transfer reading.
ComplexMatrix continuous_evolve(const ComplexMatrix& h, double t,
                                const Tolerances& tol = {});

// Weighted complete graph on the n - 1 states of the even-path walk (n even,
// >= 4) whose Hamiltonian moves every vertex to every other under continuous
// evolution at integer times: H = i W with W the closed-form sine-sum weights.
struct UpstGraph {
  int n = 0;           // path parameter; the graph has n - 1 vertices
  RealMatrix weights;  // skew-symmetric, (n-1) x (n-1)
  ComplexMatrix h;     // i * weights
};

UpstGraph upst_generate(int n);
double upst_weight(int n, int s, int t);

struct UpstSchedule {
  std::vector<std::vector<long long>> step_for_pair;  // (n-1) x (n-1), -1 on diagonal
  std::vector<PstEvent> events;
  bool universal = false;
};

// Walks exp(i k H) for k = 1..n-1; each step must be a permutation to
// pst_tol and every ordered pair must be realized (NotUniversal otherwise).
UpstSchedule upst_verify(const UpstGraph& g, double pst_tol = 1e-9,
                         const Tolerances& tol = {});

}  // namespace biwalk
