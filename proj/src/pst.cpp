#include "biwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <tuple>

#include "biwalk/eigen.hpp"
#include "biwalk/errors.hpp"

namespace biwalk {

namespace {
constexpr double kPi = std::numbers::pi;
}

PstScanReport discrete_pst_scan(const WalkOperator& w, long long k_max, double pst_tol,
                                PowerMode mode, const Tolerances& tol) {
  require(k_max >= 1, Err::BadSize, "k_max must be positive");
  require(pst_tol > 0 && pst_tol < 1, Err::BadSize, "pst_tol must lie in (0, 1)");
  const int m = w.bundle.num_states;
  if (mode == PowerMode::Auto) mode = m <= 64 ? PowerMode::Eigen : PowerMode::Multiply;

  PstScanReport out;
  out.k_max = k_max;
  out.pst_tol = pst_tol;
  out.fidelity_suprema = RealMatrix(m, m);
  out.suprema_step.assign(size_t(m) * m, -1);

  auto record = [&](long long k, int a, int b, double fid) {
    if (a == b) return;
    if (fid > out.fidelity_suprema(a, b)) {
      out.fidelity_suprema(a, b) = fid;
      out.suprema_step[size_t(a) * m + b] = k;
    }
    if (fid >= 1.0 - pst_tol) out.events.push_back({a, b, k, fid});
  };

  if (mode == PowerMode::Eigen) {
    SpectralDecomposition s = spectral_decomposition(w, tol);
    const int r = int(s.components.size());
    std::vector<cdouble> phase(r), step(r);
    for (int i = 0; i < r; ++i) {
      phase[i] = 1.0;
      step[i] = std::exp(cdouble(0.0, s.components[i].theta));
    }
    std::vector<cdouble> buffer(size_t(m) * m);
    for (long long k = 1; k <= k_max; ++k) {
      for (int i = 0; i < r; ++i) phase[i] *= step[i];
      std::fill(buffer.begin(), buffer.end(), cdouble(0, 0));
      for (int i = 0; i < r; ++i) {
        const ComplexMatrix& e = s.components[i].projector;
        const cdouble ph = phase[i];
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b) buffer[size_t(a) * m + b] += ph * e(a, b);
      }
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (a != b) record(k, a, b, std::abs(buffer[size_t(a) * m + b]));
    }
  } else {
    RealMatrix power = RealMatrix::identity(m);
    for (long long k = 1; k <= k_max; ++k) {
      power = w.u * power;
      if (k % 1000 == 0) {
        double drift = max_abs_diff(power.transposed() * power, RealMatrix::identity(m));
        require(drift < tol.power_drift, Err::DriftExceeded,
                "unitarity drift " + std::to_string(drift) + " at step " + std::to_string(k) +
                    "; use the eigendecomposition mode");
      }
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (a != b) record(k, a, b, std::fabs(power(a, b)));
    }
  }

  std::sort(out.events.begin(), out.events.end(), [](const PstEvent& x, const PstEvent& y) {
    return std::tie(x.step, x.source, x.target) < std::tie(y.step, y.source, y.target);
  });

  std::set<std::pair<int, int>> seen;
  for (const auto& e : out.events) seen.insert({e.source, e.target});
  for (auto [a, b] : seen)
    if (!seen.count({b, a})) out.one_directional.push_back({a, b});
  return out;
}

ComplexMatrix continuous_evolve(const ComplexMatrix& h, double t, const Tolerances& tol) {
  return expm_hermitian(h, t, tol);
}

double upst_weight(int n, int s, int t) {
  require(n >= 4 && n % 2 == 0, Err::BadSize, "weights need even n >= 4");
  require(0 <= s && s < n - 1 && 0 <= t && t < n - 1 && s != t, Err::BadLabel,
          "weight needs two distinct states in 0..n-2");
  // alignment exponent between the two stitched eigenvector patterns
  double alpha;
  if (s % 2 == 1 && t % 2 == 1)
    alpha = double(t - s) / 2.0;
  else if (s % 2 == 0 && t % 2 == 1)
    alpha = double(s + t + 1) / 2.0;
  else if (s % 2 == 1 && t % 2 == 0)
    alpha = -double(s + t + 1) / 2.0;
  else
    alpha = double(s - t) / 2.0;

  const double base = 2.0 * kPi / double(n - 1);
  double sum = 0;
  for (int r = 1; r <= n / 2 - 1; ++r)
    sum += (base * double(r)) * std::sin(base * double(r) * alpha);
  return 2.0 / double(n - 1) * sum;
}

UpstGraph upst_generate(int n) {
  require(n >= 4 && n % 2 == 0, Err::BadSize, "universal transfer needs even n >= 4");
  const int m = n - 1;  // one vertex per state of the path walk
  UpstGraph g;
  g.n = n;
  g.weights = RealMatrix(m, m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (s != t) g.weights(s, t) = upst_weight(n, s, t);
  g.h = scaled(cdouble(0.0, 1.0), g.weights);
  return g;
}

UpstSchedule upst_verify(const UpstGraph& g, double pst_tol, const Tolerances& tol) {
  const int m = g.weights.rows();
  UpstSchedule out;
  out.step_for_pair.assign(m, std::vector<long long>(m, -1));

  for (long long k = 1; k <= g.n - 1; ++k) {
    ComplexMatrix t = continuous_evolve(g.h, double(k), tol);
    for (int a = 0; a < m; ++a) {
      int hits = 0;
      for (int b = 0; b < m; ++b) {
        double fid = std::abs(t(a, b));
        bool near_one = std::fabs(fid - 1.0) <= pst_tol;
        bool near_zero = fid <= pst_tol;
        require(near_one || near_zero, Err::NotUniversal,
                "step " + std::to_string(k) + " is not a permutation: |entry(" +
                    std::to_string(a) + ", " + std::to_string(b) + ")| = " + std::to_string(fid));
        if (near_one) {
          ++hits;
          if (a != b && out.step_for_pair[a][b] < 0) {
            out.step_for_pair[a][b] = k;
            out.events.push_back({a, b, k, fid});
          }
        }
      }
      require(hits == 1, Err::NotUniversal,
              "step " + std::to_string(k) + " moves state " + std::to_string(a) +
                  " to " + std::to_string(hits) + " places");
    }
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && out.step_for_pair[a][b] < 0)
        fail(Err::NotUniversal, "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ") is never realized within n - 1 steps");
  out.universal = true;
  return out;
}

}  // namespace biwalk
