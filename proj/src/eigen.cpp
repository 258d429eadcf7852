#include "biwalk/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "biwalk/errors.hpp"

namespace biwalk {
namespace {

double frobenius(const RealMatrix& a) {
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double off_diagonal_norm(const RealMatrix& a) {
  double s = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p, q), accumulated into v.
void rotate(RealMatrix& a, RealMatrix& v, int p, int q) {
  const int n = a.rows();
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const double app = a(p, p), aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - s * aiq;
    a(p, i) = a(i, p);
    a(i, q) = s * aip + c * aiq;
    a(q, i) = a(i, q);
  }
  for (int i = 0; i < n; ++i) {
    const double vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

}  // namespace

EigenDecomposition eigh_symmetric(const RealMatrix& a, const Tolerances& tol) {
  require(a.rows() == a.cols(), Err::BadSize, "eigh_symmetric needs a square matrix");
  const int n = a.rows();
  double asym = max_abs_diff(a, a.transposed());
  require(asym < tol.symmetry, Err::NonSymmetric,
          "max |A - A^T| = " + std::to_string(asym));

  RealMatrix work = a;
  // exact symmetrization so rotations stay consistent
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double m = 0.5 * (work(i, j) + work(j, i));
      work(i, j) = m;
      work(j, i) = m;
    }
  RealMatrix v = RealMatrix::identity(n);

  const double stop = tol.off_diag_stop * frobenius(work);
  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(work) <= stop) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(work, v, p, q);
  }
  if (!converged && off_diagonal_norm(work) > stop)
    fail(Err::NoConvergence, "Jacobi did not reach the off-diagonal target");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return work(i, i) < work(j, j); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = work(idx[j], idx[j]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, idx[j]);
  }

  // residual acceptance, relative to the matrix scale
  double scale = std::max(1.0, a.max_abs());
  RealMatrix lhs = a * out.vectors;
  double resid = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      resid = std::max(resid, std::fabs(lhs(i, j) - out.values[j] * out.vectors(i, j)));
  require(resid < tol.eig_residual * scale, Err::NoConvergence,
          "eigen residual " + std::to_string(resid));
  return out;
}

std::vector<std::vector<int>> cluster_values(const std::vector<double>& ascending, double tol) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < int(ascending.size()); ++i) {
    if (i > 0 && ascending[i] - ascending[i - 1] < tol) {
      groups.back().push_back(i);
    } else {
      groups.push_back({i});
    }
  }
  return groups;
}

HermitianEigenDecomposition eigh_hermitian(const ComplexMatrix& h, const Tolerances& tol) {
  require(h.rows() == h.cols(), Err::BadSize, "eigh_hermitian needs a square matrix");
  const int n = h.rows();
  double dev = max_abs_diff(h, h.adjoint());
  require(dev < tol.symmetry, Err::NonHermitian, "max |H - H*| = " + std::to_string(dev));

  // real embedding [[Re, -Im], [Im, Re]]; eigenvalues double up
  RealMatrix re = h.real_part(), im = h.imag_part();
  RealMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double a = 0.5 * (re(i, j) + re(j, i));
      double b = 0.5 * (im(i, j) - im(j, i));
      m(i, j) = a;
      m(n + i, n + j) = a;
      m(i, n + j) = -b;
      m(n + i, j) = b;
    }

  EigenDecomposition emb = eigh_symmetric(m, tol);

  double scale = std::max(1.0, h.max_abs());
  auto groups = cluster_values(emb.values, tol.cluster * scale);

  HermitianEigenDecomposition out;
  out.vectors = ComplexMatrix(n, n);
  int filled = 0;
  for (const auto& g : groups) {
    require(g.size() % 2 == 0, Err::InternalInconsistency,
            "odd eigenvalue cluster in the Hermitian embedding");
    const int want = int(g.size()) / 2;
    // images x + i y of the real eigenbasis; they double-cover the complex
    // eigenspace, so Gram-Schmidt with largest-residual selection recovers
    // exactly half of them (picked mass is at least 1/want)
    std::vector<std::vector<cdouble>> cands;
    for (int col : g) {
      std::vector<cdouble> cand(n);
      for (int i = 0; i < n; ++i) cand[i] = {emb.vectors(i, col), emb.vectors(n + i, col)};
      cands.push_back(std::move(cand));
    }
    std::vector<std::vector<cdouble>> basis;
    for (int round = 0; round < want; ++round) {
      int best = -1;
      double best_norm2 = 0;
      for (int c = 0; c < int(cands.size()); ++c) {
        double norm2 = 0;
        for (const cdouble& z : cands[c]) norm2 += std::norm(z);
        if (norm2 > best_norm2) {
          best_norm2 = norm2;
          best = c;
        }
      }
      require(best >= 0 && best_norm2 > 1e-8, Err::InternalInconsistency,
              "embedded eigenspace did not collapse to half dimension");
      std::vector<cdouble> u = cands[best];
      double inv = 1.0 / std::sqrt(best_norm2);
      for (cdouble& z : u) z *= inv;
      for (auto& cand : cands) {
        cdouble ip = 0;
        for (int i = 0; i < n; ++i) ip += std::conj(u[i]) * cand[i];
        for (int i = 0; i < n; ++i) cand[i] -= ip * u[i];
      }
      basis.push_back(std::move(u));
    }
    double value = 0;
    for (int col : g) value += emb.values[col];
    value /= double(g.size());
    for (const auto& u : basis) {
      out.values.push_back(value);
      for (int i = 0; i < n; ++i) out.vectors(i, filled) = u[i];
      ++filled;
    }
  }
  require(filled == n, Err::InternalInconsistency, "eigenvector count mismatch");

  // residual acceptance on the complex problem
  ComplexMatrix lhs = h * out.vectors;
  double resid = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      resid = std::max(resid, std::abs(lhs(i, j) - out.values[j] * out.vectors(i, j)));
  require(resid < tol.eig_residual * scale, Err::NoConvergence,
          "hermitian eigen residual " + std::to_string(resid));
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t, const Tolerances& tol) {
  HermitianEigenDecomposition e = eigh_hermitian(h, tol);
  const int n = h.rows();
  ComplexMatrix scaledv(n, n);
  for (int j = 0; j < n; ++j) {
    cdouble phase = std::exp(cdouble(0.0, t * e.values[j]));
    for (int i = 0; i < n; ++i) scaledv(i, j) = phase * e.vectors(i, j);
  }
  return scaledv * e.vectors.adjoint();
}

}  // namespace biwalk
