#pragma once

#include <vector>

#include "biwalk/matrix.hpp"
#include "biwalk/tolerances.hpp"

namespace biwalk {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // orthonormal columns, vectors.col(j) <-> values[j]
};

struct HermitianEigenDecomposition {
  std::vector<double> values;  // ascending, real
  ComplexMatrix vectors;       // unitary columns
};

// Cyclic Jacobi. Requires ||A - A^T||_max < tol.symmetry (NonSymmetric),
// stops when the off-diagonal Frobenius norm drops below
// tol.off_diag_stop * ||A||_F, errors NoConvergence after 100 sweeps.
EigenDecomposition eigh_symmetric(const RealMatrix& a, const Tolerances& tol = {});

// Hermitian solve through the 2n x 2n real embedding [[Re, -Im], [Im, Re]];
// duplicate pairs are collapsed back to n complex eigenvectors.
HermitianEigenDecomposition eigh_hermitian(const ComplexMatrix& h, const Tolerances& tol = {});

// Groups an ascending list into maximal runs with consecutive gaps < tol.
// Returns index groups.
std::vector<std::vector<int>> cluster_values(const std::vector<double>& ascending, double tol);

// exp(i t H) for Hermitian H, via the eigendecomposition. Unitary by construction.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t, const Tolerances& tol = {});

}  // namespace biwalk
