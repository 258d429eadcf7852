#include "biwalk/exact_int.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "biwalk/errors.hpp"

namespace biwalk {

ExactIntResult exact_rank_det(const IntMatrix& m) {
  const int rows = int(m.size());
  const int cols = rows ? int(m[0].size()) : 0;
  for (const auto& row : m)
    require(int(row.size()) == cols, Err::BadSize, "ragged integer matrix");

  ExactIntResult out;
  if (rows == 0 || cols == 0) {
    if (rows == cols) out.determinant = BigInt(1);  // empty product
    return out;
  }

  std::vector<std::vector<BigInt>> w(rows, std::vector<BigInt>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w[i][j] = m[i][j];

  const int steps = std::min(rows, cols);
  BigInt prev = 1;
  int sign = 1;
  int rank = 0;
  for (int k = 0; k < steps; ++k) {
    // full pivoting: any nonzero in the trailing block keeps rank exact
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (w[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) {
      std::swap(w[pi], w[k]);
      sign = -sign;
    }
    if (pj != k) {
      for (int i = 0; i < rows; ++i) std::swap(w[i][pj], w[i][k]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i)
      for (int j = k + 1; j < cols; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;  // exact by Sylvester
    prev = w[k][k];
    ++rank;
  }
  out.rank = rank;
  if (rows == cols) {
    if (rank < rows)
      out.determinant = BigInt(0);
    else
      out.determinant = sign > 0 ? w[rows - 1][rows - 1] : -w[rows - 1][rows - 1];
  }
  return out;
}

IntMatrix to_int_matrix(const RealMatrix& m) {
  IntMatrix out(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      double v = m(i, j);
      long long r = llround(v);
      require(std::fabs(v - double(r)) < 1e-9, Err::InternalInconsistency,
              "matrix entry is not an integer");
      out[i][j] = r;
    }
  return out;
}

}  // namespace biwalk
