#include "biwalk/matrix.hpp"

#include <cassert>
#include <cmath>

namespace biwalk {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::constant(int rows, int cols, double value) {
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = value;
  return m;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double RealMatrix::max_abs() const {
  double m = 0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& re) {
  ComplexMatrix m(re.rows(), re.cols());
  for (int i = 0; i < re.rows(); ++i)
    for (int j = 0; j < re.cols(); ++j) m(i, j) = re(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::from_parts(const RealMatrix& re, const RealMatrix& im) {
  assert(re.rows() == im.rows() && re.cols() == im.cols());
  ComplexMatrix m(re.rows(), re.cols());
  for (int i = 0; i < re.rows(); ++i)
    for (int j = 0; j < re.cols(); ++j) m(i, j) = {re(i, j), im(i, j)};
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexMatrix ComplexMatrix::conjugated() const {
  ComplexMatrix t(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(i, j) = std::conj((*this)(i, j));
  return t;
}

RealMatrix ComplexMatrix::real_part() const {
  RealMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).real();
  return m;
}

RealMatrix ComplexMatrix::imag_part() const {
  RealMatrix m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).imag();
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0;
  for (const cdouble& v : data_) m = std::max(m, std::abs(v));
  return m;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  assert(a.cols() == b.rows());
  RealMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.cols() == b.rows());
  ComplexMatrix r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      cdouble aik = a(i, k);
      if (aik == cdouble(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

ComplexMatrix operator*(cdouble s, const ComplexMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

ComplexMatrix scaled(cdouble s, const RealMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

void accumulate(ComplexMatrix& into, cdouble s, const RealMatrix& a) {
  assert(into.rows() == a.rows() && into.cols() == a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) into(i, j) += s * a(i, j);
}

void accumulate(ComplexMatrix& into, cdouble s, const ComplexMatrix& a) {
  assert(into.rows() == a.rows() && into.cols() == a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) into(i, j) += s * a(i, j);
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  double m = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

std::vector<cdouble> apply_matrix(const RealMatrix& a, const std::vector<cdouble>& x) {
  assert(int(x.size()) == a.cols());
  std::vector<cdouble> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    cdouble acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> apply_matrix(const RealMatrix& a, const std::vector<double>& x) {
  assert(int(x.size()) == a.cols());
  std::vector<double> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    double acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace biwalk
