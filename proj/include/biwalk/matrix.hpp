#pragma once

#include <complex>
#include <vector>

namespace biwalk {

using cdouble = std::complex<double>;

// Dense row-major matrices sized for desk-scale problems. No expression
// templates, no views; everything copies and that is fine at this scale.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0.0) {}

  static RealMatrix identity(int n);
  static RealMatrix constant(int rows, int cols, double value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

  RealMatrix transposed() const;
  double max_abs() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix from_real(const RealMatrix& re);
  static ComplexMatrix from_parts(const RealMatrix& re, const RealMatrix& im);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cdouble& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  cdouble operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugated() const;
  RealMatrix real_part() const;
  RealMatrix imag_part() const;
  double max_abs() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cdouble> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, const ComplexMatrix& a);

// scalar * real -> complex, the workhorse of the projector formula
ComplexMatrix scaled(cdouble s, const RealMatrix& a);
void accumulate(ComplexMatrix& into, cdouble s, const RealMatrix& a);
void accumulate(ComplexMatrix& into, cdouble s, const ComplexMatrix& a);

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cdouble> apply_matrix(const RealMatrix& a, const std::vector<cdouble>& x);
std::vector<double> apply_matrix(const RealMatrix& a, const std::vector<double>& x);

}  // namespace biwalk
