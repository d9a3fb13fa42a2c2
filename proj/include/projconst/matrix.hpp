#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "projconst/field.hpp"

namespace projconst {

/// Dense row-major matrix over the complex numbers. Real-field data lives in
/// the same type with zero imaginary parts.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, cx(0.0, 0.0)) {}
  Matrix(std::initializer_list<std::initializer_list<cx>> init);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  cx& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const cx& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const std::vector<cx>& data() const { return a_; }

  Matrix adjoint() const;    // conjugate transpose
  Matrix transpose() const;  // plain transpose

  cx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double rel_tol) const;
  bool is_real(double tol = 0.0) const;

  /// Row r as a vector of length cols().
  std::vector<cx> row(std::size_t r) const;
  std::vector<cx> col(std::size_t c) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cx s);

 private:
  std::size_t rows_, cols_;
  std::vector<cx> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(cx s, Matrix a);

/// <u, v> with the second argument conjugated.
cx dot(const std::vector<cx>& u, const std::vector<cx>& v);
double norm2(const std::vector<cx>& v);
std::vector<cx> matvec(const Matrix& m, const std::vector<cx>& v);

/// l_inf -> l_inf operator norm: the maximal row sum of entry moduli.
/// Throws DimensionError on an empty matrix.
double inf_operator_norm(const Matrix& m);

}  // namespace projconst
