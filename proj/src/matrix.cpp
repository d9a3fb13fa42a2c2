#include "projconst/matrix.hpp"

#include <cmath>

#include "projconst/errors.hpp"

namespace projconst {

Matrix::Matrix(std::initializer_list<std::initializer_list<cx>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw DimensionError("ragged initializer for Matrix");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

cx Matrix::trace() const {
  cx t = 0.0;
  std::size_t k = rows_ < cols_ ? rows_ : cols_;
  for (std::size_t i = 0; i < k; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const cx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0.0;
  for (const cx& v : a_) s = std::max(s, std::abs(v));
  return s;
}

bool Matrix::is_hermitian(double rel_tol) const {
  if (rows_ != cols_) return false;
  double scale = frobenius_norm();
  double tol = rel_tol * (scale > 0.0 ? scale : 1.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool Matrix::is_real(double tol) const {
  for (const cx& v : a_)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

std::vector<cx> Matrix::row(std::size_t r) const {
  return std::vector<cx>(a_.begin() + static_cast<long>(r * cols_),
                         a_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<cx> Matrix::col(std::size_t c) const {
  std::vector<cx> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(cx s) {
  for (cx& v : a_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      cx arv = a(r, k);
      if (arv == cx(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c) += arv * b(k, c);
    }
  }
  return m;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cx s, Matrix a) { return a *= s; }

cx dot(const std::vector<cx>& u, const std::vector<cx>& v) {
  if (u.size() != v.size()) throw DimensionError("dot product length mismatch");
  cx s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double norm2(const std::vector<cx>& v) {
  double s = 0.0;
  for (const cx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<cx> matvec(const Matrix& m, const std::vector<cx>& v) {
  if (m.cols() != v.size()) throw DimensionError("matvec shape mismatch");
  std::vector<cx> out(m.rows(), cx(0.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

double inf_operator_norm(const Matrix& m) {
  if (m.empty()) throw DimensionError("inf_operator_norm: empty matrix");
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::abs(m(r, c));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace projconst
