#include "projconst/line_system.hpp"

#include <cmath>
#include <string>

#include "projconst/eigen.hpp"
#include "projconst/errors.hpp"

namespace projconst {

void LineSystem::validate(double tol) const {
  if (n == 0 || count() == 0) throw DomainError("LineSystem: empty system");
  if (vectors.cols() != n) throw ShapeError("LineSystem: vector length differs from ambient dimension");
  if (field == Field::Real && !vectors.is_real(0.0))
    throw ShapeError("LineSystem: real field with nonzero imaginary entries");
  for (std::size_t s = 0; s < count(); ++s) {
    double nrm = norm2(vectors.row(s));
    if (std::abs(nrm - 1.0) > tol)
      throw DomainError("LineSystem: row " + std::to_string(s) + " is not a unit vector");
  }
  if (weights) {
    if (weights->size() != count()) throw ShapeError("LineSystem: weight count differs from vector count");
    double sum = 0.0;
    for (double w : *weights) {
      if (w < 0.0) throw DomainError("LineSystem: negative weight");
      sum += w;
    }
    if (std::abs(sum - 1.0) > tol) throw DomainError("LineSystem: weights do not sum to 1");
  }
}

bool LineSystem::lines_distinct(double tol) const {
  Matrix g = gram_matrix(*this);
  for (std::size_t s = 0; s < count(); ++s)
    for (std::size_t t = s + 1; t < count(); ++t)
      if (std::abs(g(s, t)) > 1.0 - tol) return false;
  return true;
}

ExtremalParameters extremal_parameters(std::size_t n, Field field) {
  if (n == 0) throw DomainError("extremal_parameters: dimension must be positive");
  if (field == Field::Real)
    return {n * (n + 1) / 2, 1.0 / std::sqrt(double(n) + 2.0)};
  return {n * n, 1.0 / std::sqrt(double(n) + 1.0)};
}

Matrix gram_matrix(const LineSystem& s) {
  if (s.vectors.cols() != s.n) throw ShapeError("gram_matrix: mixed dimensions");
  const std::size_t N = s.count();
  Matrix g(N, N);
  for (std::size_t a = 0; a < N; ++a) {
    auto ra = s.vectors.row(a);
    for (std::size_t b = 0; b < N; ++b) g(a, b) = dot(ra, s.vectors.row(b));
  }
  return g;
}

EquiangularCertificate verify_equiangular(const LineSystem& s, double tol) {
  const std::size_t N = s.count();
  if (N < 2) throw DomainError("verify_equiangular: need at least two lines");
  s.validate();
  Matrix g = gram_matrix(s);

  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      sum += std::abs(g(a, b));
      ++pairs;
    }
  const double alpha = sum / double(pairs);

  double dev = 0.0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      dev = std::max(dev, std::abs(std::abs(g(a, b)) - alpha));

  ExtremalParameters ext = extremal_parameters(s.n, s.field);
  EquiangularCertificate cert;
  cert.common_angle = alpha;
  cert.max_deviation = dev;
  cert.gerzon_saturated = (N == ext.n_max);
  cert.forced_angle_matched = std::abs(alpha - ext.alpha) <= tol;
  return cert;
}

void canonicalize_lines(LineSystem& s, double tol) {
  for (std::size_t r = 0; r < s.count(); ++r) {
    for (std::size_t c = 0; c < s.n; ++c) {
      cx v = s.vectors(r, c);
      if (std::abs(v) > tol) {
        cx phase = std::conj(v) / std::abs(v);
        for (std::size_t j = 0; j < s.n; ++j) s.vectors(r, j) *= phase;
        s.vectors(r, c) = cx(std::abs(v), 0.0);
        break;
      }
    }
  }
}

LineSystem with_uniform_weights(LineSystem s) {
  s.weights = std::vector<double>(s.count(), 1.0 / double(s.count()));
  return s;
}

namespace {

LineSystem hexagon_system() {
  LineSystem s;
  s.field = Field::Real;
  s.n = 2;
  s.vectors = Matrix(3, 2);
  const double angles[3] = {0.0, 2.0 * M_PI / 3.0, 4.0 * M_PI / 3.0};
  for (int i = 0; i < 3; ++i) {
    s.vectors(i, 0) = std::cos(angles[i]);
    s.vectors(i, 1) = std::sin(angles[i]);
  }
  return s;
}

LineSystem icosahedron_system() {
  LineSystem s;
  s.field = Field::Real;
  s.n = 3;
  const double tau = std::sqrt((std::sqrt(5.0) + 1.0) / 2.0);
  const double sig = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
  const double raw[6][3] = {{tau, sig, 0},  {tau, -sig, 0}, {0, tau, sig},
                            {0, tau, -sig}, {sig, 0, tau},  {-sig, 0, tau}};
  const double nrm = std::sqrt(tau * tau + sig * sig);  // 5^{1/4}
  s.vectors = Matrix(6, 3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j) s.vectors(i, j) = raw[i][j] / nrm;
  return s;
}

LineSystem r7_system() {
  // 28 vectors e_i + e_j - (1/4) * ones in the sum-zero hyperplane of R^8,
  // expressed in a Helmert-style orthonormal basis of that hyperplane.
  double helmert[7][8] = {};
  for (int k = 1; k < 8; ++k) {
    double nrm = std::sqrt(double(k) * double(k) + double(k));
    for (int j = 0; j < k; ++j) helmert[k - 1][j] = 1.0 / nrm;
    helmert[k - 1][k] = -double(k) / nrm;
  }
  LineSystem s;
  s.field = Field::Real;
  s.n = 7;
  s.vectors = Matrix(28, 7);
  std::size_t row = 0;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j, ++row) {
      double v[8];
      for (int m = 0; m < 8; ++m) v[m] = -0.25;
      v[i] += 1.0;
      v[j] += 1.0;
      double coords[7];
      double nrm = 0.0;
      for (int k = 0; k < 7; ++k) {
        double c = 0.0;
        for (int m = 0; m < 8; ++m) c += helmert[k][m] * v[m];
        coords[k] = c;
        nrm += c * c;
      }
      nrm = std::sqrt(nrm);
      for (int k = 0; k < 7; ++k) s.vectors(row, k) = coords[k] / nrm;
    }
  }
  return s;
}

LineSystem c2_tetrahedron_system() {
  // Four qubit states whose Bloch vectors form a regular tetrahedron; the
  // pairwise squared overlap is (1 + b_i . b_j)/2 = 1/3.
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const double bloch[4][3] = {{0, 0, 1},
                              {2.0 * s2 / 3.0, 0, -1.0 / 3.0},
                              {-s2 / 3.0, s6 / 3.0, -1.0 / 3.0},
                              {-s2 / 3.0, -s6 / 3.0, -1.0 / 3.0}};
  LineSystem s;
  s.field = Field::Complex;
  s.n = 2;
  s.vectors = Matrix(4, 2);
  for (int i = 0; i < 4; ++i) {
    const double x = bloch[i][0], y = bloch[i][1], z = bloch[i][2];
    const double theta = std::acos(z);
    const double phi = std::atan2(y, x);
    s.vectors(i, 0) = cx(std::cos(theta / 2.0), 0.0);
    s.vectors(i, 1) = std::polar(std::sin(theta / 2.0), phi);
  }
  return s;
}

LineSystem c3_nine_line_system() {
  // (e_j - w^k e_{j+1}) / sqrt(2), j cyclic in {0,1,2}, k in {0,1,2}.
  const cx w = std::polar(1.0, 2.0 * M_PI / 3.0);
  LineSystem s;
  s.field = Field::Complex;
  s.n = 3;
  s.vectors = Matrix(9, 3);
  std::size_t row = 0;
  for (int j = 0; j < 3; ++j) {
    cx wk(1.0, 0.0);
    for (int k = 0; k < 3; ++k, ++row) {
      s.vectors(row, std::size_t(j)) = 1.0 / std::sqrt(2.0);
      s.vectors(row, std::size_t((j + 1) % 3)) = -wk / std::sqrt(2.0);
      wk *= w;
    }
  }
  return s;
}

}  // namespace

LineSystem construct_known_system(std::size_t n, Field field) {
  LineSystem s;
  if (field == Field::Real && n == 2) {
    s = hexagon_system();
  } else if (field == Field::Real && n == 3) {
    s = icosahedron_system();
  } else if (field == Field::Real && n == 7) {
    s = r7_system();
  } else if (field == Field::Complex && n == 2) {
    s = c2_tetrahedron_system();
  } else if (field == Field::Complex && n == 3) {
    s = c3_nine_line_system();
  } else {
    throw UnsupportedError("construct_known_system: no construction for (" + std::to_string(n) +
                           ", " + field_name(field) + ")" +
                           (field == Field::Real && n == 23
                                ? "; the 276-line system in R^23 is not provided"
                                : ""));
  }
  canonicalize_lines(s);
  s.validate();
  return s;
}

double tight_frame_residual(const LineSystem& s) {
  if (!s.weights) throw PreconditionError("tight_frame_residual: weights are required");
  const std::size_t n = s.n, N = s.count();
  Matrix acc(n, n);
  for (std::size_t t = 0; t < N; ++t) {
    auto z = s.vectors.row(t);
    const double w = double(n) * (*s.weights)[t];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) += w * z[i] * std::conj(z[j]);
  }
  acc -= Matrix::identity(n);
  return acc.frobenius_norm();
}

bool rank_one_independence(const LineSystem& s) {
  const std::size_t N = s.count();
  Matrix g = gram_matrix(s);
  Matrix m(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) m(a, b) = std::norm(g(a, b));
  // m is the Frobenius Gram matrix of the operators z_s z_s*, hence PSD;
  // its rank is the number of eigenvalues above threshold.
  auto eig = hermitian_eigendecomposition(m);
  std::size_t rank = 0;
  for (double ev : eig.eigenvalues)
    if (ev > 1e-9) ++rank;
  return rank == N;
}

}  // namespace projconst
