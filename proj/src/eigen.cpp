#include "projconst/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projconst/errors.hpp"

namespace projconst {

namespace {

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

HermitianEigenResult hermitian_eigendecomposition(const Matrix& m) {
  if (m.empty() || m.rows() != m.cols())
    throw ShapeError("hermitian_eigendecomposition: matrix must be square and nonempty");
  if (!m.is_hermitian(1e-12))
    throw ShapeError("hermitian_eigendecomposition: input is not Hermitian within 1e-12");

  const std::size_t n = m.rows();
  Matrix a = m;
  // Symmetrize away representation noise so the iteration preserves
  // Hermitian structure exactly.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = cx(a(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      cx v = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }
  Matrix v = Matrix::identity(n);

  const double scale = m.frobenius_norm();
  const double tol = scale > 0.0 ? 1e-12 * scale : 1e-14;
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a) > tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq <= tol / double(n)) continue;

        // Phase factor reduces the 2x2 block to the real symmetric case;
        // then a standard Jacobi rotation annihilates the off-diagonal.
        const cx u = a(p, q) / apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const cx upp = c;
        const cx upq = s;
        const cx uqp = -s * std::conj(u);
        const cx uqq = c * std::conj(u);

        // A <- U* A U, acting only on rows/cols p and q.
        for (std::size_t i = 0; i < n; ++i) {
          const cx aip = a(i, p);
          const cx aiq = a(i, q);
          a(i, p) = aip * upp + aiq * uqp;
          a(i, q) = aip * upq + aiq * uqq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const cx api = a(p, i);
          const cx aqi = a(q, i);
          a(p, i) = std::conj(upp) * api + std::conj(uqp) * aqi;
          a(q, i) = std::conj(upq) * api + std::conj(uqq) * aqi;
        }
        a(p, q) = cx(0.0, 0.0);
        a(q, p) = cx(0.0, 0.0);
        a(p, p) = cx(a(p, p).real(), 0.0);
        a(q, q) = cx(a(q, q).real(), 0.0);

        for (std::size_t i = 0; i < n; ++i) {
          const cx vip = v(i, p);
          const cx viq = v(i, q);
          v(i, p) = vip * upp + viq * uqp;
          v(i, q) = vip * upq + viq * uqq;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eig[x] < eig[y]; });

  HermitianEigenResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    res.eigenvalues[k] = eig[order[k]];
    for (std::size_t i = 0; i < n; ++i) res.eigenvectors(i, k) = v(i, order[k]);
  }
  return res;
}

}  // namespace projconst
