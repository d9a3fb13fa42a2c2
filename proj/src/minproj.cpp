#include "projconst/minproj.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "projconst/eigen.hpp"
#include "projconst/errors.hpp"
#include "projconst/parallel.hpp"
#include "projconst/rng.hpp"
#include "projconst/simplex.hpp"

namespace projconst {

namespace {

/// Inverse of a Hermitian positive definite matrix via its eigensystem.
Matrix hermitian_inverse(const Matrix& m, const char* what) {
  auto eig = hermitian_eigendecomposition(m);
  const double top = eig.eigenvalues.back();
  if (top <= 0.0 || eig.eigenvalues.front() < 1e-20 * top) throw ShapeError(what);
  const std::size_t n = m.rows();
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k)) / eig.eigenvalues[k];
      inv(i, j) = acc;
    }
  return inv;
}

ProjectionResult result_from_projection(Matrix p, const Matrix& f) {
  ProjectionResult res;
  res.norm = inf_operator_norm(p);
  res.idempotency_residual = (p * p - p).frobenius_norm();
  res.range_residual = (p * f - f).frobenius_norm();
  res.P = std::move(p);
  return res;
}

}  // namespace

void SubspaceBasis::validate() const {
  if (n == 0 || N == 0 || n > N) throw ShapeError("SubspaceBasis: need 1 <= n <= N");
  if (F.rows() != N || F.cols() != n) throw ShapeError("SubspaceBasis: F must be N x n");
  if (field == Field::Real && !F.is_real(0.0))
    throw ShapeError("SubspaceBasis: real field with nonzero imaginary entries");
  Matrix g = F.adjoint() * F;
  auto eig = hermitian_eigendecomposition(g);
  const double top = eig.eigenvalues.back();
  if (top <= 0.0 || eig.eigenvalues.front() < 1e-20 * top)
    throw ShapeError("SubspaceBasis: columns of F are rank deficient");
}

ProjectionResult orthogonal_projection(const LineSystem& s) {
  s.validate();
  const std::size_t N = s.count(), n = s.n;
  if (N < n) throw ShapeError("orthogonal_projection: fewer vectors than dimensions");
  SubspaceBasis basis = embedding_basis(s);
  basis.validate();  // spanning check
  Matrix p = (cx(double(n) / double(N), 0.0)) * gram_matrix(s);
  return result_from_projection(std::move(p), basis.F);
}

SubspaceBasis embedding_basis(const LineSystem& s) {
  SubspaceBasis b;
  b.field = s.field;
  b.N = s.count();
  b.n = s.n;
  b.F = cx(std::sqrt(double(s.n)), 0.0) * s.vectors;
  return b;
}

namespace {

ProjectionResult minimal_projection_lp(const SubspaceBasis& basis) {
  const std::size_t N = basis.N, n = basis.n;
  // Layout: t | C+ (n*N) | C- (n*N) | A+ (N*N) | A- (N*N) | row slacks (N)
  const std::size_t c_pos = 1;
  const std::size_t c_neg = c_pos + n * N;
  const std::size_t a_pos = c_neg + n * N;
  const std::size_t a_neg = a_pos + N * N;
  const std::size_t slack = a_neg + N * N;
  const std::size_t nvars = slack + N;

  lp::Problem p;
  p.nvars = nvars;
  p.c.assign(nvars, 0.0);
  p.c[0] = 1.0;

  auto fr = [&](std::size_t s, std::size_t j) { return basis.F(s, j).real(); };

  // A - F C = 0, entrywise
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) {
      std::vector<double> row(nvars, 0.0);
      row[a_pos + s * N + t] = 1.0;
      row[a_neg + s * N + t] = -1.0;
      for (std::size_t j = 0; j < n; ++j) {
        row[c_pos + j * N + t] -= fr(s, j);
        row[c_neg + j * N + t] += fr(s, j);
      }
      p.rows.push_back(std::move(row));
      p.rhs.push_back(0.0);
    }
  // C F = Id
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> row(nvars, 0.0);
      for (std::size_t t = 0; t < N; ++t) {
        row[c_pos + j * N + t] += fr(t, k);
        row[c_neg + j * N + t] -= fr(t, k);
      }
      p.rows.push_back(std::move(row));
      p.rhs.push_back(j == k ? 1.0 : 0.0);
    }
  // row sums below the epigraph variable, with A+ already eliminated through
  // the link rows (A+ = A- + FC), which leaves the A+ columns as unit vectors
  // and gives the solver a ready-made crash basis
  for (std::size_t s = 0; s < N; ++s) {
    std::vector<double> row(nvars, 0.0);
    for (std::size_t t = 0; t < N; ++t) {
      row[a_neg + s * N + t] = 2.0;
      for (std::size_t j = 0; j < n; ++j) {
        row[c_pos + j * N + t] += fr(s, j);
        row[c_neg + j * N + t] -= fr(s, j);
      }
    }
    row[0] = -1.0;
    row[slack + s] = 1.0;
    p.rows.push_back(std::move(row));
    p.rhs.push_back(0.0);
  }

  lp::Solution sol = lp::solve(p);
  if (sol.status != lp::Status::Optimal)
    throw SolverError("minimal_projection: LP did not reach optimality (status " +
                      std::to_string(int(sol.status)) + ")");

  Matrix c(n, N);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < N; ++t)
      c(j, t) = sol.x[c_pos + j * N + t] - sol.x[c_neg + j * N + t];
  return result_from_projection(basis.F * c, basis.F);
}

ProjectionResult minimal_projection_descent(const SubspaceBasis& basis, const DescentOptions& opts) {
  const std::size_t N = basis.N, n = basis.n;
  const Matrix gram_inv = hermitian_inverse(basis.F.adjoint() * basis.F,
                                            "minimal_projection: rank-deficient basis");
  const Matrix pinv = gram_inv * basis.F.adjoint();  // n x N

  auto project_tangent = [&](Matrix& d) { d -= (d * basis.F) * pinv; };

  auto smoothed_value = [&](const Matrix& p, double eps, double kappa) {
    std::vector<double> rows(N, 0.0);
    for (std::size_t s = 0; s < N; ++s) {
      double acc = 0.0;
      for (std::size_t t = 0; t < N; ++t) acc += std::sqrt(std::norm(p(s, t)) + eps * eps);
      rows[s] = acc;
    }
    const double m = *std::max_element(rows.begin(), rows.end());
    double z = 0.0;
    for (double r : rows) z += std::exp(kappa * (r - m));
    return m + std::log(z) / kappa;
  };

  struct Local {
    double value = std::numeric_limits<double>::infinity();
    Matrix c;
  };
  std::vector<Local> results(std::size_t(std::max(opts.restarts, 1)));

  auto run_one = [&](std::size_t r) {
    Rng rng(opts.seed + r);
    Matrix d(n, N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < N; ++j) d(i, j) = 0.3 * rng.gaussian_scalar(basis.field);
    project_tangent(d);

    double step = 0.05;
    for (int it = 0; it < opts.iters; ++it) {
      const double eps = std::max(1e-8, 1e-2 * std::pow(0.995, it));
      const double kappa = 30.0 + 0.05 * it;

      Matrix c = pinv + d;
      Matrix p = basis.F * c;
      std::vector<double> rows(N, 0.0);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) rows[s] += std::sqrt(std::norm(p(s, t)) + eps * eps);
      const double m = *std::max_element(rows.begin(), rows.end());
      double z = 0.0;
      std::vector<double> w(N, 0.0);
      for (std::size_t s = 0; s < N; ++s) {
        w[s] = std::exp(kappa * (rows[s] - m));
        z += w[s];
      }
      const double f0 = m + std::log(z) / kappa;

      Matrix gp(N, N);
      for (std::size_t s = 0; s < N; ++s) {
        const double ws = w[s] / z;
        for (std::size_t t = 0; t < N; ++t)
          gp(s, t) = ws * p(s, t) / std::sqrt(std::norm(p(s, t)) + eps * eps);
      }
      Matrix gc = basis.F.adjoint() * gp;
      project_tangent(gc);

      Matrix d2 = d;
      d2 -= cx(step, 0.0) * gc;
      const double f1 = smoothed_value(basis.F * (pinv + d2), eps, kappa);
      if (f1 <= f0) {
        d = std::move(d2);
        step *= 1.05;
      } else {
        step *= 0.6;
      }
    }
    Matrix c = pinv + d;
    results[r].value = inf_operator_norm(basis.F * c);
    results[r].c = std::move(c);
  };

  parallel_for_index(results.size(), opts.threads, run_one);

  // deterministic merge: minimum value, earliest seed on ties
  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].value < results[best].value) best = r;
  return result_from_projection(basis.F * results[best].c, basis.F);
}

}  // namespace

ProjectionResult minimal_projection(const SubspaceBasis& basis, MinProjMethod method,
                                    const DescentOptions& opts) {
  basis.validate();
  if (method == MinProjMethod::LpExact) {
    if (basis.field != Field::Real)
      throw UnsupportedError("minimal_projection: lp-exact requires the real field; use descent");
    return minimal_projection_lp(basis);
  }
  return minimal_projection_descent(basis, opts);
}

TraceDualityWitness make_witness(const Matrix& u, const SubspaceBasis& basis) {
  basis.validate();
  if (u.rows() != basis.N || u.cols() != basis.N)
    throw InvalidWitnessError("witness: u must be N x N");
  double colsum = 0.0;
  for (std::size_t t = 0; t < basis.N; ++t) {
    double colmax = 0.0;
    for (std::size_t s = 0; s < basis.N; ++s) colmax = std::max(colmax, std::abs(u(s, t)));
    colsum += colmax;
  }
  if (colsum <= 0.0) throw InvalidWitnessError("witness: zero map");

  TraceDualityWitness w;
  w.u = cx(1.0 / colsum, 0.0) * u;
  w.column_norm_sum = 1.0;

  const Matrix gram_inv = hermitian_inverse(basis.F.adjoint() * basis.F,
                                            "witness: rank-deficient basis");
  const Matrix uf = w.u * basis.F;
  const Matrix m = (gram_inv * basis.F.adjoint()) * uf;  // coordinates of u|E
  if ((uf - basis.F * m).frobenius_norm() > 1e-8)
    throw InvalidWitnessError("witness: u does not map E into E within 1e-8");
  w.trace_on_E = m.trace().real();
  return w;
}

double trace_duality_lower_bound(const TraceDualityWitness& w, const SubspaceBasis& basis) {
  TraceDualityWitness checked = make_witness(w.u, basis);
  return checked.trace_on_E;
}

Matrix sign_gram_witness(const LineSystem& s) {
  Matrix g = gram_matrix(s);
  const std::size_t N = s.count();
  Matrix u(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) u(a, b) = sgn(g(a, b)) / double(N);
  return u;
}

}  // namespace projconst
