#include "projconst/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "projconst/eigen.hpp"
#include "projconst/errors.hpp"
#include "projconst/parallel.hpp"
#include "projconst/rng.hpp"

namespace projconst {

namespace {

Matrix row_gram(const Matrix& z) { return z * z.adjoint(); }

/// Z (Z*Z)^{-1/2}: re-orthonormalizes the columns.
Matrix polar_factor(const Matrix& z) {
  Matrix g = z.adjoint() * z;
  auto eig = hermitian_eigendecomposition(g);
  const std::size_t n = g.rows();
  Matrix isqrt(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cx acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double ev = std::max(eig.eigenvalues[k], 1e-300);
        acc += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k)) / std::sqrt(ev);
      }
      isqrt(i, j) = acc;
    }
  return z * isqrt;
}

void normalize_unit(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s > 0.0)
    for (double& x : v) x /= s;
}

double smoothed_objective(const Matrix& w, const std::vector<double>& lam, double eps) {
  double f = 0.0;
  const std::size_t N = w.rows();
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t)
      f += std::sqrt(std::norm(w(s, t)) + eps * eps) * lam[s] * lam[t];
  return f;
}

}  // namespace

double phi_objective(const PhiState& state) {
  if (state.Z.rows() != state.N || state.Z.cols() != state.n || state.lambda.size() != state.N)
    throw ShapeError("phi_objective: inconsistent state dimensions");
  Matrix w = row_gram(state.Z);
  double f = 0.0;
  for (std::size_t s = 0; s < state.N; ++s)
    for (std::size_t t = 0; t < state.N; ++t)
      f += std::abs(w(s, t)) * state.lambda[s] * state.lambda[t];
  return f;
}

void refresh_state(PhiState& state) {
  state.objective = phi_objective(state);
  Matrix g = state.Z.adjoint() * state.Z;
  state.orthonormality_residual = (g - Matrix::identity(state.n)).frobenius_norm();
  double mass = 0.0;
  for (double l : state.lambda) mass += l * l;
  state.mass_residual = std::abs(mass - 1.0);
}

PhiState phi_state_from_system(const LineSystem& s) {
  s.validate();
  PhiState st;
  st.field = s.field;
  st.n = s.n;
  st.N = s.count();
  st.Z = Matrix(st.N, st.n);
  st.lambda.resize(st.N);
  const double nd = double(st.n);
  for (std::size_t row = 0; row < st.N; ++row) {
    const double mu = s.weights ? (*s.weights)[row] : 1.0 / double(st.N);
    st.lambda[row] = std::sqrt(mu);
    for (std::size_t j = 0; j < st.n; ++j)
      st.Z(row, j) = std::sqrt(nd * mu) * s.vectors(row, j);
  }
  refresh_state(st);
  return st;
}

PhiState maximize_phi(const PhiProblem& problem, const PhiConfig& config) {
  if (problem.n == 0 || problem.N == 0) throw DomainError("maximize_phi: empty problem");
  if (problem.n > problem.N) throw DomainError("maximize_phi: n must not exceed N");
  const std::size_t n = problem.n, N = problem.N;

  struct Local {
    double objective = -1.0;
    PhiState state;
  };
  std::vector<Local> results(std::size_t(std::max(config.restarts, 1)));

  auto run_one = [&](std::size_t r) {
    const std::uint64_t seed = config.seed + r;
    Rng rng(seed);
    Matrix z(N, n);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < n; ++j) z(i, j) = rng.gaussian_scalar(problem.field);
    z = polar_factor(z);
    std::vector<double> lam(N, 1.0 / std::sqrt(double(N)));

    // Stage 1: projected ascent on the smoothed objective.
    double step = 0.1;
    for (double eps : config.smoothing) {
      for (int it = 0; it < config.ascent_iters; ++it) {
        Matrix w = row_gram(z);
        const double f0 = smoothed_objective(w, lam, eps);

        Matrix q(N, N);
        for (std::size_t s = 0; s < N; ++s)
          for (std::size_t t = 0; t < N; ++t)
            q(s, t) = w(s, t) / std::sqrt(std::norm(w(s, t)) + eps * eps) * lam[s] * lam[t];
        Matrix gz = cx(2.0, 0.0) * (q * z);
        std::vector<double> gl(N, 0.0);
        for (std::size_t s = 0; s < N; ++s)
          for (std::size_t t = 0; t < N; ++t)
            gl[s] += 2.0 * std::sqrt(std::norm(w(s, t)) + eps * eps) * lam[t];

        Matrix z2 = z;
        z2 += cx(step, 0.0) * gz;
        z2 = polar_factor(z2);
        std::vector<double> lam2(N);
        for (std::size_t s = 0; s < N; ++s) lam2[s] = std::abs(lam[s] + step * gl[s]);
        normalize_unit(lam2);

        const double f1 = smoothed_objective(row_gram(z2), lam2, eps);
        if (f1 >= f0) {
          z = std::move(z2);
          lam = std::move(lam2);
          step *= 1.2;
        } else {
          step *= 0.5;
        }
      }
    }

    // Stage 2: alternating eigenvector polish with hard moduli and signs.
    // Each half-step is a monotone ascent, so the exact objective converges.
    double prev = -1.0;
    int flat = 0;
    for (int it = 0; it < config.polish_iters; ++it) {
      Matrix w = row_gram(z);
      Matrix b(N, N);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) b(s, t) = std::abs(w(s, t));
      auto be = hermitian_eigendecomposition(b);
      for (std::size_t s = 0; s < N; ++s) lam[s] = std::abs(be.eigenvectors(s, N - 1));
      normalize_unit(lam);

      Matrix a(N, N);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) a(s, t) = sgn(w(s, t)) * lam[s] * lam[t];
      auto ae = hermitian_eigendecomposition(a);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t j = 0; j < n; ++j) z(s, j) = ae.eigenvectors(s, N - n + j);

      double f = 0.0;
      Matrix w2 = row_gram(z);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) f += std::abs(w2(s, t)) * lam[s] * lam[t];
      if (f <= prev + 1e-15 * std::max(1.0, f)) {
        if (++flat >= 3) break;
      } else {
        flat = 0;
      }
      prev = f;
    }
    {  // final lambda refresh so B lambda = beta lambda holds at the output
      Matrix w = row_gram(z);
      Matrix b(N, N);
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) b(s, t) = std::abs(w(s, t));
      auto be = hermitian_eigendecomposition(b);
      std::vector<double> lam2(N);
      for (std::size_t s = 0; s < N; ++s) lam2[s] = std::abs(be.eigenvectors(s, N - 1));
      normalize_unit(lam2);
      double f_old = 0.0, f_new = 0.0;
      for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = 0; t < N; ++t) {
          f_old += b(s, t).real() * lam[s] * lam[t];
          f_new += b(s, t).real() * lam2[s] * lam2[t];
        }
      if (f_new >= f_old) lam = std::move(lam2);
    }

    PhiState st;
    st.field = problem.field;
    st.n = n;
    st.N = N;
    st.Z = std::move(z);
    st.lambda = std::move(lam);
    st.seed = seed;
    refresh_state(st);
    results[r].objective = st.objective;
    results[r].state = std::move(st);
  };

  parallel_for_index(results.size(), config.threads, run_one);

  std::size_t best = 0;
  for (std::size_t r = 1; r < results.size(); ++r)
    if (results[r].objective > results[best].objective) best = r;
  return results[best].state;
}

KktDiagnostics kkt_diagnostics(const PhiState& state) {
  PhiState st = state;
  refresh_state(st);
  if (st.orthonormality_residual > 1e-8 || st.mass_residual > 1e-8)
    throw PreconditionError("kkt_diagnostics: state violates the constraints beyond 1e-8");

  const std::size_t n = st.n, N = st.N;
  Matrix w = row_gram(st.Z);

  KktDiagnostics d;
  d.A = Matrix(N, N);
  d.B = Matrix(N, N);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) {
      d.B(s, t) = std::abs(w(s, t));
      d.A(s, t) = sgn(w(s, t)) * st.lambda[s] * st.lambda[t];
    }

  Matrix gamma = st.Z.adjoint() * (d.A * st.Z);
  // Hermitian in exact arithmetic; symmetrize away roundoff.
  Matrix herm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      herm(i, j) = 0.5 * (gamma(i, j) + std::conj(gamma(j, i)));
  d.Gamma = herm;

  auto ge = hermitian_eigendecomposition(d.Gamma);
  d.alpha_eigs = ge.eigenvalues;
  d.Z_rotated = st.Z * ge.eigenvectors;

  double beta = 0.0;
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) beta += st.lambda[s] * d.B(s, t).real() * st.lambda[t];
  d.beta = beta;

  double res = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    auto col = d.Z_rotated.col(k);
    auto acol = matvec(d.A, col);
    double r2 = 0.0;
    for (std::size_t s = 0; s < N; ++s) r2 += std::norm(acol[s] - d.alpha_eigs[k] * col[s]);
    res = std::max(res, std::sqrt(r2));
  }
  double rb = 0.0;
  for (std::size_t s = 0; s < N; ++s) {
    cx acc = 0.0;
    for (std::size_t t = 0; t < N; ++t) acc += d.B(s, t) * st.lambda[t];
    rb += std::norm(acc - beta * st.lambda[s]);
  }
  d.eigen_residual = res + std::sqrt(rb);

  d.square_function.assign(N, 0.0);
  for (std::size_t s = 0; s < N; ++s) {
    const double mu = st.lambda[s] * st.lambda[s];
    if (mu <= 1e-10) continue;  // off the support
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += std::norm(st.Z(s, j));
    d.square_function[s] = std::sqrt(acc / mu);
  }

  // column connectivity graph: l ~ m when some row couples them
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l + 1; m < n; ++m) {
      bool linked = false;
      for (std::size_t s = 0; s < N && !linked; ++s)
        linked = std::abs(d.Z_rotated(s, l) * d.Z_rotated(s, m)) > 1e-8;
      if (linked) {
        adj[l].push_back(m);
        adj[m].push_back(l);
      }
    }
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  d.connectivity = (reached == n);
  return d;
}

HessianCheck projected_hessian_check(const PhiState& state) {
  if (state.field != Field::Real)
    throw UnsupportedError("projected_hessian_check: real field only");
  KktDiagnostics kkt = kkt_diagnostics(state);
  if (kkt.eigen_residual > 1e-6)
    throw PreconditionError("projected_hessian_check: state is not first-order stationary (residual > 1e-6)");

  const std::size_t n = state.n, N = state.N;
  Matrix w = row_gram(state.Z);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t)
      if (std::abs(w(s, t)) < 1e-8)
        throw PreconditionError(
            "projected_hessian_check: vanishing inner product; objective not smooth here");

  const Matrix& z = kkt.Z_rotated;
  std::vector<double> sg(N * N);
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t) sg[s * N + t] = w(s, t).real() >= 0.0 ? 1.0 : -1.0;
  const std::vector<double>& lam = state.lambda;

  const std::size_t dim = N * (n + 1);
  HessianCheck check;
  check.H = Matrix(dim, dim);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q) {
        double v = kkt.A(p, q).real();
        if (p == q) v -= kkt.alpha_eigs[k];
        check.H(k * N + p, k * N + q) = v;
      }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      double v = kkt.B(p, q).real();
      if (p == q) v -= kkt.beta;
      check.H(n * N + p, n * N + q) = v;
    }
  // coupling blocks d^2 L / dLambda_p dZ_qk
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = 0; q < N; ++q) {
        double v = sg[p * N + q] * z(p, k).real() * lam[q];
        if (p == q) {
          double acc = 0.0;
          for (std::size_t t = 0; t < N; ++t) acc += sg[p * N + t] * z(t, k).real() * lam[t];
          v += acc;
        }
        check.H(n * N + p, k * N + q) = v;
        check.H(k * N + q, n * N + p) = v;
      }
    }

  // constraint gradients at the point
  std::vector<std::vector<double>> grads;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = l; m < n; ++m) {
      std::vector<double> g(dim, 0.0);
      if (l == m) {
        for (std::size_t s = 0; s < N; ++s) g[m * N + s] = 2.0 * z(s, m).real();
      } else {
        for (std::size_t s = 0; s < N; ++s) {
          g[l * N + s] = z(s, m).real();
          g[m * N + s] = z(s, l).real();
        }
      }
      grads.push_back(std::move(g));
    }
  {
    std::vector<double> g(dim, 0.0);
    for (std::size_t s = 0; s < N; ++s) g[n * N + s] = 2.0 * lam[s];
    grads.push_back(std::move(g));
  }

  // tangent basis: null space of the gradient span
  Matrix gg(dim, dim);
  for (const auto& g : grads)
    for (std::size_t i = 0; i < dim; ++i) {
      if (g[i] == 0.0) continue;
      for (std::size_t j = 0; j < dim; ++j) gg(i, j) += g[i] * g[j];
    }
  auto ge = hermitian_eigendecomposition(gg);
  const double top = std::max(ge.eigenvalues.back(), 1.0);
  std::size_t tdim = 0;
  while (tdim < dim && ge.eigenvalues[tdim] <= 1e-10 * top) ++tdim;
  check.tangent_basis = Matrix(dim, tdim);
  for (std::size_t c = 0; c < tdim; ++c)
    for (std::size_t i = 0; i < dim; ++i) check.tangent_basis(i, c) = ge.eigenvectors(i, c);

  if (tdim == 0) {
    check.max_tangent_eigenvalue = 0.0;
    return check;
  }
  Matrix proj = check.tangent_basis.adjoint() * (check.H * check.tangent_basis);
  Matrix sym(tdim, tdim);
  for (std::size_t i = 0; i < tdim; ++i)
    for (std::size_t j = 0; j < tdim; ++j)
      sym(i, j) = 0.5 * (proj(i, j) + std::conj(proj(j, i)));
  auto pe = hermitian_eigendecomposition(sym);
  check.max_tangent_eigenvalue = pe.eigenvalues.back();
  return check;
}

double sphere_moment(std::size_t n, std::size_t k, Field field) {
  if (n == 0) throw DomainError("sphere_moment: dimension must be positive");
  if (k < 2 || k % 2 != 0) throw DomainError("sphere_moment: k must be even and at least 2");
  double v = 1.0;
  if (field == Field::Real) {
    for (std::size_t j = 2; j <= k; j += 2) v *= double(j - 1) / double(n + j - 2);
  } else {
    for (std::size_t i = 1; i <= k / 2; ++i) v *= double(i) / double(n + i - 1);
  }
  return v;
}

CurvatureCheck curvature_check(const LineSystem& s, std::size_t k) {
  if (!s.weights) throw PreconditionError("curvature_check: weights are required");
  if (k < 2 || k % 2 != 0) throw DomainError("curvature_check: k must be even and at least 2");
  Matrix g = gram_matrix(s);
  const auto& mu = *s.weights;
  CurvatureCheck c;
  for (std::size_t a = 0; a < s.count(); ++a)
    for (std::size_t b = 0; b < s.count(); ++b)
      c.lhs += std::pow(std::abs(g(a, b)), double(k)) * mu[a] * mu[b];
  c.rhs = sphere_moment(s.n, k, s.field);
  c.holds = c.lhs >= c.rhs - 1e-12;
  return c;
}

GammaCoefficients gamma_tools(std::size_t n, Field field) {
  GammaCoefficients g;
  g.alpha = extremal_parameters(n, field).alpha;
  const double a = g.alpha;
  g.gamma0 = a / 2.0 - a * a * a / (2.0 * (1.0 + a) * (1.0 + a));
  g.gamma2 = 1.0 / (2.0 * a) + a / ((1.0 + a) * (1.0 + a));
  g.gamma4 = 1.0 / (2.0 * a * (1.0 + a) * (1.0 + a));
  g.beta_moment = double(n) * sphere_moment(n, 4, field);
  return g;
}

double gamma_majorization_margin(const GammaCoefficients& g, double u) {
  return g.gamma0 + g.gamma2 * u * u - g.gamma4 * u * u * u * u - std::abs(u);
}

double gamma_identity_value(std::size_t n, Field field) {
  GammaCoefficients g = gamma_tools(n, field);
  return double(n) * g.gamma0 + g.gamma2 - g.gamma4 * g.beta_moment;
}

LineSystem r4_system(double alpha) {
  const double a = 0.5 - std::sin(2.0 * alpha);
  if (a < 0.0)
    throw DomainError("r4_system: weights are not a probability measure at this alpha");
  LineSystem s;
  s.field = Field::Real;
  s.n = 4;
  s.vectors = Matrix(10, 4);
  std::size_t row = 0;
  const double r12 = std::sqrt(12.0);
  for (int i = 0; i < 4; ++i, ++row)
    for (int j = 0; j < 4; ++j) s.vectors(row, std::size_t(j)) = (i == j ? 3.0 : -1.0) / r12;
  const double sn = std::sin(alpha), cs = std::cos(alpha), r2 = std::sqrt(2.0);
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l, ++row)
      for (int j = 0; j < 4; ++j)
        s.vectors(row, std::size_t(j)) = ((j == k || j == l) ? -cs : sn) / r2;

  std::vector<double> mu(10);
  for (int i = 0; i < 4; ++i) mu[std::size_t(i)] = a / (2.0 * (1.0 + 2.0 * a));
  for (int i = 4; i < 10; ++i) mu[std::size_t(i)] = 1.0 / (6.0 * (1.0 + 2.0 * a));
  s.weights = std::move(mu);
  return s;
}

namespace {

double r4_value(double alpha) {
  if (0.5 - std::sin(2.0 * alpha) < 0.0) return -std::numeric_limits<double>::infinity();
  LineSystem s = r4_system(alpha);
  Matrix g = gram_matrix(s);
  const auto& mu = *s.weights;
  double acc = 0.0;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) acc += std::abs(g(i, j)) * mu[i] * mu[j];
  return 4.0 * acc;
}

}  // namespace

R4ScanResult r4_example_scan(std::size_t grid) {
  if (grid < 100) throw DomainError("r4_example_scan: grid must be at least 100");
  R4ScanResult res;
  res.curve.reserve(grid + 1);
  double best_val = -std::numeric_limits<double>::infinity();
  double best_alpha = 0.0;
  for (std::size_t i = 0; i <= grid; ++i) {
    const double alpha = M_PI * double(i) / double(grid);
    const double v = r4_value(alpha);
    if (!std::isfinite(v)) continue;
    res.curve.push_back({alpha, v});
    // ties resolved toward the larger alpha (the objective is symmetric
    // under alpha -> pi/2 - alpha, so maxima come in pairs)
    if (v > best_val + 1e-9 || (v > best_val - 1e-9 && alpha > best_alpha)) {
      best_val = std::max(v, best_val);
      best_alpha = alpha;
    }
  }

  // golden-section refinement around the best grid point
  const double h = M_PI / double(grid);
  double lo = best_alpha - h, hi = best_alpha + h;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = r4_value(x1), f2 = r4_value(x2);
  while (hi - lo > 1e-8) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = r4_value(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = r4_value(x1);
    }
  }
  res.alpha_star = 0.5 * (lo + hi);
  res.value = r4_value(res.alpha_star);
  return res;
}

}  // namespace projconst
