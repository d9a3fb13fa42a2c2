#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "projconst/line_system.hpp"
#include "projconst/matrix.hpp"

namespace projconst {

/// Maximize F(Z, Lambda) = sum_{s,t} |<Z_s, Z_t>| Lambda_s Lambda_t over
/// N x n matrices Z with orthonormal columns and unit vectors Lambda >= 0.
struct PhiProblem {
  Field field = Field::Real;
  std::size_t n = 0;  // subspace dimension
  std::size_t N = 0;  // support size
};

struct PhiConfig {
  int restarts = 32;
  int ascent_iters = 60;  // per smoothing stage
  int polish_iters = 300;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::vector<double> smoothing = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
};

struct PhiState {
  Field field = Field::Real;
  std::size_t n = 0, N = 0;
  Matrix Z;                    // N x n, Z* Z = Id
  std::vector<double> lambda;  // sqrt(mu_s), unit 2-norm
  double objective = 0.0;
  double orthonormality_residual = 0.0;
  double mass_residual = 0.0;
  std::uint64_t seed = 0;  // restart seed that produced this state
};

/// Exact objective with hard moduli, diagonal included.
double phi_objective(const PhiState& state);

/// Recomputes objective and constraint residuals in place.
void refresh_state(PhiState& state);

/// The state (Z_sj = f_j(s) sqrt(mu_s), Lambda_s = sqrt(mu_s)) induced by a
/// weighted tight system; uniform weights assumed when absent.
PhiState phi_state_from_system(const LineSystem& s);

/// Multi-start smoothed projected ascent followed by an alternating
/// eigenvector polish. The returned objective is a lower bound for phi(n, N).
PhiState maximize_phi(const PhiProblem& problem, const PhiConfig& config = {});

struct KktDiagnostics {
  Matrix A;          // sgn<z_s,z_t> lambda_s lambda_t
  Matrix B;          // |<z_s,z_t>|
  Matrix Gamma;      // multiplier matrix, Hermitian
  std::vector<double> alpha_eigs;  // ascending
  double beta = 0.0;
  double eigen_residual = 0.0;
  std::vector<double> square_function;  // f0(s), 0 off the support
  bool connectivity = false;
  Matrix Z_rotated;  // columns paired with alpha_eigs
};

KktDiagnostics kkt_diagnostics(const PhiState& state);

struct HessianCheck {
  Matrix H;               // N(n+1) x N(n+1) bordered Hessian
  Matrix tangent_basis;   // orthonormal columns spanning the tangent space
  double max_tangent_eigenvalue = 0.0;  // 0 when the tangent space is trivial
};

/// Second-order check at a first-order point (real field only). Refuses
/// states with vanishing pairwise inner products, where the objective is not
/// twice differentiable.
HessianCheck projected_hessian_check(const PhiState& state);

/// int_{S^{n-1}} |<e, w>|^k domega for even k >= 2:
/// (k-1)!! / (n(n+2)...(n+k-2)) real, m!(n-1)!/(n+m-1)! with m = k/2 complex.
double sphere_moment(std::size_t n, std::size_t k, Field field);

struct CurvatureCheck {
  double lhs = 0.0;  // sum |<z_s,z_t>|^k mu_s mu_t
  double rhs = 0.0;  // sphere moment
  bool holds = false;
};

CurvatureCheck curvature_check(const LineSystem& s, std::size_t k);

struct GammaCoefficients {
  double gamma0 = 0.0, gamma2 = 0.0, gamma4 = 0.0;
  double alpha = 0.0;        // saturation angle
  double beta_moment = 0.0;  // n * sphere_moment(n, 4, field)
};

GammaCoefficients gamma_tools(std::size_t n, Field field);

/// gamma0 + gamma2 u^2 - gamma4 u^4 - |u|; nonnegative on [-1, 1] with zeros
/// exactly at |u| in {alpha, 1}.
double gamma_majorization_margin(const GammaCoefficients& g, double u);

/// n*gamma0 + gamma2 - gamma4*beta_moment; equals bounds_summary(n).g.
double gamma_identity_value(std::size_t n, Field field);

/// The 10-line weighted system in R^4 parameterized by alpha. Throws
/// DomainError when the weights are not a probability measure (a < 0).
LineSystem r4_system(double alpha);

struct R4ScanResult {
  double alpha_star = 0.0;
  double value = 0.0;
  std::vector<std::array<double, 2>> curve;  // (alpha, objective) at valid grid points
};

/// Grid scan of the R^4 family over [0, pi] followed by golden-section
/// refinement. Grid points with invalid weights are skipped; among equal
/// maxima the largest alpha is reported.
R4ScanResult r4_example_scan(std::size_t grid);

}  // namespace projconst
