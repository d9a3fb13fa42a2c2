#pragma once

#include <cstdint>
#include <optional>

#include "projconst/line_system.hpp"
#include "projconst/matrix.hpp"

namespace projconst {

/// Basis of an n-dimensional subspace E of l_inf^N: columns of F span E.
struct SubspaceBasis {
  Field field = Field::Real;
  std::size_t N = 0;
  std::size_t n = 0;
  Matrix F;  // N x n

  /// Throws ShapeError when rank(F) < n (relative threshold 1e-10).
  void validate() const;
};

struct ProjectionResult {
  Matrix P;                     // N x N projection onto E
  double norm = 0.0;            // l_inf operator norm
  double idempotency_residual = 0.0;  // ||P^2 - P||_F
  double range_residual = 0.0;        // ||P F - F||_F
};

enum class MinProjMethod { LpExact, Descent };

struct DescentOptions {
  int restarts = 32;
  int iters = 1500;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: use thread_cap()
};

/// P = (n/N) Gram(S): the orthogonal projection onto the span of the system's
/// embedding. Minimal among all projections when S is a saturated system.
ProjectionResult orthogonal_projection(const LineSystem& s);

/// Canonical embedding F_{sj} = sqrt(n) z_{sj} of a line system into l_inf^N.
SubspaceBasis embedding_basis(const LineSystem& s);

/// Relative projection constant lambda(E, l_inf^N). Every projection onto E
/// factors as P = F C with C F = Id; lp-exact (real field only) solves the
/// resulting linear program to global optimality, descent runs multi-start
/// projected gradient on C and returns the best local value, an upper bound.
ProjectionResult minimal_projection(const SubspaceBasis& basis, MinProjMethod method,
                                    const DescentOptions& opts = {});

struct TraceDualityWitness {
  Matrix u;                    // N x N, u(E) within E, normalized
  double column_norm_sum = 0;  // sum_t ||u e_t||_inf (1 after normalization)
  double trace_on_E = 0;       // tr(u restricted to E)
};

/// Normalizes u by its column-infinity-norm sum and computes its trace on E.
/// Throws InvalidWitnessError if u does not map E into E within 1e-8.
TraceDualityWitness make_witness(const Matrix& u, const SubspaceBasis& basis);

/// tr(u: E -> E), a lower bound for lambda(E). Revalidates the witness.
double trace_duality_lower_bound(const TraceDualityWitness& w, const SubspaceBasis& basis);

/// sgn(Gram)/N: the witness that attains the bound at saturated systems.
Matrix sign_gram_witness(const LineSystem& s);

}  // namespace projconst
