#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "projconst/matrix.hpp"

namespace projconst {

/// N unit vectors spanning lines in K^n, with an optional probability weight
/// per line.
struct LineSystem {
  Field field = Field::Real;
  std::size_t n = 0;                                // ambient dimension
  Matrix vectors;                                   // N x n, rows are the lines
  std::optional<std::vector<double>> weights;       // mu_s, nonnegative, sums to 1

  std::size_t count() const { return vectors.rows(); }

  /// Checks unit rows and, when present, weight nonnegativity and total mass.
  /// Does not check line distinctness; see lines_distinct().
  void validate(double tol = 1e-12) const;

  /// True when no two rows are unimodular multiples of each other.
  bool lines_distinct(double tol = 1e-9) const;
};

struct ExtremalParameters {
  std::size_t n_max;  // Gerzon bound N(n)
  double alpha;       // forced common angle at saturation
};

struct EquiangularCertificate {
  double common_angle;        // mean off-diagonal Gram modulus
  double max_deviation;       // max_{s!=t} | |<z_s,z_t>| - alpha |
  bool gerzon_saturated;      // N == N(n)
  bool forced_angle_matched;  // alpha matches the saturation angle within tol
};

/// N(n) = n(n+1)/2 real, n^2 complex; saturation angle 1/sqrt(n+2) real,
/// 1/sqrt(n+1) complex.
ExtremalParameters extremal_parameters(std::size_t n, Field field);

Matrix gram_matrix(const LineSystem& s);

EquiangularCertificate verify_equiangular(const LineSystem& s, double tol);

/// Saturated equiangular systems for (n, field) in
/// {(2,R), (3,R), (7,R), (2,C), (3,C)}; anything else (notably (23,R)) throws
/// UnsupportedError. Lines are canonicalized: first nonzero coordinate real
/// positive. No weights are attached.
LineSystem construct_known_system(std::size_t n, Field field);

/// || Id_n - n * sum_s mu_s z_s z_s* ||_F. Requires weights.
double tight_frame_residual(const LineSystem& s);

/// Linear independence of the rank-one operators z_s z_s*, decided by the
/// rank of the matrix (|<z_s,z_t>|^2) against threshold 1e-9.
bool rank_one_independence(const LineSystem& s);

/// Scales each row by a unimodular factor so its first nonzero coordinate is
/// real positive.
void canonicalize_lines(LineSystem& s, double tol = 1e-12);

/// Attaches uniform weights 1/N.
LineSystem with_uniform_weights(LineSystem s);

}  // namespace projconst
