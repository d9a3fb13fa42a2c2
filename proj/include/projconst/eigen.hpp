#pragma once

#include <vector>

#include "projconst/matrix.hpp"

namespace projconst {

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // columns, orthonormal, paired with eigenvalues
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// The input must be Hermitian within 1e-12 (relative to its Frobenius norm),
/// otherwise a ShapeError is thrown. Sweeps run until the off-diagonal
/// Frobenius mass drops below 1e-12 of the input norm (1e-14 absolute for
/// zero-norm inputs).
HermitianEigenResult hermitian_eigendecomposition(const Matrix& m);

}  // namespace projconst
