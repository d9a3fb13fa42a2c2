#pragma once

#include <string>
#include <vector>

#include "projconst/line_system.hpp"
#include "projconst/matrix.hpp"

namespace projconst {

/// A norm given by finitely many functionals: ||x|| = max_s |<x, z_s>|.
struct NormedSpaceSpec {
  Field field = Field::Real;
  std::size_t n = 0;
  Matrix functionals;  // rows z_s
  std::string label;

  /// Throws ShapeError unless the functionals span K^n (rank check at 1e-10).
  void validate() const;
};

double norm_from_system(const NormedSpaceSpec& spec, const std::vector<cx>& x);

NormedSpaceSpec spec_from_system(const LineSystem& s, std::string label = {});

enum class TableSpace { R2Hexagon, R3Dodecahedron, R7, R23, C2, C3 };

/// Space ids accepted by the CLI: R2-hexagon, R3-dodecahedron, R7, R23, C2, C3.
TableSpace parse_space_id(const std::string& id);
std::string space_id_name(TableSpace sp);
Field space_field(TableSpace sp);
std::size_t space_dim(TableSpace sp);

/// Exact extremal projection constant for each table space.
double space_lambda_expected(TableSpace sp);

/// Closed-form norms of the extremal spaces, evaluated verbatim.
/// R23 has no evaluable form and throws UnsupportedError.
double table_norm(TableSpace sp, const std::vector<cx>& x);

/// Functionals behind table_norm as a NormedSpaceSpec (R23 unsupported).
NormedSpaceSpec table_functionals(TableSpace sp);

/// Extreme points of {x in R^n : |<x, f_s>| <= 1 for all s}, n in {2, 3},
/// by brute-force intersection of functional hyperplane tuples.
std::vector<std::vector<double>> ball_vertices(const NormedSpaceSpec& spec);

}  // namespace projconst
