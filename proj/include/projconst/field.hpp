#pragma once

#include <complex>
#include <string>

#include "projconst/errors.hpp"

namespace projconst {

using cx = std::complex<double>;

/// Scalar field of a space or system. Complex storage is used throughout;
/// Field::Real means all imaginary parts are zero and stay zero.
enum class Field { Real, Complex };

inline std::string field_name(Field f) {
  return f == Field::Real ? "real" : "complex";
}

inline Field field_from_name(const std::string& s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw SchemaError("unknown field tag: \"" + s + "\" (expected \"real\" or \"complex\")");
}

/// sgn w = w/|w| for w != 0, sgn 0 = 0.
inline cx sgn(cx w) {
  double a = std::abs(w);
  return a > 0.0 ? w / a : cx(0.0, 0.0);
}

}  // namespace projconst
