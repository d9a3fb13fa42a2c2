#include "projconst/bounds.hpp"

#include <cmath>

#include "projconst/errors.hpp"
#include "projconst/line_system.hpp"

namespace projconst {

BoundsSummary bounds_summary(std::size_t n, Field field) {
  if (n == 0) throw DomainError("bounds_summary: dimension must be positive");
  const double nd = double(n);
  BoundsSummary b;
  if (field == Field::Real) {
    b.g = (2.0 + (nd - 1.0) * std::sqrt(nd + 2.0)) / (nd + 1.0);
    b.asymptotic = std::sqrt(nd) - 1.0 / std::sqrt(nd) + 2.0 / nd;
  } else {
    b.g = (1.0 + (nd - 1.0) * std::sqrt(nd + 1.0)) / nd;
    b.asymptotic = std::sqrt(nd) - 1.0 / (2.0 * std::sqrt(nd)) + 1.0 / nd;
  }
  b.kadec_snobar = std::sqrt(nd);
  ExtremalParameters ext = extremal_parameters(n, field);
  b.equality_chain = nd * ext.alpha + (nd / double(ext.n_max)) * (1.0 - ext.alpha);
  return b;
}

}  // namespace projconst
