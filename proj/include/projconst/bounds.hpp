#pragma once

#include <cstddef>

#include "projconst/field.hpp"

namespace projconst {

struct BoundsSummary {
  double g;               // sharp upper bound for n-dimensional projection constants
  double kadec_snobar;    // sqrt(n)
  double asymptotic;      // large-n expansion of g
  double equality_chain;  // n*alpha + (n/N(n))*(1 - alpha); equals g
};

/// G(n) = (2 + (n-1) sqrt(n+2)) / (n+1) real, (1 + (n-1) sqrt(n+1)) / n complex.
BoundsSummary bounds_summary(std::size_t n, Field field);

}  // namespace projconst
