#pragma once

#include <cstddef>
#include <vector>

namespace projconst::lp {

/// Standard-form linear program: minimize c.x subject to A x = b, x >= 0.
/// Callers add their own slack variables for inequalities.
struct Problem {
  std::size_t nvars = 0;
  std::vector<double> c;
  std::vector<std::vector<double>> rows;  // each of length nvars
  std::vector<double> rhs;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::IterationLimit;
  double value = 0.0;
  std::vector<double> x;
  long iterations = 0;
};

/// Two-phase dense tableau simplex. Dantzig pricing with a permanent switch
/// to Bland's rule once the objective stalls, which guarantees termination on
/// degenerate instances.
Solution solve(const Problem& p, long max_iterations = 0);

}  // namespace projconst::lp
