#include "projconst/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "projconst/errors.hpp"

namespace projconst::lp {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr long kStallLimit = 2000;  // degenerate pivots before an anti-cycling burst
constexpr long kBlandBurst = 200;
constexpr long kRefreshEvery = 512;

struct Tableau {
  std::size_t m, nv, width;
  std::vector<double> t;      // m x (nv + 1), last column is rhs
  std::vector<long> basis;    // variable index, or -(row+1) for the row's artificial
  std::vector<char> active;   // rows surviving redundancy elimination
  std::vector<double> d;      // reduced costs over the nv structural columns
  double drhs = 0.0;          // negated objective value
  std::vector<double> devex;  // pricing reference weights

  double& at(std::size_t r, std::size_t c) { return t[r * width + c]; }
  double rhs(std::size_t r) const { return t[r * width + nv]; }

  void pivot(std::size_t prow, std::size_t pcol) {
    double* pr = &t[prow * width];
    const double pv = pr[pcol];
    for (std::size_t c = 0; c <= nv; ++c) pr[c] /= pv;
    pr[pcol] = 1.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == prow || !active[r]) continue;
      double* row = &t[r * width];
      const double f = row[pcol];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= nv; ++c) row[c] -= f * pr[c];
      row[pcol] = 0.0;
    }
    const double f = d[pcol];
    if (f != 0.0) {
      for (std::size_t c = 0; c < nv; ++c) d[c] -= f * pr[c];
      d[pcol] = 0.0;
      drhs -= f * pr[nv];
    }
    const double wq = std::max(devex[pcol], 1.0);
    for (std::size_t c = 0; c < nv; ++c) {
      const double a = pr[c];
      if (a != 0.0) devex[c] = std::max(devex[c], a * a * wq);
    }
    devex[pcol] = wq;
    basis[prow] = long(pcol);
  }

  /// Rebuilds the reduced-cost row from the phase costs and the current
  /// basis, clearing drift accumulated over long degenerate pivot chains.
  /// Phase 1 passes nullptr: structural costs 0, artificial costs 1.
  void refresh_costs(const std::vector<double>* c) {
    if (c)
      d = *c;
    else
      d.assign(nv, 0.0);
    drhs = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      if (!active[r]) continue;
      const double cb = basis[r] >= 0 ? (c ? (*c)[std::size_t(basis[r])] : 0.0) : (c ? 0.0 : 1.0);
      if (cb == 0.0) continue;
      const double* row = &t[r * width];
      for (std::size_t col = 0; col < nv; ++col) d[col] -= cb * row[col];
      drhs -= cb * row[nv];
    }
    for (std::size_t r = 0; r < m; ++r)
      if (active[r] && basis[r] >= 0) d[std::size_t(basis[r])] = 0.0;
  }
};

// One simplex phase; returns false on iteration exhaustion.
bool run_phase(Tableau& tb, const std::vector<double>* costs, long& iters, long max_iters,
               bool& unbounded) {
  unbounded = false;
  long stall = 0;
  long bland_left = 0;
  long since_refresh = 0;
  double last_obj = tb.drhs;
  tb.devex.assign(tb.nv, 1.0);
  while (iters < max_iters) {
    std::size_t pcol = tb.nv;
    if (bland_left > 0) {
      --bland_left;
      for (std::size_t c = 0; c < tb.nv; ++c)
        if (tb.d[c] < -kCostTol) {
          pcol = c;
          break;
        }
    } else {
      double best = 0.0;
      for (std::size_t c = 0; c < tb.nv; ++c) {
        const double dc = tb.d[c];
        if (dc >= -kCostTol) continue;
        const double score = dc * dc / tb.devex[c];
        if (score > best) {
          best = score;
          pcol = c;
        }
      }
    }
    if (pcol == tb.nv) {
      // verify against a freshly computed cost row before declaring optimality
      tb.refresh_costs(costs);
      since_refresh = 0;
      bool clean = true;
      for (std::size_t c = 0; c < tb.nv; ++c)
        if (tb.d[c] < -kCostTol) {
          clean = false;
          break;
        }
      if (clean) return true;
      continue;
    }

    // ratio test: smallest ratio, ties resolved toward the largest pivot
    // element for numerical stability (smallest basis label in Bland bursts)
    std::size_t prow = tb.m;
    double best_ratio = std::numeric_limits<double>::infinity();
    double best_pivot = 0.0;
    long best_label = std::numeric_limits<long>::max();
    for (std::size_t r = 0; r < tb.m; ++r) {
      if (!tb.active[r]) continue;
      const double a = tb.at(r, pcol);
      if (a <= kPivotTol) continue;
      const double ratio = std::max(tb.rhs(r), 0.0) / a;
      const long label = tb.basis[r] >= 0 ? tb.basis[r] : long(tb.nv) - tb.basis[r];
      bool take = false;
      if (ratio < best_ratio - 1e-12) {
        take = true;
      } else if (ratio < best_ratio + 1e-12) {
        take = bland_left > 0 ? label < best_label : a > best_pivot;
      }
      if (take) {
        best_ratio = std::min(ratio, best_ratio);
        best_pivot = a;
        best_label = label;
        prow = r;
      }
    }
    if (prow == tb.m) {
      unbounded = true;
      return true;
    }

    tb.pivot(prow, pcol);
    ++iters;

    if (++since_refresh >= kRefreshEvery) {
      tb.refresh_costs(costs);
      since_refresh = 0;
    }
    if (tb.drhs > last_obj + 1e-12) {
      last_obj = tb.drhs;
      stall = 0;
    } else if (++stall > kStallLimit) {
      bland_left = kBlandBurst;  // break potential cycles, then resume pricing
      stall = 0;
    }
  }
  return false;
}

}  // namespace

Solution solve(const Problem& p, long max_iterations) {
  const std::size_t m = p.rows.size();
  const std::size_t nv = p.nvars;
  if (p.rhs.size() != m || p.c.size() != nv) throw DimensionError("lp::solve: inconsistent problem sizes");
  if (max_iterations <= 0) max_iterations = 400L * long(m) + 20000L;

  Tableau tb;
  tb.m = m;
  tb.nv = nv;
  tb.width = nv + 1;
  tb.t.assign(m * tb.width, 0.0);
  tb.basis.assign(m, 0);
  tb.active.assign(m, 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (p.rows[r].size() != nv) throw DimensionError("lp::solve: row length mismatch");
    const double flip = p.rhs[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < nv; ++c) tb.at(r, c) = flip * p.rows[r][c];
    tb.at(r, nv) = flip * p.rhs[r];
    tb.basis[r] = -long(r) - 1;  // artificial until crashed
  }

  // Crash: columns that are already unit vectors enter the starting basis,
  // which skips the bulk of phase 1 on structured encodings.
  {
    std::vector<long> count(nv, 0);
    std::vector<long> last_row(nv, -1);
    std::vector<char> ok(nv, 1);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < nv; ++c) {
        const double v = tb.at(r, c);
        if (v == 0.0) continue;
        ++count[c];
        last_row[c] = long(r);
        if (v != 1.0) ok[c] = 0;
      }
    for (std::size_t c = 0; c < nv; ++c)
      if (ok[c] && count[c] == 1 && tb.basis[std::size_t(last_row[c])] < 0)
        tb.basis[std::size_t(last_row[c])] = long(c);
  }

  Solution sol;
  long iters = 0;
  bool unbounded = false;

  bool need_phase1 = false;
  for (std::size_t r = 0; r < m; ++r)
    if (tb.basis[r] < 0) need_phase1 = true;

  if (need_phase1) {
    tb.refresh_costs(nullptr);
    if (!run_phase(tb, nullptr, iters, max_iterations, unbounded)) {
      sol.status = Status::IterationLimit;
      sol.iterations = iters;
      return sol;
    }
    tb.refresh_costs(nullptr);
    if (-tb.drhs > 1e-7) {
      sol.status = Status::Infeasible;
      sol.iterations = iters;
      return sol;
    }
    // drive leftover artificials out of the basis or drop their rows
    for (std::size_t r = 0; r < m; ++r) {
      if (tb.basis[r] >= 0) continue;
      std::size_t pcol = nv;
      for (std::size_t c = 0; c < nv; ++c)
        if (std::abs(tb.at(r, c)) > 1e-9) {
          pcol = c;
          break;
        }
      if (pcol == nv) {
        tb.active[r] = 0;  // redundant constraint
      } else {
        tb.pivot(r, pcol);
        ++iters;
      }
    }
  }

  tb.refresh_costs(&p.c);
  if (!run_phase(tb, &p.c, iters, max_iterations, unbounded)) {
    sol.status = Status::IterationLimit;
    sol.iterations = iters;
    return sol;
  }
  if (unbounded) {
    sol.status = Status::Unbounded;
    sol.iterations = iters;
    return sol;
  }

  sol.x.assign(nv, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (tb.active[r] && tb.basis[r] >= 0) sol.x[std::size_t(tb.basis[r])] = std::max(tb.rhs(r), 0.0);
  sol.value = 0.0;
  for (std::size_t c = 0; c < nv; ++c) sol.value += p.c[c] * sol.x[c];
  sol.status = Status::Optimal;
  sol.iterations = iters;
  return sol;
}

}  // namespace projconst::lp
