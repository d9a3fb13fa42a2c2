#include <doctest.h>

#include <cmath>

#include "projconst/minproj.hpp"
#include "projconst/simplex.hpp"

using namespace projconst;

namespace {

SubspaceBasis real_basis(std::size_t N, std::size_t n, std::initializer_list<double> entries) {
  SubspaceBasis b;
  b.field = Field::Real;
  b.N = N;
  b.n = n;
  b.F = Matrix(N, n);
  std::size_t i = 0;
  for (double v : entries) {
    b.F(i / n, i % n) = v;
    ++i;
  }
  return b;
}

}  // namespace

TEST_CASE("small standard-form programs") {
  // min -x1 - 2 x2  s.t.  x1 + x2 + s = 4, x1 + 3 x2 + s2 = 6
  lp::Problem p;
  p.nvars = 4;
  p.c = {-1.0, -2.0, 0.0, 0.0};
  p.rows = {{1, 1, 1, 0}, {1, 3, 0, 1}};
  p.rhs = {4, 6};
  auto s = lp::solve(p);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == doctest::Approx(-5.0).epsilon(1e-12));  // x = (3, 1)

  // infeasible: x1 = 1 and x1 = 2
  lp::Problem q;
  q.nvars = 1;
  q.c = {0.0};
  q.rows = {{1.0}, {1.0}};
  q.rhs = {1.0, 2.0};
  CHECK(lp::solve(q).status == lp::Status::Infeasible);

  // unbounded: min -x1 with x1 - x2 = 0
  lp::Problem u;
  u.nvars = 2;
  u.c = {-1.0, 0.0};
  u.rows = {{1.0, -1.0}};
  u.rhs = {0.0};
  CHECK(lp::solve(u).status == lp::Status::Unbounded);

  // degenerate rhs: minimum is zero
  lp::Problem d;
  d.nvars = 3;
  d.c = {1.0, 1.0, 1.0};
  d.rows = {{1, -1, 0}, {0, 1, -1}};
  d.rhs = {0.0, 0.0};
  auto sd = lp::solve(d);
  REQUIRE(sd.status == lp::Status::Optimal);
  CHECK(sd.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("projection programs with frozen optima") {
  // values computed with an independent LP solver on the same encoding
  auto f1 = real_basis(4, 2, {1, 0, 0, 1, 1, 1, 1, -1});
  CHECK(minimal_projection(f1, MinProjMethod::LpExact).norm ==
        doctest::Approx(1.0).epsilon(1e-9));

  auto f2 = real_basis(5, 2, {2, 1, 1, -1, 0, 3, 1, 1, 1, 0});
  CHECK(minimal_projection(f2, MinProjMethod::LpExact).norm ==
        doctest::Approx(1.0).epsilon(1e-9));

  auto f3 = real_basis(6, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, -1, 0, 0, 1, -1});
  CHECK(minimal_projection(f3, MinProjMethod::LpExact).norm ==
        doctest::Approx(14.0 / 11.0).epsilon(1e-9));
}
