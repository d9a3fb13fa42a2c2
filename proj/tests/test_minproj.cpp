#include <doctest.h>

#include <cmath>

#include "projconst/bounds.hpp"
#include "projconst/errors.hpp"
#include "projconst/minproj.hpp"
#include "projconst/norms.hpp"
#include "test_util.hpp"

using namespace projconst;

namespace {

/// Random map with u(E) within E: block-diagonal with respect to E + E-perp.
Matrix random_invariant_map(Rng& rng, const SubspaceBasis& basis) {
  const std::size_t N = basis.N;
  Matrix q = testutil::orthonormal_columns(basis.F);
  Matrix pr = q * q.adjoint();
  Matrix g(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) g(i, j) = rng.gaussian_scalar(basis.field);
  Matrix co = Matrix::identity(N) - pr;
  return pr * g * pr + co * g * co;
}

}  // namespace

TEST_CASE("orthogonal projection at the known systems") {
  auto hex = orthogonal_projection(construct_known_system(2, Field::Real));
  CHECK(hex.norm == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK(hex.idempotency_residual <= 1e-8);
  CHECK(hex.range_residual <= 1e-8);

  auto ico = orthogonal_projection(construct_known_system(3, Field::Real));
  CHECK(ico.norm == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));

  LineSystem ortho;
  ortho.field = Field::Real;
  ortho.n = 3;
  ortho.vectors = Matrix::identity(3);
  auto id = orthogonal_projection(ortho);
  CHECK(id.norm == doctest::Approx(1.0).epsilon(1e-15));
  CHECK((id.P - Matrix::identity(3)).max_abs() <= 1e-15);

  LineSystem flat;  // three unit vectors inside a plane of R^3: no spanning
  flat.field = Field::Real;
  flat.n = 3;
  flat.vectors = Matrix(3, 3);
  flat.vectors(0, 0) = 1.0;
  flat.vectors(1, 1) = 1.0;
  flat.vectors(2, 0) = std::sqrt(0.5);
  flat.vectors(2, 1) = std::sqrt(0.5);
  CHECK_THROWS_AS(orthogonal_projection(flat), ShapeError);
}

TEST_CASE("lp-exact minimal projections") {
  SubspaceBasis constants;
  constants.field = Field::Real;
  constants.N = 3;
  constants.n = 1;
  constants.F = Matrix(3, 1);
  for (int i = 0; i < 3; ++i) constants.F(std::size_t(i), 0) = 1.0;
  CHECK(minimal_projection(constants, MinProjMethod::LpExact).norm ==
        doctest::Approx(1.0).epsilon(1e-9));

  SubspaceBasis coord;
  coord.field = Field::Real;
  coord.N = 4;
  coord.n = 2;
  coord.F = Matrix(4, 2);
  coord.F(0, 0) = 1.0;
  coord.F(1, 1) = 1.0;
  CHECK(minimal_projection(coord, MinProjMethod::LpExact).norm ==
        doctest::Approx(1.0).epsilon(1e-9));

  LineSystem hex = construct_known_system(2, Field::Real);
  auto lp = minimal_projection(embedding_basis(hex), MinProjMethod::LpExact);
  CHECK(std::abs(lp.norm - 4.0 / 3.0) <= 1e-7);
  CHECK(std::abs(lp.norm - orthogonal_projection(hex).norm) <= 1e-7);
  CHECK(lp.idempotency_residual <= 1e-8);
  CHECK(lp.range_residual <= 1e-8);

  SubspaceBasis cplx = embedding_basis(construct_known_system(2, Field::Complex));
  CHECK_THROWS_AS(minimal_projection(cplx, MinProjMethod::LpExact), UnsupportedError);

  SubspaceBasis degenerate;
  degenerate.field = Field::Real;
  degenerate.N = 3;
  degenerate.n = 2;
  degenerate.F = Matrix(3, 2);
  degenerate.F(0, 0) = 1.0;
  degenerate.F(0, 1) = 2.0;  // second column is a multiple of the first
  degenerate.F(1, 0) = 1.0;
  degenerate.F(1, 1) = 2.0;
  CHECK_THROWS_AS(minimal_projection(degenerate, MinProjMethod::LpExact), ShapeError);
}

TEST_CASE("descent stays above the optimum and reaches it") {
  DescentOptions opts;
  opts.restarts = 8;
  opts.iters = 900;
  opts.seed = 3;

  LineSystem hex = construct_known_system(2, Field::Real);
  auto d = minimal_projection(embedding_basis(hex), MinProjMethod::Descent, opts);
  CHECK(d.norm >= 4.0 / 3.0 - 1e-9);
  CHECK(d.norm <= 4.0 / 3.0 + 1e-4);

  LineSystem c2 = construct_known_system(2, Field::Complex);
  auto dc = minimal_projection(embedding_basis(c2), MinProjMethod::Descent, opts);
  const double c2val = (1.0 + std::sqrt(3.0)) / 2.0;
  CHECK(dc.norm >= c2val - 1e-9);
  CHECK(dc.norm <= c2val + 1e-4);
  CHECK(dc.idempotency_residual <= 1e-8);
  CHECK(dc.range_residual <= 1e-8);
}

TEST_CASE("trace duality witnesses") {
  LineSystem hex = construct_known_system(2, Field::Real);
  SubspaceBasis basis = embedding_basis(hex);

  auto orth = orthogonal_projection(hex);
  auto w1 = make_witness(orth.P, basis);
  CHECK(w1.column_norm_sum == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(trace_duality_lower_bound(w1, basis) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix scaled_id = cx(1.0 / 3.0, 0.0) * Matrix::identity(3);
  auto w2 = make_witness(scaled_id, basis);
  CHECK(trace_duality_lower_bound(w2, basis) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  auto w3 = make_witness(sign_gram_witness(hex), basis);
  CHECK(trace_duality_lower_bound(w3, basis) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  // the sign witness is exact at every known system
  struct Case {
    std::size_t n;
    Field f;
    double lambda;
  };
  const Case cases[] = {{3, Field::Real, (1.0 + std::sqrt(5.0)) / 2.0},
                        {7, Field::Real, 2.5},
                        {2, Field::Complex, (1.0 + std::sqrt(3.0)) / 2.0},
                        {3, Field::Complex, 5.0 / 3.0}};
  for (const auto& c : cases) {
    LineSystem s = construct_known_system(c.n, c.f);
    auto w = make_witness(sign_gram_witness(s), embedding_basis(s));
    CHECK(w.trace_on_E == doctest::Approx(c.lambda).epsilon(1e-12));
  }

  // a map that moves E off itself is rejected
  Matrix bad = Matrix::identity(3);
  bad(0, 1) = 0.9;  // shears the embedding away from E
  CHECK_THROWS_AS(make_witness(bad, basis), InvalidWitnessError);
}

TEST_CASE("orthogonal row sums follow the closed form") {
  struct Case {
    std::size_t n;
    Field f;
  };
  const Case cases[] = {{2, Field::Real},
                        {3, Field::Real},
                        {7, Field::Real},
                        {2, Field::Complex},
                        {3, Field::Complex}};
  for (const auto& c : cases) {
    LineSystem s = construct_known_system(c.n, c.f);
    const auto ext = extremal_parameters(c.n, c.f);
    const double N = double(s.count());
    const double formula = (double(c.n) / N) * (1.0 + (N - 1.0) * ext.alpha);
    const double norm = orthogonal_projection(s).norm;
    CHECK(std::abs(norm - formula) <= 1e-12);
    CHECK(std::abs(norm - bounds_summary(c.n, c.f).g) <= 1e-12);
  }
}

TEST_CASE("table-functional embeddings reach the same constants by descent") {
  DescentOptions opts;
  opts.restarts = 8;
  opts.iters = 1000;
  opts.seed = 12;
  for (TableSpace sp : {TableSpace::C2, TableSpace::C3}) {
    NormedSpaceSpec spec = table_functionals(sp);
    SubspaceBasis basis;
    basis.field = spec.field;
    basis.N = spec.functionals.rows();
    basis.n = spec.n;
    basis.F = spec.functionals.adjoint().transpose();  // entrywise conjugate
    auto res = minimal_projection(basis, MinProjMethod::Descent, opts);
    const double lambda = space_lambda_expected(sp);
    CAPTURE(space_id_name(sp));
    CHECK(res.norm >= lambda - 1e-6);
    CHECK(res.norm <= lambda + 1e-4);
  }
}

TEST_CASE("weak duality against the lp value") {
  Rng rng(7);
  for (std::size_t n : {2u, 3u}) {
    LineSystem s = construct_known_system(n, Field::Real);
    SubspaceBasis basis = embedding_basis(s);
    const double lambda = minimal_projection(basis, MinProjMethod::LpExact).norm;
    for (int trial = 0; trial < 50; ++trial) {
      auto w = make_witness(random_invariant_map(rng, basis), basis);
      CHECK(w.trace_on_E <= lambda + 1e-7);
    }
  }
}
