#include <doctest.h>

#include <cmath>

#include "projconst/errors.hpp"
#include "projconst/norms.hpp"
#include "test_util.hpp"

using namespace projconst;

namespace {

std::vector<cx> rvec(std::initializer_list<double> vals) {
  std::vector<cx> x;
  for (double v : vals) x.emplace_back(v, 0.0);
  return x;
}

std::vector<cx> random_vector(Rng& rng, std::size_t n, Field f) {
  std::vector<cx> x(n);
  for (auto& v : x) v = rng.gaussian_scalar(f);
  return x;
}

}  // namespace

TEST_CASE("norm_from_system pinned cases") {
  NormedSpaceSpec hex = spec_from_system(construct_known_system(2, Field::Real), "hexagon");
  CHECK(norm_from_system(hex, rvec({1.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(norm_from_system(hex, rvec({0.0, 0.0})) == 0.0);

  NormedSpaceSpec ico = spec_from_system(construct_known_system(3, Field::Real));
  CHECK(norm_from_system(ico, ico.functionals.row(0)) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(norm_from_system(hex, rvec({1.0, 0.0, 0.0})), ShapeError);
}

TEST_CASE("table norms pinned cases") {
  CHECK(table_norm(TableSpace::R2Hexagon, rvec({1.0, 0.0})) == doctest::Approx(2.0).epsilon(1e-15));

  std::vector<cx> e12 = rvec({1, 1, 0, 0, 0, 0, 0});
  CHECK(table_norm(TableSpace::R7, e12) == doctest::Approx(2.0).epsilon(1e-15));

  std::vector<cx> ones3 = rvec({1, 1, 1});
  CHECK(table_norm(TableSpace::C3, ones3) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));

  CHECK_THROWS_AS(table_norm(TableSpace::R23, rvec({1.0})), UnsupportedError);
  CHECK_THROWS_AS(parse_space_id("R5"), UnsupportedError);
}

TEST_CASE("table norms equal the functional forms") {
  Rng rng(41);
  for (TableSpace sp : {TableSpace::R2Hexagon, TableSpace::R3Dodecahedron, TableSpace::R7,
                        TableSpace::C2, TableSpace::C3}) {
    CAPTURE(space_id_name(sp));
    NormedSpaceSpec spec = table_functionals(sp);
    for (int trial = 0; trial < 200; ++trial) {
      auto x = random_vector(rng, spec.n, spec.field);
      CHECK(table_norm(sp, x) == doctest::Approx(norm_from_system(spec, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("norm axioms hold on random pairs") {
  Rng rng(42);
  for (TableSpace sp : {TableSpace::R2Hexagon, TableSpace::R3Dodecahedron, TableSpace::R7,
                        TableSpace::C2, TableSpace::C3}) {
    CAPTURE(space_id_name(sp));
    NormedSpaceSpec spec = table_functionals(sp);
    for (int trial = 0; trial < 2000; ++trial) {
      auto x = random_vector(rng, spec.n, spec.field);
      auto y = random_vector(rng, spec.n, spec.field);
      const double nx = norm_from_system(spec, x);
      const double ny = norm_from_system(spec, y);

      cx scale = rng.gaussian_scalar(spec.field);
      std::vector<cx> sx(x);
      for (auto& v : sx) v *= scale;
      CHECK(norm_from_system(spec, sx) ==
            doctest::Approx(std::abs(scale) * nx).epsilon(1e-11));

      std::vector<cx> sum(x);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
      CHECK(norm_from_system(spec, sum) <= nx + ny + 1e-11);

      CHECK(nx > 0.0);  // x is nonzero almost surely
    }
  }
}

TEST_CASE("table and system functionals agree up to global scale in the real cases") {
  Rng rng(43);
  struct Case {
    TableSpace sp;
    std::size_t n;
    double ratio;
  };
  const Case cases[] = {{TableSpace::R2Hexagon, 2, 2.0},
                        {TableSpace::R3Dodecahedron, 3, std::pow(5.0, 0.25)}};
  for (const auto& c : cases) {
    NormedSpaceSpec sys = spec_from_system(construct_known_system(c.n, Field::Real));
    for (int trial = 0; trial < 1000; ++trial) {
      auto x = random_vector(rng, c.n, Field::Real);
      const double tv = table_norm(c.sp, x);
      const double sv = norm_from_system(sys, x);
      CHECK(std::abs(tv - c.ratio * sv) <= 1e-10 * std::max(1.0, tv));
    }
  }
}

TEST_CASE("unit balls are the hexagon and the dodecahedron") {
  auto hex_verts = ball_vertices(table_functionals(TableSpace::R2Hexagon));
  CHECK(hex_verts.size() == 6);
  auto dod_verts = ball_vertices(table_functionals(TableSpace::R3Dodecahedron));
  CHECK(dod_verts.size() == 20);

  // every vertex lies on the unit sphere of the norm
  for (const auto& v : hex_verts) {
    std::vector<cx> x{cx(v[0], 0), cx(v[1], 0)};
    CHECK(table_norm(TableSpace::R2Hexagon, x) == doctest::Approx(1.0).epsilon(1e-9));
  }
  for (const auto& v : dod_verts) {
    std::vector<cx> x{cx(v[0], 0), cx(v[1], 0), cx(v[2], 0)};
    CHECK(table_norm(TableSpace::R3Dodecahedron, x) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("spec validation rejects seminorms") {
  NormedSpaceSpec bad;
  bad.field = Field::Real;
  bad.n = 2;
  bad.functionals = Matrix(2, 2);
  bad.functionals(0, 0) = 1.0;
  bad.functionals(1, 0) = -2.0;  // both functionals vanish on e_2
  CHECK_THROWS_AS(bad.validate(), ShapeError);
}
