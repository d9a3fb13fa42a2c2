#include <doctest.h>

#include <cmath>

#include "projconst/errors.hpp"
#include "projconst/json_io.hpp"
#include "projconst/line_system.hpp"
#include "test_util.hpp"

using namespace projconst;

namespace {

const std::pair<std::size_t, Field> kSupported[] = {{2, Field::Real},
                                                    {3, Field::Real},
                                                    {7, Field::Real},
                                                    {2, Field::Complex},
                                                    {3, Field::Complex}};

LineSystem basis_lines(std::size_t n) {
  LineSystem s;
  s.field = Field::Real;
  s.n = n;
  s.vectors = Matrix::identity(n);
  return s;
}

}  // namespace

TEST_CASE("extremal parameters") {
  auto r3 = extremal_parameters(3, Field::Real);
  CHECK(r3.n_max == 6);
  CHECK(r3.alpha == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));

  auto c2 = extremal_parameters(2, Field::Complex);
  CHECK(c2.n_max == 4);
  CHECK(c2.alpha == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  auto r1 = extremal_parameters(1, Field::Real);
  CHECK(r1.n_max == 1);
  CHECK(r1.alpha == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  CHECK_THROWS_AS(extremal_parameters(0, Field::Real), DomainError);
}

TEST_CASE("gram matrix pinned cases") {
  CHECK((gram_matrix(basis_lines(4)) - Matrix::identity(4)).max_abs() == 0.0);

  // three vectors at mutual angle 2*pi/3: all off-diagonal entries -1/2
  LineSystem hex;
  hex.field = Field::Real;
  hex.n = 2;
  hex.vectors = Matrix(3, 2);
  for (int i = 0; i < 3; ++i) {
    hex.vectors(std::size_t(i), 0) = std::cos(2.0 * M_PI * i / 3.0);
    hex.vectors(std::size_t(i), 1) = std::sin(2.0 * M_PI * i / 3.0);
  }
  Matrix g = gram_matrix(hex);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t)
      CHECK(g(std::size_t(s), std::size_t(t)).real() ==
            doctest::Approx(s == t ? 1.0 : -0.5).epsilon(1e-14));

  Matrix gi = gram_matrix(construct_known_system(3, Field::Real));
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      if (s != t)
        CHECK(std::abs(gi(s, t)) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-13));
}

TEST_CASE("verify_equiangular pinned cases") {
  auto hex = verify_equiangular(construct_known_system(2, Field::Real), 1e-12);
  CHECK(hex.common_angle == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(hex.max_deviation < 1e-12);
  CHECK(hex.gerzon_saturated);
  CHECK(hex.forced_angle_matched);

  auto ico = verify_equiangular(construct_known_system(3, Field::Real), 1e-12);
  CHECK(ico.common_angle == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-13));
  CHECK(ico.gerzon_saturated);

  auto ortho = verify_equiangular(basis_lines(3), 1e-12);
  CHECK(ortho.common_angle == 0.0);
  CHECK(ortho.max_deviation == 0.0);
  CHECK(!ortho.gerzon_saturated);

  LineSystem single = basis_lines(1);
  CHECK_THROWS_AS(verify_equiangular(single, 1e-12), DomainError);
}

TEST_CASE("known constructions are saturated at the forced angle") {
  for (auto [n, f] : kSupported) {
    CAPTURE(n);
    LineSystem s = construct_known_system(n, f);
    auto ext = extremal_parameters(n, f);
    CHECK(s.count() == ext.n_max);
    CHECK(s.lines_distinct());
    auto cert = verify_equiangular(s, 1e-12);
    CHECK(cert.max_deviation <= 1e-12);
    CHECK(cert.gerzon_saturated);
    CHECK(cert.forced_angle_matched);
  }

  CHECK(construct_known_system(7, Field::Real).count() == 28);
  CHECK(verify_equiangular(construct_known_system(7, Field::Real), 1e-12).common_angle ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(construct_known_system(3, Field::Complex).count() == 9);
  CHECK(verify_equiangular(construct_known_system(3, Field::Complex), 1e-12).common_angle ==
        doctest::Approx(0.5).epsilon(1e-13));

  CHECK_THROWS_AS(construct_known_system(23, Field::Real), UnsupportedError);
  CHECK_THROWS_AS(construct_known_system(4, Field::Real), UnsupportedError);
  CHECK_THROWS_AS(construct_known_system(4, Field::Complex), UnsupportedError);
}

TEST_CASE("constructions are canonicalized") {
  for (auto [n, f] : kSupported) {
    LineSystem s = construct_known_system(n, f);
    for (std::size_t r = 0; r < s.count(); ++r) {
      for (std::size_t c = 0; c < s.n; ++c) {
        cx v = s.vectors(r, c);
        if (std::abs(v) > 1e-12) {
          CHECK(v.imag() == 0.0);
          CHECK(v.real() > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("tight frame residuals") {
  for (auto [n, f] : kSupported) {
    CAPTURE(n);
    LineSystem s = with_uniform_weights(construct_known_system(n, f));
    CHECK(tight_frame_residual(s) <= 1e-12);
  }

  LineSystem ortho = basis_lines(4);
  ortho.weights = std::vector<double>(4, 0.25);
  CHECK(tight_frame_residual(ortho) <= 1e-15);

  LineSystem hex = construct_known_system(2, Field::Real);
  hex.weights = std::vector<double>{0.5, 0.25, 0.25};
  CHECK(tight_frame_residual(hex) > 1e-2);

  LineSystem bare = construct_known_system(2, Field::Real);
  CHECK_THROWS_AS(tight_frame_residual(bare), PreconditionError);
}

TEST_CASE("rank-one independence") {
  for (auto [n, f] : kSupported) CHECK(rank_one_independence(construct_known_system(n, f)));

  LineSystem dup;
  dup.field = Field::Real;
  dup.n = 2;
  dup.vectors = Matrix(3, 2);
  dup.vectors(0, 0) = 1.0;
  dup.vectors(1, 0) = -1.0;  // same line as row 0
  dup.vectors(2, 1) = 1.0;
  CHECK(!rank_one_independence(dup));
  CHECK(!dup.lines_distinct());

  LineSystem two;
  two.field = Field::Real;
  two.n = 2;
  two.vectors = Matrix(2, 2);
  two.vectors(0, 0) = 1.0;
  two.vectors(1, 0) = std::sqrt(0.5);
  two.vectors(1, 1) = std::sqrt(0.5);
  CHECK(rank_one_independence(two));
}

TEST_CASE("certificates are rotation invariant") {
  Rng rng(5);
  for (auto [n, f] : kSupported) {
    CAPTURE(n);
    LineSystem s = construct_known_system(n, f);
    auto base = verify_equiangular(s, 1e-9);
    Matrix u = testutil::random_unitary(rng, n, f);
    LineSystem rotated = s;
    rotated.vectors = s.vectors * u.transpose();
    auto cert = verify_equiangular(rotated, 1e-9);
    CHECK(std::abs(cert.common_angle - base.common_angle) <= 1e-10);
    CHECK(std::abs(cert.max_deviation - base.max_deviation) <= 1e-10);
    CHECK(cert.gerzon_saturated == base.gerzon_saturated);
    CHECK(cert.forced_angle_matched == base.forced_angle_matched);
  }
}

TEST_CASE("line system json round trip") {
  LineSystem s = with_uniform_weights(construct_known_system(3, Field::Complex));
  ordered_json j = line_system_to_json(s);
  LineSystem back = line_system_from_json(j);
  CHECK(back.n == s.n);
  CHECK(back.count() == s.count());
  CHECK((back.vectors - s.vectors).max_abs() == 0.0);
  auto a = verify_equiangular(s, 1e-12);
  auto b = verify_equiangular(back, 1e-12);
  CHECK(a.common_angle == b.common_angle);
  CHECK(a.max_deviation == b.max_deviation);

  // real systems may be written with bare floats
  LineSystem hex = construct_known_system(2, Field::Real);
  ordered_json jh = line_system_to_json(hex);
  CHECK(jh["vectors"][0][0].is_number());
  CHECK(line_system_from_json(jh).count() == 3);
}

TEST_CASE("loader rejects malformed systems") {
  ordered_json j = line_system_to_json(construct_known_system(2, Field::Real));
  j["field"] = "quaternion";
  CHECK_THROWS_AS(line_system_from_json(j), SchemaError);

  ordered_json j2 = line_system_to_json(construct_known_system(2, Field::Real));
  j2["vectors"][0][0] = 2.0;  // not a unit vector
  CHECK_THROWS_AS(line_system_from_json(j2), SchemaError);

  ordered_json j3 = line_system_to_json(construct_known_system(2, Field::Real));
  j3["weights"] = std::vector<double>{0.5, 0.5, 0.5};
  CHECK_THROWS_AS(line_system_from_json(j3), SchemaError);
}
