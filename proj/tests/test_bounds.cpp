#include <doctest.h>

#include <cmath>

#include "projconst/bounds.hpp"
#include "projconst/errors.hpp"

using namespace projconst;

TEST_CASE("closed-form bound values") {
  CHECK(bounds_summary(2, Field::Real).g == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(bounds_summary(3, Field::Real).g ==
        doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(bounds_summary(7, Field::Real).g == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(bounds_summary(23, Field::Real).g == doctest::Approx(14.0 / 3.0).epsilon(1e-15));
  CHECK(bounds_summary(2, Field::Complex).g ==
        doctest::Approx((1.0 + std::sqrt(3.0)) / 2.0).epsilon(1e-15));
  CHECK(bounds_summary(3, Field::Complex).g == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(bounds_summary(1, Field::Real).g == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(bounds_summary(1, Field::Complex).g == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(bounds_summary(0, Field::Real), DomainError);
}

TEST_CASE("equality chain reproduces the bound") {
  for (Field f : {Field::Real, Field::Complex})
    for (std::size_t n = 1; n <= 100; ++n) {
      BoundsSummary b = bounds_summary(n, f);
      CHECK(std::abs(b.equality_chain - b.g) <= 1e-12);
    }
}

TEST_CASE("bound improves on sqrt(n)") {
  for (Field f : {Field::Real, Field::Complex})
    for (std::size_t n = 2; n <= 1000; ++n) {
      BoundsSummary b = bounds_summary(n, f);
      CHECK(b.g < b.kadec_snobar);
    }
}

TEST_CASE("asymptotic expansion error decays like n^{-3/2}") {
  for (Field f : {Field::Real, Field::Complex})
    for (std::size_t n : {10u, 100u, 1000u, 10000u, 100000u, 1000000u}) {
      BoundsSummary b = bounds_summary(n, f);
      CHECK(std::abs(b.g - b.asymptotic) * std::pow(double(n), 1.5) <= 10.0);
    }
}
