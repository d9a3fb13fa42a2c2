#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "projconst/field.hpp"

namespace projconst {

/// Deterministic random source. mt19937_64 output is fixed by the standard;
/// the Gaussian transform is spelled out here so streams are reproducible
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return double(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  cx gaussian_scalar(Field f) {
    if (f == Field::Real) return cx(gaussian(), 0.0);
    return cx(gaussian() * M_SQRT1_2, gaussian() * M_SQRT1_2);
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace projconst
