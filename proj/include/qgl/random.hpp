#pragma once

#include <cstdint>
#include <random>

#include "qgl/qpolynomial.hpp"

namespace qgl {

/// Seeded generator whose doubles do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Quaternion in_ball(double radius);
  UnitImaginary unit_imaginary();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients uniform in the ball of radius coeff_scale; the leading one is
/// resampled until its norm is at least 0.1 * coeff_scale. Same seed, same polynomial.
QPolynomial random_polynomial(std::uint64_t seed, int degree, double coeff_scale);

}  // namespace qgl
