#include "qgl/random.hpp"

#include "qgl/error.hpp"

namespace qgl {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Quaternion Rng::in_ball(double radius) {
  for (;;) {
    const Quaternion q(uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    if (q.norm2() <= 1.0) return q * radius;
  }
}

UnitImaginary Rng::unit_imaginary() {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    const double z = uniform(-1.0, 1.0);
    const double r2 = x * x + y * y + z * z;
    if (r2 <= 1.0 && r2 > 1e-6) return UnitImaginary::normalized(x, y, z);
  }
}

QPolynomial random_polynomial(std::uint64_t seed, int degree, double coeff_scale) {
  if (degree < 1) throw DomainError("random_polynomial needs degree >= 1");
  if (!(coeff_scale > 0.0)) throw DomainError("coefficient scale must be positive");
  Rng rng(seed);
  std::vector<Quaternion> c(static_cast<std::size_t>(degree) + 1);
  for (int t = 0; t < degree; ++t) c[t] = rng.in_ball(coeff_scale);
  do {
    c[degree] = rng.in_ball(coeff_scale);
  } while (c[degree].norm() < 0.1 * coeff_scale);
  return QPolynomial(std::move(c));
}

}  // namespace qgl
