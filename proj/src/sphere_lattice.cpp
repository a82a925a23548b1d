#include "qgl/sphere_lattice.hpp"

#include <cmath>
#include <numbers>

namespace qgl {

UnitImaginary fibonacci_direction(std::size_t k, std::size_t n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * static_cast<double>(k);
  return UnitImaginary::normalized(r * std::cos(phi), r * std::sin(phi), z);
}

std::vector<UnitImaginary> fibonacci_sphere(std::size_t n) {
  std::vector<UnitImaginary> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(fibonacci_direction(k, n));
  return out;
}

std::vector<UnitImaginary> great_circle_directions(std::size_t n) {
  std::vector<UnitImaginary> out;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    out.push_back(UnitImaginary::normalized(std::cos(theta), std::sin(theta), 0.0));
  }
  return out;
}

}  // namespace qgl
