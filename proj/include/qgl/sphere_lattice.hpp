#pragma once

#include <cstddef>
#include <vector>

#include "qgl/quaternion.hpp"

namespace qgl {

/// k-th point of the n-point Fibonacci lattice on the imaginary unit sphere.
UnitImaginary fibonacci_direction(std::size_t k, std::size_t n);

/// All n lattice points in index order.
std::vector<UnitImaginary> fibonacci_sphere(std::size_t n);

/// n directions equally spaced on the great circle through i and j.
std::vector<UnitImaginary> great_circle_directions(std::size_t n);

}  // namespace qgl
