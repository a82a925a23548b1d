#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qgl/quaternion.hpp"

namespace qgl::test {

using C = std::complex<double>;
using M2 = std::array<C, 4>;  // row-major 2x2

// h = (w + x i) + (y + z i) j  <->  [[w + x i, y + z i], [-y + z i, w - x i]]
inline M2 to_matrix(const Quaternion& h) {
  return {C(h.w, h.x), C(h.y, h.z), C(-h.y, h.z), C(h.w, -h.x)};
}

inline Quaternion from_matrix(const M2& m) { return {m[0].real(), m[0].imag(), m[1].real(), m[1].imag()}; }

inline M2 matmul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

// Product computed through the complex 2x2 representation.
inline Quaternion matrix_product(const Quaternion& p, const Quaternion& q) {
  return from_matrix(matmul(to_matrix(p), to_matrix(q)));
}

inline double dist(const Quaternion& p, const Quaternion& q) { return (p - q).norm(); }

inline void check_close(const Quaternion& got, const Quaternion& want, double tol) {
  INFO("got (", got.w, ", ", got.x, ", ", got.y, ", ", got.z, ") want (", want.w, ", ", want.x, ", ", want.y, ", ",
       want.z, ")");
  CHECK(dist(got, want) <= tol);
}

// Every element of a has a partner in b within tol, with a one-to-one assignment by greedy nearest.
template <typename T, typename Dist>
bool same_multiset(std::vector<T> a, std::vector<T> b, double tol, Dist d) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](const T& u, const T& v) { return d(x, u) < d(x, v); });
    if (it == b.end() || d(x, *it) > tol) return false;
    b.erase(it);
  }
  return true;
}

}  // namespace qgl::test
