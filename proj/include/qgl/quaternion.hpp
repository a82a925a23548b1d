#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace qgl {

// Norms at or below kZeroTol * (1 + scale) are treated as zero.
inline constexpr double kZeroTol = 1e-12;

/// A real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  double imag_norm() const { return std::sqrt(x * x + y * y + z * z); }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

/// Euclidean scalar product of the coordinate 4-vectors.
constexpr double inner_product(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

bool is_zero(const Quaternion& h, double scale = 0.0);

// Throws ZeroDivision when h is zero under is_zero.
Quaternion inverse(const Quaternion& h);

/// g h g^-1; a rotation of the imaginary part for nonzero g.
Quaternion conjugate_by(const Quaternion& g, const Quaternion& h);

/// A point of the imaginary unit sphere: Re = 0, norm 1.
class UnitImaginary {
 public:
  // Validates that q is already a unit imaginary within 1e-12. Throws DomainError otherwise.
  explicit UnitImaginary(const Quaternion& q);

  // Normalizes (x, y, z). Throws DomainError for the zero vector.
  static UnitImaginary normalized(double x, double y, double z);

  static UnitImaginary i() { return UnitImaginary(Quaternion::i()); }
  static UnitImaginary j() { return UnitImaginary(Quaternion::j()); }
  static UnitImaginary k() { return UnitImaginary(Quaternion::k()); }

  const Quaternion& q() const { return q_; }
  double x() const { return q_.x; }
  double y() const { return q_.y; }
  double z() const { return q_.z; }

  UnitImaginary operator-() const;
  operator const Quaternion&() const { return q_; }

 private:
  struct Unchecked {};
  UnitImaginary(const Quaternion& q, Unchecked) : q_(q) {}
  Quaternion q_;
};

/// Normalized imaginary part of h. Throws RealInput when h is real within tolerance.
UnitImaginary imaginary_unit_of(const Quaternion& h);

/// Orthonormal frame {1, I, J, K} with K = I J.
struct SliceBasis {
  UnitImaginary I = UnitImaginary::i();
  UnitImaginary J = UnitImaginary::j();
  UnitImaginary K = UnitImaginary::k();
};

/// Deterministic basis: J is the Gram-Schmidt image of j (or k when j is
/// nearly parallel to I) against {1, I}.
SliceBasis slice_basis(const UnitImaginary& I);

/// Basis with a caller-chosen J; throws DomainError unless J is orthogonal to I.
SliceBasis slice_basis(const UnitImaginary& I, const UnitImaginary& J);

/// a + I b, an element of the plane R[I].
struct SliceComplex {
  double a = 0.0;
  double b = 0.0;
  UnitImaginary slice = UnitImaginary::i();

  Quaternion to_quaternion() const { return Quaternion(a) + slice.q() * b; }
  std::complex<double> chart() const { return {a, b}; }
  double norm() const { return std::hypot(a, b); }
};

/// Orthogonal projection of h onto R[I], as a + I b.
SliceComplex project_to_slice(const Quaternion& h, const UnitImaginary& I);

/// h = z1 + J z2 with z1, z2 in R[I]; z1 is the orthogonal projection onto R[I].
std::pair<SliceComplex, SliceComplex> decompose(const Quaternion& h, const SliceBasis& basis);

}  // namespace qgl
