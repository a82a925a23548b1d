#include "qgl/quaternion.hpp"

#include "qgl/error.hpp"

namespace qgl {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kProbeTol = 1e-8;

}  // namespace

bool is_zero(const Quaternion& h, double scale) { return h.norm() <= kZeroTol * (1.0 + scale); }

Quaternion inverse(const Quaternion& h) {
  if (is_zero(h)) throw ZeroDivision();
  return h.conj() / h.norm2();
}

Quaternion conjugate_by(const Quaternion& g, const Quaternion& h) { return g * h * inverse(g); }

UnitImaginary::UnitImaginary(const Quaternion& q) : q_(q) {
  if (std::abs(q.w) > kUnitTol || std::abs(q.norm() - 1.0) > kUnitTol) {
    throw DomainError("not a unit imaginary quaternion");
  }
}

UnitImaginary UnitImaginary::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > kZeroTol)) throw DomainError("cannot normalize a zero imaginary direction");
  return UnitImaginary(Quaternion(0.0, x / n, y / n, z / n), Unchecked{});
}

UnitImaginary UnitImaginary::operator-() const { return UnitImaginary(-q_, Unchecked{}); }

UnitImaginary imaginary_unit_of(const Quaternion& h) {
  if (h.imag_norm() <= kZeroTol * (1.0 + std::abs(h.w))) throw RealInput();
  return UnitImaginary::normalized(h.x, h.y, h.z);
}

SliceBasis slice_basis(const UnitImaginary& I) {
  auto orthogonalize = [&](const Quaternion& probe) {
    return probe - I.q() * inner_product(probe, I.q());
  };
  Quaternion r = orthogonalize(Quaternion::j());
  if (r.norm() < kProbeTol) r = orthogonalize(Quaternion::k());
  const UnitImaginary J = UnitImaginary::normalized(r.x, r.y, r.z);
  const Quaternion K = I.q() * J.q();
  return {I, J, UnitImaginary::normalized(K.x, K.y, K.z)};
}

SliceBasis slice_basis(const UnitImaginary& I, const UnitImaginary& J) {
  if (std::abs(inner_product(I.q(), J.q())) > kUnitTol) {
    throw DomainError("J must be orthogonal to I");
  }
  const Quaternion K = I.q() * J.q();
  return {I, J, UnitImaginary::normalized(K.x, K.y, K.z)};
}

SliceComplex project_to_slice(const Quaternion& h, const UnitImaginary& I) {
  return {h.w, inner_product(I.q(), h), I};
}

std::pair<SliceComplex, SliceComplex> decompose(const Quaternion& h, const SliceBasis& basis) {
  // J (c + d I) = c J + d J I, and {J, J I} is an orthonormal basis of R[I]^perp.
  const Quaternion JI = basis.J.q() * basis.I.q();
  SliceComplex z1 = project_to_slice(h, basis.I);
  SliceComplex z2{inner_product(basis.J.q(), h), inner_product(JI, h), basis.I};
  return {z1, z2};
}

}  // namespace qgl
