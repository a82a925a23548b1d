#include "qgl/qpolynomial.hpp"

#include <algorithm>
#include <cmath>

namespace qgl {

namespace {

constexpr double kStripTol = 1e-12;

template <typename Norm>
int stripped_degree(std::size_t n, Norm norm_at) {
  double max_norm = 0.0;
  for (std::size_t t = 0; t < n; ++t) max_norm = std::max(max_norm, norm_at(t));
  if (max_norm == 0.0) return kZeroDegree;
  for (std::size_t t = n; t-- > 0;) {
    if (norm_at(t) > kStripTol * max_norm) return static_cast<int>(t);
  }
  return kZeroDegree;
}

}  // namespace

int QPolynomial::degree() const {
  return stripped_degree(coeffs_.size(), [&](std::size_t t) { return coeffs_[t].norm(); });
}

double QPolynomial::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& a : coeffs_) m = std::max(m, a.norm());
  return m;
}

double QPolynomial::coeff_norm_sum() const {
  double s = 0.0;
  for (const auto& a : coeffs_) s += a.norm();
  return s;
}

QPolynomial QPolynomial::stripped() const {
  const int d = degree();
  return QPolynomial(std::vector<Quaternion>(coeffs_.begin(), coeffs_.begin() + (d + 1)));
}

double QPolynomial::residual_scale(double r) const {
  const double base = std::max(1.0, r);
  double s = 0.0;
  double p = 1.0;
  for (const auto& a : coeffs_) {
    s += a.norm() * p;
    p *= base;
  }
  return s;
}

Quaternion evaluate(const QPolynomial& P, const Quaternion& h) {
  Quaternion acc;
  const auto& c = P.coeffs();
  for (std::size_t t = c.size(); t-- > 0;) acc = acc * h + c[t];
  return acc;
}

QPolynomial derivative(const QPolynomial& P) {
  const auto& c = P.coeffs();
  if (c.size() <= 1) return QPolynomial();
  std::vector<Quaternion> d(c.size() - 1);
  for (std::size_t t = 1; t < c.size(); ++t) d[t - 1] = c[t] * static_cast<double>(t);
  return QPolynomial(std::move(d));
}

SlicePolynomial::SlicePolynomial(std::vector<std::complex<double>> coeffs, UnitImaginary slice,
                                 std::optional<UnitImaginary> prefactor)
    : coeffs_(std::move(coeffs)), slice_(slice), prefactor_(prefactor) {}

SliceComplex SlicePolynomial::coefficient(std::size_t t) const {
  return {coeffs_[t].real(), coeffs_[t].imag(), slice_};
}

int SlicePolynomial::degree() const {
  return stripped_degree(coeffs_.size(), [&](std::size_t t) { return std::abs(coeffs_[t]); });
}

double SlicePolynomial::coeff_norm_sum() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

std::vector<std::complex<double>> SlicePolynomial::stripped_coeffs() const {
  const int d = degree();
  return {coeffs_.begin(), coeffs_.begin() + (d + 1)};
}

std::complex<double> SlicePolynomial::evaluate_chart(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t t = coeffs_.size(); t-- > 0;) acc = acc * z + coeffs_[t];
  return acc;
}

Quaternion SlicePolynomial::evaluate(const SliceComplex& h) const {
  // Project h onto this polynomial's slice; for h in R[I] this is exact.
  const SliceComplex local = project_to_slice(h.to_quaternion(), slice_);
  const std::complex<double> v = evaluate_chart(local.chart());
  Quaternion q = SliceComplex{v.real(), v.imag(), slice_}.to_quaternion();
  if (prefactor_) q = prefactor_->q() * q;
  return q;
}

SlicePolynomial SlicePolynomial::derivative() const {
  std::vector<std::complex<double>> d;
  for (std::size_t t = 1; t < coeffs_.size(); ++t) d.push_back(coeffs_[t] * static_cast<double>(t));
  return SlicePolynomial(std::move(d), slice_, prefactor_);
}

QPolynomial SlicePolynomial::to_quaternionic() const {
  std::vector<Quaternion> out;
  out.reserve(coeffs_.size());
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    Quaternion q = coefficient(t).to_quaternion();
    if (prefactor_) q = prefactor_->q() * q;
    out.push_back(q);
  }
  return QPolynomial(std::move(out));
}

Projection project(const QPolynomial& P, const UnitImaginary& I) { return project(P, slice_basis(I)); }

Projection project(const QPolynomial& P, const SliceBasis& basis) {
  // Components below this are rounding dust from the projection itself.
  const double dust = kStripTol * P.max_coeff_norm();
  auto clean = [dust](std::complex<double> c) {
    return std::abs(c) <= dust ? std::complex<double>(0.0, 0.0) : c;
  };
  std::vector<std::complex<double>> plane;
  std::vector<std::complex<double>> perp;
  plane.reserve(P.size());
  perp.reserve(P.size());
  for (const auto& a : P.coeffs()) {
    const auto [z1, z2] = decompose(a, basis);
    plane.push_back(clean(z1.chart()));
    perp.push_back(clean(z2.chart()));
  }
  return {SlicePolynomial(std::move(plane), basis.I),
          SlicePolynomial(std::move(perp), basis.I, basis.J), basis};
}

}  // namespace qgl
