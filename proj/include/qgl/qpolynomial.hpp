#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qgl/quaternion.hpp"

namespace qgl {

// Degree of the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// One-sided polynomial sum_t a_t x^t with quaternion coefficients on the left.
/// Coefficients are stored in ascending degree.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}
  QPolynomial(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) {}

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Quaternion& operator[](std::size_t t) const { return coeffs_[t]; }

  // Highest index whose coefficient exceeds 1e-12 * max coefficient norm;
  // kZeroDegree for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() == kZeroDegree; }
  double max_coeff_norm() const;
  // Sum of coefficient norms.
  double coeff_norm_sum() const;

  // Copy with near-zero leading coefficients removed.
  QPolynomial stripped() const;

  // sum_t |a_t| max(1, r)^t, the natural residual scale at radius r.
  double residual_scale(double r) const;

 private:
  std::vector<Quaternion> coeffs_;
};

/// P(h) = sum_t a_t h^t; coefficients never commute past h.
Quaternion evaluate(const QPolynomial& P, const Quaternion& h);

QPolynomial derivative(const QPolynomial& P);

/// Polynomial with coefficients in R[I], stored in the chart a + I b -> a + i b.
/// When a prefactor J is present the polynomial represents J * (this), which
/// is how the orthogonal-complement projection is carried.
class SlicePolynomial {
 public:
  SlicePolynomial() : slice_(UnitImaginary::i()) {}
  SlicePolynomial(std::vector<std::complex<double>> coeffs, UnitImaginary slice,
                  std::optional<UnitImaginary> prefactor = std::nullopt);

  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
  const UnitImaginary& slice() const { return slice_; }
  const std::optional<UnitImaginary>& prefactor() const { return prefactor_; }

  SliceComplex coefficient(std::size_t t) const;
  int degree() const;
  bool is_zero() const { return degree() == kZeroDegree; }
  double coeff_norm_sum() const;

  // Coefficients with near-zero leading terms removed.
  std::vector<std::complex<double>> stripped_coeffs() const;

  // Value of the inner polynomial (without prefactor) at a chart point.
  std::complex<double> evaluate_chart(std::complex<double> z) const;

  // Value as a quaternion at a + I b, including the prefactor.
  Quaternion evaluate(const SliceComplex& h) const;

  // Coefficient-wise derivative; the prefactor is kept.
  SlicePolynomial derivative() const;

  // The represented polynomial lifted back to H[x], prefactor applied.
  QPolynomial to_quaternionic() const;

 private:
  std::vector<std::complex<double>> coeffs_;
  UnitImaginary slice_;
  std::optional<UnitImaginary> prefactor_;
};

/// P restricted to R[I] splits as P_I + J Q_I. `plane` is P_I, `perp` is Q_I
/// carrying J as its prefactor.
struct Projection {
  SlicePolynomial plane;
  SlicePolynomial perp;
  SliceBasis basis;
};

Projection project(const QPolynomial& P, const UnitImaginary& I);
Projection project(const QPolynomial& P, const SliceBasis& basis);

}  // namespace qgl
