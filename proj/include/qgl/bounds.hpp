#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>

#include "qgl/parallel.hpp"
#include "qgl/qpolynomial.hpp"

namespace qgl {

/// A real number or +infinity.
class ExtendedReal {
 public:
  constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT: implicit by intent
  static constexpr ExtendedReal infinity() { return {std::numeric_limits<double>::infinity()}; }

  constexpr bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  constexpr double value() const { return value_; }

  friend constexpr ExtendedReal min(ExtendedReal a, ExtendedReal b) { return a.value_ <= b.value_ ? a : b; }
  friend constexpr bool operator==(ExtendedReal, ExtendedReal) = default;
  friend constexpr auto operator<=>(ExtendedReal a, ExtendedReal b) { return a.value_ <=> b.value_; }

 private:
  double value_;
};

// C(P) = |a_n|^-1 sqrt(sum_t |a_t|^2) after stripping near-zero leading
// coefficients; +infinity when what remains is constant (or zero).
ExtendedReal coefficient_bound_C(std::span<const std::complex<double>> coeffs);
ExtendedReal coefficient_bound_C(const SlicePolynomial& S);
ExtendedReal coefficient_bound_C(const QPolynomial& P);

/// Estimated supremum over the imaginary sphere, with the maximizing direction.
struct SupEstimate {
  double value = 0.0;
  UnitImaginary witness = UnitImaginary::i();
  std::size_t samples = 0;
};

// sup_I C(P_I): max over the Fibonacci lattice, then 50 steps of coordinate
// ascent in spherical angles around the best lattice point.
SupEstimate bound_snail(const QPolynomial& P, std::size_t samples, Execution exec = Execution::Parallel);

// sup_I min(C(P_I), C(P_I^perp)) estimated the same way.
SupEstimate bound_snm(const QPolynomial& P, std::size_t samples, Execution exec = Execution::Parallel);

double snail_objective(const QPolynomial& P, const UnitImaginary& I);
double snm_objective(const QPolynomial& P, const UnitImaginary& I);

}  // namespace qgl
