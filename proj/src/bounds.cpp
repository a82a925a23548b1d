#include "qgl/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qgl/error.hpp"
#include "qgl/sphere_lattice.hpp"

namespace qgl {

namespace {

constexpr int kRefineSteps = 50;

template <typename NormAt>
ExtendedReal bound_from_norms(int degree, NormAt norm_at) {
  if (degree < 1) return ExtendedReal::infinity();
  double sum = 0.0;
  for (int t = 0; t <= degree; ++t) {
    const double n = norm_at(t);
    sum += n * n;
  }
  return std::sqrt(sum) / norm_at(degree);
}

UnitImaginary from_angles(double theta, double phi) {
  return UnitImaginary::normalized(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                   std::cos(theta));
}

template <typename Objective>
SupEstimate maximize_on_sphere(Objective objective, std::size_t samples, Execution exec) {
  if (samples == 0) throw DomainError("sphere sample count must be positive");
  const ArgMax best = argmax(
      samples, [&](std::size_t k) { return objective(fibonacci_direction(k, samples)); }, exec);

  SupEstimate est{best.value, fibonacci_direction(best.index, samples), samples};
  if (std::isinf(est.value)) return est;

  const UnitImaginary start = est.witness;
  double theta = std::acos(std::clamp(start.z(), -1.0, 1.0));
  double phi = std::atan2(start.y(), start.x());
  double step = std::sqrt(4.0 * std::numbers::pi / static_cast<double>(samples));
  for (int s = 0; s < kRefineSteps; ++s) {
    const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    bool improved = false;
    double next_theta = theta;
    double next_phi = phi;
    for (const auto& m : moves) {
      const UnitImaginary cand = from_angles(theta + m[0], phi + m[1]);
      const double v = objective(cand);
      if (v > est.value) {
        est.value = v;
        est.witness = cand;
        next_theta = theta + m[0];
        next_phi = phi + m[1];
        improved = true;
      }
    }
    if (improved) {
      theta = next_theta;
      phi = next_phi;
    } else {
      step *= 0.5;
    }
  }
  return est;
}

}  // namespace

ExtendedReal coefficient_bound_C(std::span<const std::complex<double>> coeffs) {
  double max_norm = 0.0;
  for (const auto& c : coeffs) max_norm = std::max(max_norm, std::abs(c));
  int degree = kZeroDegree;
  for (std::size_t t = coeffs.size(); t-- > 0;) {
    if (std::abs(coeffs[t]) > 1e-12 * max_norm) {
      degree = static_cast<int>(t);
      break;
    }
  }
  return bound_from_norms(degree, [&](int t) { return std::abs(coeffs[t]); });
}

ExtendedReal coefficient_bound_C(const SlicePolynomial& S) {
  // |J q| = |q|, so the prefactor does not enter.
  return coefficient_bound_C(std::span<const std::complex<double>>(S.coeffs()));
}

ExtendedReal coefficient_bound_C(const QPolynomial& P) {
  return bound_from_norms(P.degree(), [&](int t) { return P[t].norm(); });
}

double snail_objective(const QPolynomial& P, const UnitImaginary& I) {
  return coefficient_bound_C(project(P, I).plane).value();
}

double snm_objective(const QPolynomial& P, const UnitImaginary& I) {
  const Projection pr = project(P, I);
  return min(coefficient_bound_C(pr.plane), coefficient_bound_C(pr.perp)).value();
}

SupEstimate bound_snail(const QPolynomial& P, std::size_t samples, Execution exec) {
  if (P.degree() < 1) throw DomainError("bound_snail needs a polynomial of degree >= 1");
  return maximize_on_sphere([&](const UnitImaginary& I) { return snail_objective(P, I); }, samples, exec);
}

SupEstimate bound_snm(const QPolynomial& P, std::size_t samples, Execution exec) {
  if (P.degree() < 1) throw DomainError("bound_snm needs a polynomial of degree >= 1");
  return maximize_on_sphere([&](const UnitImaginary& I) { return snm_objective(P, I); }, samples, exec);
}

}  // namespace qgl
