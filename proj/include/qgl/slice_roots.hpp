#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qgl/qpolynomial.hpp"

namespace qgl {

/// Roots of a complex polynomial (ascending coefficients) by Aberth-Ehrlich
/// simultaneous iteration, with multiplicity, sorted by (real, imag).
/// Throws ZeroPolynomial for the zero polynomial and NonConvergence when a
/// root fails the residual check |p(z)| <= 1e-9 * sum_t |c_t| max(1,|z|)^t
/// after 200 iterations. Constants have no roots.
std::vector<std::complex<double>> complex_roots(std::span<const std::complex<double>> coeffs);

/// Roots of a slice polynomial in its own plane R[I].
std::vector<SliceComplex> roots_in_slice(const SlicePolynomial& S);

/// A root sphere {alpha + beta I : I in S}.
struct RootSphere {
  double alpha = 0.0;
  double beta = 0.0;

  Quaternion point(const UnitImaginary& I) const { return Quaternion(alpha) + I.q() * beta; }
};

/// Quaternionic root set: isolated roots plus whole root spheres.
struct RootSetH {
  std::vector<Quaternion> isolated;
  std::vector<RootSphere> spheres;
};

enum class SphereKind { Spherical, Isolated, NoRoot };

struct SphereResolution {
  SphereKind kind = SphereKind::NoRoot;
  Quaternion root;  // set for Isolated
};

/// Decides how P vanishes on the sphere alpha + beta S. Writing
/// P(alpha + beta I) = A + B I, the sphere is a root sphere when A = B = 0,
/// otherwise the only candidate is I* = -B^-1 A.
SphereResolution sphere_resolve(const QPolynomial& P, double alpha, double beta);

/// Real coefficients of the companion polynomial P * conj(P) (central variable).
std::vector<double> companion_polynomial(const QPolynomial& P);

/// All quaternionic roots of P (degree >= 1), found from the complex roots of
/// the companion polynomial. Isolated roots are Newton-polished and sorted.
RootSetH roots_quaternionic(const QPolynomial& P);

/// Newton iteration for P(h) = 0 in H using the real 4x4 Jacobian.
Quaternion newton_polish(const QPolynomial& P, Quaternion h, int max_steps = 12);

/// Residual tolerance 1e-8 * sum_t |a_t| max(1, |h|)^t for accepting a root.
bool is_root(const QPolynomial& P, const Quaternion& h, double rel_tol = 1e-8);

struct CommonRoots {
  bool whole_plane = false;
  std::vector<SliceComplex> roots;
};

/// Roots of P_I matched (one-to-one, within eps) to roots of Q_I. A zero input
/// contributes every point, so the other input's roots are returned; two zero
/// inputs yield the whole plane.
CommonRoots common_roots(const SlicePolynomial& plane, const SlicePolynomial& perp, double eps = 1e-6);

}  // namespace qgl
