#pragma once

#include <cstdint>
#include <vector>

#include "qgl/hull.hpp"
#include "qgl/parallel.hpp"
#include "qgl/slice_roots.hpp"

namespace qgl {

/// Hulls of one slice: snail = conv R(P_I), cosnail = conv R(P_I^perp)
/// (from the roots of Q_I), snm = their intersection.
struct SnmSlice {
  UnitImaginary slice = UnitImaginary::i();
  Projection projection;
  std::vector<SliceComplex> plane_roots;
  std::vector<SliceComplex> perp_roots;
  ConvexRegion2D snail;
  ConvexRegion2D cosnail;
  ConvexRegion2D snm;
};

/// Hull of the roots of a slice polynomial: WholePlane for the zero
/// polynomial, Empty for a nonzero constant.
ConvexRegion2D root_hull(const SlicePolynomial& S, std::vector<SliceComplex>* roots = nullptr);

SnmSlice snm_slice(const QPolynomial& P, const UnitImaginary& I);

/// Chart coordinates of h in the slice I (h must lie in R[I]).
Point2 chart_of(const Quaternion& h, const UnitImaginary& I);

struct Membership {
  bool inside = false;
  UnitImaginary slice = UnitImaginary::i();
  double distance = 0.0;  // distance to snm in the deciding slice
};

/// Slices tried for a real point: normalized imaginary parts of the
/// coefficients first, then the Fibonacci lattice.
std::vector<UnitImaginary> real_point_slices(const QPolynomial& P, std::size_t sphere_samples);

/// Is h within eps of snm(P)? A non-real h is tested in its own slice only;
/// a real h is tested against real_point_slices until one contains it.
Membership membership_snm(const QPolynomial& P, const Quaternion& h, double eps, std::size_t sphere_samples);

struct VerifyConfig {
  double tol_rel = 1e-6;  // eps = tol_rel * (1 + largest root modulus in the slice)
  std::size_t sphere_samples = 2000;
  std::uint64_t seed = 0;
  std::size_t sphere_probes = 8;
};

enum class ProbeKind { IsolatedRoot, RealRoot, SphereProbe };

std::string to_string(ProbeKind kind);

/// One derivative root (or sphere probe) checked against its slice.
struct ProbeResult {
  ProbeKind kind = ProbeKind::IsolatedRoot;
  Quaternion point;
  Point2 chart;
  double residual = 0.0;  // |P'(point)|
  double eps = 0.0;
  double dist_snm = 0.0;
  double dist_snail = 0.0;
  double dist_cosnail = 0.0;
  bool in_snm = false;
  bool in_snail = false;
  // Classical Gauss-Lucas inside the slice: roots of (P_I)' within eps of the
  // snail and roots of (Q_I)' within eps of the cosnail.
  double classical_dist = 0.0;
  bool classical_ok = false;
  SnmSlice geometry;
};

struct VerificationReport {
  QPolynomial polynomial;
  QPolynomial derivative;
  RootSetH derivative_roots;
  std::vector<ProbeResult> probes;
  VerifyConfig config;
  bool pass = false;            // every probe in snm
  bool snail_pass = false;      // every probe in the snail
  bool classical_pass = false;  // classical containment in every probed slice

  bool all_pass() const { return pass && snail_pass && classical_pass; }
};

/// Computes the roots of P' and checks each against snm(P), the snail, and
/// classical Gauss-Lucas in its slice. Requires degree >= 2.
VerificationReport verify_theorem(const QPolynomial& P, const VerifyConfig& config = {});

/// verify_theorem over many polynomials; results are in input order.
std::vector<VerificationReport> verify_batch(const std::vector<QPolynomial>& polys, const VerifyConfig& config,
                                             Execution exec = Execution::Parallel);

}  // namespace qgl
