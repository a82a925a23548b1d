#include "qgl/hull_sets.hpp"

#include <algorithm>
#include <cmath>

#include "qgl/error.hpp"
#include "qgl/sphere_lattice.hpp"

namespace qgl {

namespace {

double max_modulus(const std::vector<SliceComplex>& roots) {
  double m = 0.0;
  for (const auto& r : roots) m = std::max(m, r.norm());
  return m;
}

// Largest distance from a root of S' to `hull`; 0 when S is constant (the
// classical statement needs a nonconstant polynomial).
double classical_distance(const SlicePolynomial& S, const ConvexRegion2D& hull) {
  if (S.degree() < 1) return 0.0;
  const SlicePolynomial dS = S.derivative();
  if (dS.degree() < 1) return 0.0;
  double worst = 0.0;
  for (const auto& r : roots_in_slice(dS)) worst = std::max(worst, distance(hull, {r.a, r.b}));
  return worst;
}

ProbeResult check_probe(const QPolynomial& P, const QPolynomial& dP, const Quaternion& h, ProbeKind kind,
                        const UnitImaginary& I, double tol_rel) {
  ProbeResult out;
  out.kind = kind;
  out.point = h;
  out.chart = chart_of(h, I);
  out.residual = evaluate(dP, h).norm();
  out.geometry = snm_slice(P, I);
  const SnmSlice& g = out.geometry;
  const double scale = std::max({max_modulus(g.plane_roots), max_modulus(g.perp_roots), h.norm()});
  out.eps = tol_rel * (1.0 + scale);
  out.dist_snm = distance(g.snm, out.chart);
  out.dist_snail = distance(g.snail, out.chart);
  out.dist_cosnail = distance(g.cosnail, out.chart);
  out.in_snm = contains(g.snm, out.chart, out.eps);
  out.in_snail = contains(g.snail, out.chart, out.eps);
  out.classical_dist = std::max(classical_distance(g.projection.plane, g.snail),
                                classical_distance(g.projection.perp, g.cosnail));
  out.classical_ok = out.classical_dist <= out.eps;
  return out;
}

}  // namespace

std::string to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::IsolatedRoot: return "isolated_root";
    case ProbeKind::RealRoot: return "real_root";
    case ProbeKind::SphereProbe: return "sphere_probe";
  }
  return "unknown";
}

ConvexRegion2D root_hull(const SlicePolynomial& S, std::vector<SliceComplex>* roots) {
  if (S.is_zero()) return ConvexRegion2D::whole_plane();
  std::vector<SliceComplex> found = roots_in_slice(S);
  std::vector<Point2> pts;
  pts.reserve(found.size());
  for (const auto& r : found) pts.push_back({r.a, r.b});
  if (roots) *roots = std::move(found);
  return convex_hull(pts);
}

SnmSlice snm_slice(const QPolynomial& P, const UnitImaginary& I) {
  if (P.degree() < 1) throw DomainError("snm_slice needs a polynomial of degree >= 1");
  SnmSlice out;
  out.slice = I;
  out.projection = project(P, I);
  out.snail = root_hull(out.projection.plane, &out.plane_roots);
  out.cosnail = root_hull(out.projection.perp, &out.perp_roots);
  out.snm = intersect(out.snail, out.cosnail);
  return out;
}

Point2 chart_of(const Quaternion& h, const UnitImaginary& I) { return {h.w, inner_product(I.q(), h)}; }

std::vector<UnitImaginary> real_point_slices(const QPolynomial& P, std::size_t sphere_samples) {
  std::vector<UnitImaginary> out;
  for (const auto& a : P.coeffs()) {
    if (a.imag_norm() > kZeroTol * (1.0 + a.norm())) out.push_back(imaginary_unit_of(a));
  }
  const auto lattice = fibonacci_sphere(sphere_samples);
  out.insert(out.end(), lattice.begin(), lattice.end());
  return out;
}

Membership membership_snm(const QPolynomial& P, const Quaternion& h, double eps, std::size_t sphere_samples) {
  if (!(eps > 0.0)) throw DomainError("membership tolerance must be positive");
  if (h.imag_norm() > kZeroTol * (1.0 + std::abs(h.w))) {
    const UnitImaginary I = imaginary_unit_of(h);
    const SnmSlice s = snm_slice(P, I);
    const Point2 p = chart_of(h, I);
    return {contains(s.snm, p, eps), I, distance(s.snm, p)};
  }
  const Point2 p{h.w, 0.0};
  Membership best;
  best.distance = std::numeric_limits<double>::infinity();
  for (const auto& I : real_point_slices(P, sphere_samples)) {
    const SnmSlice s = snm_slice(P, I);
    const double d = distance(s.snm, p);
    if (contains(s.snm, p, eps)) return {true, I, d};
    if (d < best.distance) best = {false, I, d};
  }
  return best;
}

VerificationReport verify_theorem(const QPolynomial& P, const VerifyConfig& config) {
  VerificationReport report;
  report.polynomial = P.stripped();
  report.config = config;
  const QPolynomial& Ps = report.polynomial;
  if (Ps.degree() < 2) throw DomainError("verify_theorem needs a polynomial of degree >= 2");

  report.derivative = derivative(Ps);
  report.derivative_roots = roots_quaternionic(report.derivative);

  for (const auto& h : report.derivative_roots.isolated) {
    if (h.imag_norm() > kZeroTol * (1.0 + std::abs(h.w))) {
      report.probes.push_back(
          check_probe(Ps, report.derivative, h, ProbeKind::IsolatedRoot, imaginary_unit_of(h), config.tol_rel));
      continue;
    }
    // A real root lies in every slice: keep the first slice that contains it,
    // or the closest one when none does.
    std::optional<ProbeResult> chosen;
    for (const auto& I : real_point_slices(Ps, config.sphere_samples)) {
      ProbeResult r = check_probe(Ps, report.derivative, h, ProbeKind::RealRoot, I, config.tol_rel);
      const bool better = !chosen || r.dist_snm < chosen->dist_snm;
      if (r.in_snm) {
        chosen = std::move(r);
        break;
      }
      if (better) chosen = std::move(r);
    }
    report.probes.push_back(std::move(*chosen));
  }
  const auto directions = great_circle_directions(config.sphere_probes);
  for (const auto& s : report.derivative_roots.spheres) {
    for (const auto& I : directions) {
      report.probes.push_back(
          check_probe(Ps, report.derivative, s.point(I), ProbeKind::SphereProbe, I, config.tol_rel));
    }
  }

  report.pass = std::all_of(report.probes.begin(), report.probes.end(), [](const ProbeResult& p) { return p.in_snm; });
  report.snail_pass =
      std::all_of(report.probes.begin(), report.probes.end(), [](const ProbeResult& p) { return p.in_snail; });
  report.classical_pass =
      std::all_of(report.probes.begin(), report.probes.end(), [](const ProbeResult& p) { return p.classical_ok; });
  return report;
}

std::vector<VerificationReport> verify_batch(const std::vector<QPolynomial>& polys, const VerifyConfig& config,
                                             Execution exec) {
  std::vector<VerificationReport> out(polys.size());
  for_each_index(polys.size(), [&](std::size_t k) { out[k] = verify_theorem(polys[k], config); }, exec);
  return out;
}

}  // namespace qgl
