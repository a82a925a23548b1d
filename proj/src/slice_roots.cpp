#include "qgl/slice_roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgl/bounds.hpp"
#include "qgl/error.hpp"

namespace qgl {

namespace {

using cplx = std::complex<double>;

constexpr int kMaxIterations = 200;
constexpr double kSliceResidualTol = 1e-9;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Companion roots closer than this (in |da| + |d|b||) index the same sphere.
constexpr double kSphereGroupTol = 1e-7;
// Candidates with |beta| below this are treated as real.
constexpr double kRealCandidateTol = 1e-6;
constexpr double kSphereZeroTol = 1e-7;
constexpr double kUnitTol = 1e-6;
constexpr double kDedupTol = 1e-7;

struct HornerResult {
  cplx value;
  cplx slope;
  double scale;  // sum |c_t| |z|^t, the rounding scale of the evaluation
};

HornerResult horner(std::span<const cplx> c, cplx z) {
  cplx p = 0.0;
  cplx dp = 0.0;
  double s = 0.0;
  const double r = std::abs(z);
  for (std::size_t t = c.size(); t-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[t];
    s = s * r + std::abs(c[t]);
  }
  return {p, dp, s};
}

double residual_scale(std::span<const cplx> c, double r) {
  const double base = std::max(1.0, r);
  double s = 0.0;
  for (std::size_t t = c.size(); t-- > 0;) s = s * base + std::abs(c[t]);
  return s;
}

bool lex_less(const cplx& a, const cplx& b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

bool quat_less(const Quaternion& a, const Quaternion& b) {
  return std::tie(a.w, a.x, a.y, a.z) < std::tie(b.w, b.x, b.y, b.z);
}

std::vector<cplx> aberth(std::span<const cplx> monic) {
  const std::size_t n = monic.size() - 1;
  const double radius = coefficient_bound_C(monic).value();
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);
  for (int it = 0; it < kMaxIterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const HornerResult h = horner(monic, z[k]);
      if (std::abs(h.value) <= 4.0 * kEps * h.scale) {
        done[k] = true;
        continue;
      }
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      cplx denom = h.slope - h.value * repulsion;
      if (denom == 0.0) denom = cplx(kEps, kEps);
      const cplx w = h.value / denom;
      z[k] -= w;
      if (std::abs(w) <= kEps * std::abs(z[k])) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  return z;
}

// Jacobian columns of h -> P(h) along 1, i, j, k.
Eigen::Matrix4d jacobian(const QPolynomial& P, const Quaternion& h) {
  static const std::array<Quaternion, 4> basis = {Quaternion(1.0), Quaternion::i(), Quaternion::j(),
                                                  Quaternion::k()};
  Eigen::Matrix4d jac = Eigen::Matrix4d::Zero();
  Quaternion power(1.0);
  std::array<Quaternion, 4> dpower{};
  for (std::size_t t = 0; t < P.size(); ++t) {
    if (t > 0) {
      for (int m = 0; m < 4; ++m) dpower[m] = dpower[m] * h + power * basis[m];
      power = power * h;
    }
    for (int m = 0; m < 4; ++m) {
      const Quaternion col = P[t] * dpower[m];
      jac(0, m) += col.w;
      jac(1, m) += col.x;
      jac(2, m) += col.y;
      jac(3, m) += col.z;
    }
  }
  return jac;
}

struct Candidate {
  double alpha;
  double beta;
};

std::vector<Candidate> group_spheres(const std::vector<cplx>& roots) {
  std::vector<Candidate> pts;
  pts.reserve(roots.size());
  for (const auto& z : roots) pts.push_back({z.real(), std::abs(z.imag())});
  std::sort(pts.begin(), pts.end(),
            [](const Candidate& a, const Candidate& b) { return std::tie(a.alpha, a.beta) < std::tie(b.alpha, b.beta); });

  std::vector<Candidate> groups;
  std::vector<bool> used(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    const double tol = kSphereGroupTol * (1.0 + std::hypot(pts[i].alpha, pts[i].beta));
    double sa = 0.0;
    double sb = 0.0;
    int count = 0;
    for (std::size_t j = i; j < pts.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(pts[j].alpha - pts[i].alpha) + std::abs(pts[j].beta - pts[i].beta) <= tol) {
        used[j] = true;
        sa += pts[j].alpha;
        sb += pts[j].beta;
        ++count;
      }
    }
    groups.push_back({sa / count, sb / count});
  }
  return groups;
}

}  // namespace

std::vector<cplx> complex_roots(std::span<const cplx> coeffs) {
  double max_norm = 0.0;
  for (const auto& c : coeffs) max_norm = std::max(max_norm, std::abs(c));
  if (max_norm == 0.0) throw ZeroPolynomial();

  std::size_t top = coeffs.size() - 1;
  while (std::abs(coeffs[top]) <= 1e-12 * max_norm) --top;
  std::size_t low = 0;
  while (low < top && coeffs[low] == 0.0) ++low;

  std::vector<cplx> roots(low, cplx(0.0, 0.0));
  if (top > low) {
    std::vector<cplx> monic(coeffs.begin() + low, coeffs.begin() + top + 1);
    const cplx lead = monic.back();
    for (auto& c : monic) c /= lead;
    const std::vector<cplx> found = aberth(monic);
    for (const auto& z : found) {
      const cplx value = horner(monic, z).value;
      if (!(std::abs(value) <= kSliceResidualTol * residual_scale(monic, std::abs(z)))) {
        throw NonConvergence("Aberth-Ehrlich iteration did not reach the residual tolerance");
      }
    }
    roots.insert(roots.end(), found.begin(), found.end());
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

std::vector<SliceComplex> roots_in_slice(const SlicePolynomial& S) {
  const auto chart = complex_roots(S.coeffs());
  std::vector<SliceComplex> out;
  out.reserve(chart.size());
  for (const auto& z : chart) out.push_back({z.real(), z.imag(), S.slice()});
  return out;
}

SphereResolution sphere_resolve(const QPolynomial& P, double alpha, double beta) {
  if (!(beta > 0.0)) throw DomainError("sphere radius beta must be positive");
  // (alpha + beta i)^t = c_t + d_t i, so P(alpha + beta I) = A + B I for every I.
  Quaternion A;
  Quaternion B;
  cplx power(1.0, 0.0);
  const cplx base(alpha, beta);
  for (std::size_t t = 0; t < P.size(); ++t) {
    A += P[t] * power.real();
    B += P[t] * power.imag();
    power *= base;
  }
  const double scale = P.residual_scale(std::hypot(alpha, beta));
  const bool a_zero = A.norm() <= kSphereZeroTol * scale;
  const bool b_zero = B.norm() <= kSphereZeroTol * scale;
  if (a_zero && b_zero) return {SphereKind::Spherical, {}};
  if (b_zero) return {SphereKind::NoRoot, {}};
  const Quaternion unit = -(inverse(B) * A);
  if (std::abs(unit.w) > kUnitTol || std::abs(unit.norm() - 1.0) > kUnitTol) {
    return {SphereKind::NoRoot, {}};
  }
  const UnitImaginary I = UnitImaginary::normalized(unit.x, unit.y, unit.z);
  return {SphereKind::Isolated, Quaternion(alpha) + I.q() * beta};
}

std::vector<double> companion_polynomial(const QPolynomial& P) {
  const std::size_t n = P.size();
  if (n == 0) return {};
  std::vector<double> f(2 * n - 1, 0.0);
  for (std::size_t s = 0; s < f.size(); ++s) {
    Quaternion acc;
    const std::size_t lo = s >= n ? s - n + 1 : 0;
    const std::size_t hi = std::min(s, n - 1);
    for (std::size_t t = lo; t <= hi; ++t) acc += P[t] * P[s - t].conj();
    f[s] = acc.w;
  }
  return f;
}

bool is_root(const QPolynomial& P, const Quaternion& h, double rel_tol) {
  return evaluate(P, h).norm() <= rel_tol * P.residual_scale(h.norm());
}

Quaternion newton_polish(const QPolynomial& P, Quaternion h, int max_steps) {
  Quaternion r = evaluate(P, h);
  for (int step = 0; step < max_steps && r.norm() > 0.0; ++step) {
    const Eigen::Vector4d rhs(-r.w, -r.x, -r.y, -r.z);
    const Eigen::Vector4d delta = jacobian(P, h).fullPivLu().solve(rhs);
    if (!delta.allFinite()) break;
    const Quaternion next = h + Quaternion(delta[0], delta[1], delta[2], delta[3]);
    const Quaternion rn = evaluate(P, next);
    if (!(rn.norm() < r.norm())) break;
    h = next;
    r = rn;
  }
  return h;
}

RootSetH roots_quaternionic(const QPolynomial& P) {
  const QPolynomial Ps = P.stripped();
  if (Ps.degree() < 1) throw DomainError("roots_quaternionic needs a polynomial of degree >= 1");

  const std::vector<double> f = companion_polynomial(Ps);
  const std::vector<cplx> fc(f.begin(), f.end());
  const std::vector<Candidate> candidates = group_spheres(complex_roots(fc));

  RootSetH out;
  std::vector<Quaternion> isolated;
  for (const auto& c : candidates) {
    const double real_tol = kRealCandidateTol * (1.0 + std::abs(c.alpha));
    if (c.beta > real_tol) {
      const SphereResolution res = sphere_resolve(Ps, c.alpha, c.beta);
      if (res.kind == SphereKind::Spherical) {
        out.spheres.push_back({c.alpha, c.beta});
        continue;
      }
      if (res.kind == SphereKind::Isolated) {
        const Quaternion h = newton_polish(Ps, res.root);
        if (is_root(Ps, h)) {
          isolated.push_back(h);
          continue;
        }
      }
    }
    const Quaternion h = newton_polish(Ps, Quaternion(c.alpha));
    if (!is_root(Ps, h)) throw NonConvergence("companion root sphere could not be resolved to a root");
    isolated.push_back(h);
  }

  // Spheres found twice (split double companion roots) collapse to one.
  std::sort(out.spheres.begin(), out.spheres.end(), [](const RootSphere& a, const RootSphere& b) {
    return std::tie(a.alpha, a.beta) < std::tie(b.alpha, b.beta);
  });
  std::vector<RootSphere> spheres;
  for (const auto& s : out.spheres) {
    const double tol = kDedupTol * 10.0 * (1.0 + std::hypot(s.alpha, s.beta));
    if (!spheres.empty() && std::abs(spheres.back().alpha - s.alpha) + std::abs(spheres.back().beta - s.beta) <= tol) {
      continue;
    }
    spheres.push_back(s);
  }
  out.spheres = std::move(spheres);

  std::sort(isolated.begin(), isolated.end(), quat_less);
  for (const auto& h : isolated) {
    const double tol = kDedupTol * (1.0 + h.norm());
    const bool duplicate = std::any_of(out.isolated.begin(), out.isolated.end(),
                                       [&](const Quaternion& g) { return (g - h).norm() <= tol; });
    const bool on_sphere = std::any_of(out.spheres.begin(), out.spheres.end(), [&](const RootSphere& s) {
      return std::abs(h.w - s.alpha) <= tol && std::abs(h.imag_norm() - s.beta) <= tol;
    });
    if (!duplicate && !on_sphere) out.isolated.push_back(h);
  }
  return out;
}

CommonRoots common_roots(const SlicePolynomial& plane, const SlicePolynomial& perp, double eps) {
  if (!(plane.slice().q() == perp.slice().q())) {
    throw DomainError("common_roots needs both polynomials on the same slice");
  }
  const bool plane_zero = plane.is_zero();
  const bool perp_zero = perp.is_zero();
  if (plane_zero && perp_zero) return {true, {}};
  if (plane_zero) return {false, roots_in_slice(perp)};
  if (perp_zero) return {false, roots_in_slice(plane)};

  const auto rp = roots_in_slice(plane);
  const auto rq = roots_in_slice(perp);
  std::vector<bool> used(rq.size(), false);
  CommonRoots out;
  for (const auto& r : rp) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = rq.size();
    for (std::size_t j = 0; j < rq.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(r.chart() - rq[j].chart());
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j < rq.size() && best <= eps * (1.0 + r.norm())) {
      used[best_j] = true;
      out.roots.push_back(r);
    }
  }
  return out;
}

}  // namespace qgl
