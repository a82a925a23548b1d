// Runs each acceptance criterion at its stated tolerance and prints one line per criterion.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qgl/bounds.hpp"
#include "qgl/hull_sets.hpp"
#include "qgl/parallel.hpp"
#include "qgl/random.hpp"
#include "qgl/slice_roots.hpp"

using namespace qgl;
using Clock = std::chrono::steady_clock;
using cplx = std::complex<double>;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---- oracles ---------------------------------------------------------------

// Directional derivative of P at h along e: sum_t a_t sum_s h^s e h^(t-1-s).
Quaternion directional(const QPolynomial& P, const Quaternion& h, const Quaternion& e) {
  Quaternion total;
  std::vector<Quaternion> pw{Quaternion(1)};
  for (std::size_t t = 1; t < P.size(); ++t) pw.push_back(pw.back() * h);
  for (std::size_t t = 1; t < P.size(); ++t) {
    Quaternion inner;
    for (std::size_t s = 0; s < t; ++s) inner += pw[s] * e * pw[t - 1 - s];
    total += P[t] * inner;
  }
  return total;
}

Quaternion eval_direct(const QPolynomial& P, const Quaternion& h) {
  Quaternion acc, pw(1);
  for (std::size_t t = 0; t < P.size(); ++t) {
    acc += P[t] * pw;
    pw = pw * h;
  }
  return acc;
}

Quaternion oracle_newton(const QPolynomial& P, Quaternion h, int steps) {
  const Quaternion basis[4] = {Quaternion(1), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int s = 0; s < steps; ++s) {
    const Quaternion r = eval_direct(P, h);
    Eigen::Matrix4d J;
    for (int c = 0; c < 4; ++c) {
      const Quaternion d = directional(P, h, basis[c]);
      J.col(c) << d.w, d.x, d.y, d.z;
    }
    const Eigen::Vector4d delta = J.colPivHouseholderQr().solve(Eigen::Vector4d(-r.w, -r.x, -r.y, -r.z));
    if (!delta.allFinite()) break;
    h += Quaternion(delta[0], delta[1], delta[2], delta[3]);
    if (delta.norm() <= 1e-15 * (1 + h.norm())) break;
  }
  return h;
}

// Grid over [-R, R]^4 at step R/20, local minima of |P| as seeds, Newton-polished.
std::vector<Quaternion> grid_oracle_roots(const QPolynomial& P, double R) {
  constexpr int n = 41;
  const double step = R / 20.0;
  auto coord = [&](int k) { return -R + step * k; };
  std::vector<float> val(static_cast<std::size_t>(n) * n * n * n);
  auto idx = [&](int a, int b, int c, int d) { return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          val[idx(a, b, c, d)] = static_cast<float>(eval_direct(P, {coord(a), coord(b), coord(c), coord(d)}).norm());

  std::vector<Quaternion> roots;
  const double scale = P.coeff_norm_sum();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const float v = val[idx(a, b, c, d)];
          const int at[4] = {a, b, c, d};
          bool minimum = true;
          for (int ax = 0; ax < 4 && minimum; ++ax) {
            for (int dir : {-1, 1}) {
              int nb[4] = {a, b, c, d};
              nb[ax] += dir;
              if (nb[ax] < 0 || nb[ax] >= n) continue;
              if (val[idx(nb[0], nb[1], nb[2], nb[3])] < v) {
                minimum = false;
                break;
              }
            }
          }
          if (!minimum) continue;
          const Quaternion h = oracle_newton(P, {coord(at[0]), coord(at[1]), coord(at[2]), coord(at[3])}, 60);
          if (!(eval_direct(P, h).norm() <= 1e-9 * scale * std::pow(1 + h.norm(), P.size()))) continue;
          const bool dup = std::any_of(roots.begin(), roots.end(), [&](const Quaternion& g) { return (g - h).norm() < 1e-7; });
          if (!dup) roots.push_back(h);
        }
  return roots;
}

// Roots of a real polynomial through companion-matrix eigenvalues.
std::vector<cplx> eigen_roots(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int r = 1; r < n; ++r) M(r, r - 1) = 1.0;
  for (int r = 0; r < n; ++r) M(r, n - 1) = -c[r] / c[n];
  const Eigen::VectorXcd ev = M.eigenvalues();
  return {ev.data(), ev.data() + n};
}

bool match_sets(std::vector<cplx> a, std::vector<cplx> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](cplx u, cplx v) { return std::abs(x - u) < std::abs(x - v); });
    if (it == b.end() || std::abs(x - *it) > tol) return false;
    b.erase(it);
  }
  return true;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criteria --------------------------------------------------------------

Outcome worked_example() {
  const Quaternion h(1, 11, -2, -1);
  const UnitImaginary I(Quaternion(0, 1, 2, -2) / 3.0);
  const UnitImaginary Jp(Quaternion(0, 2, 1, 2) / 3.0);
  project_to_slice(h, I);  // warm-up
  const auto t0 = Clock::now();
  const SliceComplex p = project_to_slice(h, I);
  const SliceBasis canon = slice_basis(I);
  const auto [c1, c2] = decompose(h, canon);
  const auto [w1, w2] = decompose(h, slice_basis(I, Jp));
  const auto [m1, m2] = decompose(h, slice_basis(I, -Jp));
  const double dt = seconds_since(t0);

  const Quaternion complement_ref = Jp.q() * Quaternion(6, 0, 0, 0) + Jp.q() * (I.q() * -9.0);
  double err = (p.to_quaternion() - (Quaternion(1) + I.q() * 3.0)).norm();
  err = std::max(err, (canon.J.q() * c2.to_quaternion() - complement_ref).norm());
  err = std::max(err, std::hypot(w2.a - 6, w2.b + 9));
  err = std::max(err, std::min(std::hypot(m2.a - 6, m2.b + 9), std::hypot(m2.a + 6, m2.b - 9)));
  err = std::max(err, (h - p.to_quaternion() - canon.J.q() * c2.to_quaternion()).norm());
  return {err <= 1e-12 && dt < 1e-3, "abs err " + fmt("%.3g", err) + ", " + fmt("%.3g", dt * 1e3) + " ms"};
}

Outcome section3_projection() {
  const Quaternion a0(85, 1102.0 / 3, -61.0 / 3, 580.0 / 3), a1(-21, -346.0 / 3, 439.0 / 3, -22.0 / 3);
  const Quaternion a2(-9, -2, -25, -8), a3(1, 2.0 / 3, 1.0 / 3, 2.0 / 3);
  const QPolynomial P{a0, a1, a2, a3};
  const UnitImaginary I(Quaternion(0, 1, 2, -2) / 3.0);
  const UnitImaginary J(Quaternion(0, 2, 1, 2) / 3.0);
  const auto t0 = Clock::now();
  const Projection pr = project(P, slice_basis(I, J));
  const auto rp = roots_in_slice(pr.plane);
  const auto rq = roots_in_slice(pr.perp);
  const CommonRoots cr = common_roots(pr.plane, pr.perp);
  const double dt = seconds_since(t0);

  auto charts = [](const std::vector<SliceComplex>& v) {
    std::vector<cplx> out;
    for (const auto& z : v) out.push_back(z.chart());
    return out;
  };
  const bool ok = match_sets(charts(rp), {{1, 2}, {3, 4}, {5, 6}}, 1e-8) &&
                  match_sets(charts(rq), {{3, 4}, {5, 6}, {7, 8}}, 1e-8) && !cr.whole_plane &&
                  match_sets(charts(cr.roots), {{3, 4}, {5, 6}}, 1e-8);
  return {ok && dt < 1e-2, fmt("%.3g", dt * 1e3) + " ms"};
}

Outcome strict_inclusion() {
  const QPolynomial P{Quaternion(1), Quaternion(0, 1, -1, 1), Quaternion(0, -1, -1, -1), Quaternion(1)};
  const auto t0 = Clock::now();
  const SnmSlice s = snm_slice(P, UnitImaginary::i());
  const double dt = seconds_since(t0);

  bool ok = s.snm.kind == RegionKind::Point && std::hypot(s.snm.vertices[0].a, s.snm.vertices[0].b) <= 1e-7;
  ok = ok && s.snail.kind == RegionKind::Polygon && s.snail.vertices.size() == 3;
  if (ok) {
    // residual against x^3 - i x^2 + i x + 1 evaluated in the chart
    auto Pi = [](cplx z) { return z * z * z - cplx(0, 1) * z * z + cplx(0, 1) * z + 1.0; };
    std::vector<cplx> others;
    bool has_i = false;
    for (const auto& v : s.snail.vertices) {
      const cplx z(v.a, v.b);
      ok = ok && std::abs(Pi(z)) <= 1e-8;
      if (std::abs(z - cplx(0, 1)) <= 1e-8) {
        has_i = true;
      } else {
        others.push_back(z);
      }
    }
    ok = ok && has_i && others.size() == 2 && std::abs(std::abs(others[0]) - 1) <= 1e-8 &&
         std::abs(std::abs(others[1]) - 1) <= 1e-8 && std::abs(others[0] + others[1]) <= 1e-8;
  }
  return {ok && dt < 1e-2, "snm " + to_string(s.snm.kind) + ", snail " + std::to_string(s.snail.vertices.size()) +
                               " vertices, " + fmt("%.3g", dt * 1e3) + " ms"};
}

Outcome bounds_example() {
  const QPolynomial P{Quaternion(0), 3.0 * Quaternion::j(), Quaternion::i(), Quaternion(1)};
  const auto t0 = Clock::now();
  const SupEstimate sn = bound_snail(P, 2000);
  const SupEstimate sm = bound_snm(P, 2000);
  const double ci = coefficient_bound_C(project(P, UnitImaginary::i()).plane).value();
  const double dt = seconds_since(t0);
  const bool ok = sn.value >= std::sqrt(10.0) - 1e-9 && sm.value <= 3.0 + 1e-9 && std::abs(ci - std::sqrt(2.0)) <= 1e-12;
  return {ok && dt < 2.0, "sup snail " + fmt("%.10g", sn.value) + ", sup snm " + fmt("%.10g", sm.value) +
                              ", C(P_i) " + fmt("%.15g", ci) + ", " + fmt("%.3g", dt) + " s"};
}

std::vector<QPolynomial> property_instances() {
  std::vector<QPolynomial> out;
  Rng seeds(20240501);
  for (int n = 0; n < 1000; ++n) out.push_back(random_polynomial(seeds.next(), 2 + n % 5, 10.0));
  return out;
}

Outcome property_snm(const std::vector<VerificationReport>& reports, double dt) {
  std::size_t failures = 0, probes = 0;
  for (const auto& r : reports) {
    probes += r.probes.size();
    for (const auto& p : r.probes) failures += p.in_snm ? 0 : 1;
  }
  return {failures == 0 && dt < 300.0, std::to_string(reports.size()) + " polynomials, " + std::to_string(probes) +
                                           " probes, " + std::to_string(failures) + " failures, " + fmt("%.3g", dt) +
                                           " s single-threaded"};
}

Outcome property_sandwich(const std::vector<VerificationReport>& reports) {
  std::size_t snail_fail = 0, classical_fail = 0;
  for (const auto& r : reports) {
    for (const auto& p : r.probes) {
      snail_fail += p.in_snail ? 0 : 1;
      classical_fail += p.classical_ok ? 0 : 1;
    }
  }
  return {snail_fail == 0 && classical_fail == 0,
          std::to_string(snail_fail) + " snail failures, " + std::to_string(classical_fail) + " classical failures"};
}

Outcome root_oracle() {
  const auto t0 = Clock::now();
  Rng seeds(7);
  std::vector<QPolynomial> polys;
  for (int n = 0; n < 200; ++n) polys.push_back(random_polynomial(seeds.next(), 1 + n % 4, 10.0));
  std::vector<int> bad(polys.size(), 0);
  std::vector<std::size_t> counts(polys.size(), 0);
  for_each_index(
      polys.size(),
      [&](std::size_t k) {
        const QPolynomial& P = polys[k];
        const std::vector<Quaternion> oracle = grid_oracle_roots(P, coefficient_bound_C(P).value());
        const RootSetH got = roots_quaternionic(P);
        counts[k] = oracle.size();
        if (!got.spheres.empty()) {
          bad[k] = 1;
          return;
        }
        auto covered = [](const std::vector<Quaternion>& from, const std::vector<Quaternion>& to) {
          return std::all_of(from.begin(), from.end(), [&](const Quaternion& h) {
            return std::any_of(to.begin(), to.end(), [&](const Quaternion& g) { return (g - h).norm() <= 1e-5; });
          });
        };
        bad[k] = covered(oracle, got.isolated) && covered(got.isolated, oracle) ? 0 : 1;
      },
      Execution::Parallel);
  std::size_t mismatches = 0, total = 0;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    mismatches += bad[k];
    total += counts[k];
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatched of 200 polynomials, " + std::to_string(total) +
                               " oracle roots, " + fmt("%.3g", seconds_since(t0)) + " s"};
}

Outcome common_roots_crosscheck() {
  Rng rng(11);
  std::size_t mismatches = 0;
  for (int n = 0; n < 200; ++n) {
    std::vector<cplx> expected;
    QPolynomial P;
    UnitImaginary I = UnitImaginary::i();
    if (n < 100) {
      // P = Q * (x - h): h is a root of P by construction
      const QPolynomial Q = random_polynomial(rng.next(), 1 + n % 4, 10.0);
      const Quaternion h = rng.in_ball(3.0);
      std::vector<Quaternion> c(Q.size() + 1);
      for (std::size_t t = 0; t < Q.size(); ++t) {
        c[t + 1] += Q[t];
        c[t] -= Q[t] * h;
      }
      P = QPolynomial(c);
      I = imaginary_unit_of(h);
      expected.push_back({h.w, h.imag_norm()});
    } else if (n < 150) {
      // generic P and a random slice: no roots in the slice
      P = random_polynomial(rng.next(), 2 + n % 4, 10.0);
      I = rng.unit_imaginary();
    } else {
      // real coefficients: every root sphere meets every slice
      const int d = 2 + n % 4;
      std::vector<double> c;
      for (int t = 0; t < d; ++t) c.push_back(rng.uniform(-5, 5));
      c.push_back(rng.uniform(1, 5));
      std::vector<Quaternion> q(c.begin(), c.end());
      P = QPolynomial(q);
      I = rng.unit_imaginary();
      expected = eigen_roots(c);
    }
    const Projection pr = project(P, I);
    const CommonRoots cr = common_roots(pr.plane, pr.perp);
    std::vector<cplx> got;
    for (const auto& z : cr.roots) got.push_back(z.chart());
    bool ok = !cr.whole_plane && match_sets(got, expected, 1e-7);
    for (const auto& z : cr.roots) ok = ok && eval_direct(P, z.to_quaternion()).norm() <= 1e-8 * P.coeff_norm_sum() * std::pow(1 + z.norm(), P.size());
    mismatches += ok ? 0 : 1;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatched of 200 pairs"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "qgl_acceptance_determinism";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    const auto json = dir / ("run" + std::to_string(run) + ".json");
    const auto csv = dir / ("run" + std::to_string(run) + ".csv");
    const std::string cmd = std::string("\"") + QGL_CLI_PATH + "\" verify --seed 42 --count 5 --json \"" +
                            json.string() + "\" --csv \"" + csv.string() + "\" > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "verify exited with status " + std::to_string(rc)};
    outputs.push_back(read_file(json));
    outputs.push_back(read_file(csv));
  }
  std::filesystem::remove_all(dir);
  const bool ok = !outputs[0].empty() && !outputs[1].empty() && outputs[0] == outputs[2] && outputs[1] == outputs[3];
  return {ok, std::to_string(outputs[0].size()) + " JSON bytes, " + std::to_string(outputs[1].size()) + " CSV bytes"};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& name, const Outcome& o) {
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << ": " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  };
  auto guarded = [](const std::function<Outcome()>& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      return Outcome{false, std::string("exception: ") + e.what()};
    }
  };

  report(1, "slice projection of 1+11i-2j-k", guarded(worked_example));
  report(2, "projected roots of the cubic with prescribed slice roots", guarded(section3_projection));
  report(3, "strict inclusion witness at slice i", guarded(strict_inclusion));
  report(4, "derivative root bounds for x^3 + i x^2 + 3 j x", guarded(bounds_example));

  const auto polys = property_instances();
  std::vector<VerificationReport> reports;
  const auto t0 = Clock::now();
  const Outcome run = guarded([&] {
    reports = verify_batch(polys, {}, Execution::Serial);
    return Outcome{true, ""};
  });
  const double dt = seconds_since(t0);
  report(5, "roots of P' lie in snm(P)", run.pass ? property_snm(reports, dt) : run);
  report(6, "roots of P' lie in the snail; classical containment per slice", run.pass ? property_sandwich(reports) : run);
  report(7, "quaternionic roots against a grid and Newton oracle", guarded(root_oracle));
  report(8, "common slice roots equal the roots of P in the slice", guarded(common_roots_crosscheck));
  report(9, "seeded verify output is byte-identical", guarded(determinism));

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
