#include "qgl/demos.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>

#include "qgl/bounds.hpp"
#include "qgl/error.hpp"
#include "qgl/hull_sets.hpp"
#include "qgl/io.hpp"

namespace qgl {

namespace {

using cplx = std::complex<double>;

constexpr double kValueTol = 1e-9;
constexpr double kRootTol = 1e-7;

std::string fmt_chart(cplx z, const char* unit) {
  std::string s = format_number(z.real());
  const std::string t = format_number(z.imag());
  if (t.front() != '-') s += '+';
  return s + t + unit;
}

std::string fmt_set(const std::vector<cplx>& zs, const char* unit) {
  std::string s = "{";
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (k) s += ", ";
    s += fmt_chart(zs[k], unit);
  }
  return s + "}";
}

// Largest distance in a greedy one-to-one matching; infinite on size mismatch.
double set_distance(std::vector<cplx> a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& z : b) {
    auto it = std::min_element(a.begin(), a.end(),
                               [&](const cplx& u, const cplx& v) { return std::abs(u - z) < std::abs(v - z); });
    worst = std::max(worst, std::abs(*it - z));
    a.erase(it);
  }
  return worst;
}

std::vector<cplx> charts(const std::vector<SliceComplex>& roots) {
  std::vector<cplx> out;
  for (const auto& r : roots) out.push_back(r.chart());
  return out;
}

class Builder {
 public:
  explicit Builder(std::string id) { report_.id = std::move(id); }

  void value(std::string name, double computed, double expected, double tol = kValueTol, std::string note = {}) {
    const double err = std::abs(computed - expected);
    add(std::move(name), format_number(computed), format_number(expected), err, tol, std::move(note));
  }

  void quaternion(std::string name, const Quaternion& computed, const Quaternion& expected, double tol = kValueTol) {
    add(std::move(name), format_quaternion(computed), format_quaternion(expected), (computed - expected).norm(), tol);
  }

  void chart(std::string name, cplx computed, cplx expected, const char* unit, double tol = kValueTol) {
    add(std::move(name), fmt_chart(computed, unit), fmt_chart(expected, unit), std::abs(computed - expected), tol);
  }

  void root_set(std::string name, const std::vector<cplx>& computed, const std::vector<cplx>& expected, const char* unit,
                std::string note = {}) {
    add(std::move(name), fmt_set(computed, unit), fmt_set(expected, unit), set_distance(computed, expected), kRootTol,
        std::move(note));
  }

  // A boolean condition, reported as error 0 (holds) or 1 (fails).
  void condition(std::string name, bool holds, std::string computed, std::string expected, std::string note = {}) {
    add(std::move(name), std::move(computed), std::move(expected), holds ? 0.0 : 1.0, 0.0, std::move(note));
  }

  void svg(std::string s) { report_.svg = std::move(s); }
  DemoReport take() { return std::move(report_); }

 private:
  void add(std::string name, std::string computed, std::string expected, double err, double tol, std::string note = {}) {
    report_.checks.push_back({std::move(name), std::move(computed), std::move(expected), err, tol, err <= tol,
                              std::move(note)});
  }

  DemoReport report_;
};

DemoReport example_2_4() {
  Builder b("example-2-4");
  const Quaternion h(1, 11, -2, -1);
  const Quaternion g(1, 1, 1, 0);
  const Quaternion g_inv = inverse(g);
  b.quaternion("g^-1 for g = 1+i+j", g_inv, Quaternion(1, -1, -1, 0) / 3.0);
  const Quaternion I_q = conjugate_by(g, Quaternion::i());
  const Quaternion J_q = conjugate_by(g, Quaternion::j());
  b.quaternion("I = g i g^-1", I_q, Quaternion(0, 1, 2, -2) / 3.0);
  b.quaternion("J = g j g^-1", J_q, Quaternion(0, 2, 1, 2) / 3.0);

  const UnitImaginary I = UnitImaginary::normalized(I_q.x, I_q.y, I_q.z);
  const UnitImaginary J = UnitImaginary::normalized(J_q.x, J_q.y, J_q.z);
  const auto [z1, z2] = decompose(h, slice_basis(I, J));
  b.chart("projection onto R[I]", z1.chart(), {1, 3}, "I");
  b.chart("complement coordinate z2 (J = g j g^-1)", z2.chart(), {6, -9}, "I");
  b.quaternion("J I", J_q * I_q, Quaternion(0, -2, 2, 1) / 3.0);

  const Quaternion complement = J_q * z2.to_quaternion();
  b.quaternion("complement J z2", complement, h - z1.to_quaternion());

  const auto [z1_neg, z2_neg] = decompose(h, slice_basis(I, -J));
  b.chart("complement coordinate with -J", z2_neg.chart(), {-6, 9}, "I");

  const SliceBasis canonical = slice_basis(I);
  const auto [c1, c2] = decompose(h, canonical);
  b.chart("projection, canonical basis", c1.chart(), {1, 3}, "I");
  b.quaternion("complement, canonical basis", canonical.J.q() * c2.to_quaternion(), complement);
  return b.take();
}

QPolynomial section3_polynomial() {
  return QPolynomial({Quaternion(85, 1102.0 / 3, -61.0 / 3, 580.0 / 3), Quaternion(-21, -346.0 / 3, 439.0 / 3, -22.0 / 3),
                      Quaternion(-9, -2, -25, -8), Quaternion(1, 2.0 / 3, 1.0 / 3, 2.0 / 3)});
}

DemoReport section_3_projection() {
  Builder b("section-3-projection");
  const QPolynomial P = section3_polynomial();
  const UnitImaginary I = UnitImaginary::normalized(1, 2, -2);
  const UnitImaginary J = UnitImaginary::normalized(2, 1, 2);
  const Projection pr = project(P, slice_basis(I, J));

  const cplx plane_expected[] = {{85, -20}, {-21, 64}, {-9, -12}, {1, 0}};
  const cplx perp_expected[] = {{367, -194}, {-33, 172}, {-15, -18}, {1, 0}};
  for (int t = 3; t >= 0; --t) {
    b.chart("P_I coefficient of x^" + std::to_string(t), pr.plane.coeffs()[t], plane_expected[t], "I");
  }
  for (int t = 3; t >= 0; --t) {
    b.chart("Q_I coefficient of x^" + std::to_string(t), pr.perp.coeffs()[t], perp_expected[t], "I");
  }
  b.root_set("R(P_I)", charts(roots_in_slice(pr.plane)), {{1, 2}, {3, 4}, {5, 6}}, "I");
  b.root_set("R(P_I^perp)", charts(roots_in_slice(pr.perp)), {{3, 4}, {5, 6}, {7, 8}}, "I");
  b.root_set("common roots", charts(common_roots(pr.plane, pr.perp).roots), {{3, 4}, {5, 6}}, "I");

  const Projection canonical = project(P, I);
  b.root_set("R(Q_I), canonical J", charts(roots_in_slice(canonical.perp)), {{3, 4}, {5, 6}, {7, 8}}, "I");
  return b.take();
}

QPolynomial strict_cubic() {
  return QPolynomial({Quaternion(1), Quaternion(0, 1, -1, 1), Quaternion(0, -1, -1, -1), Quaternion(1)});
}

DemoReport strict_inclusion() {
  Builder b("strict-inclusion");
  const QPolynomial P = strict_cubic();
  const SnmSlice s = snm_slice(P, UnitImaginary::i());

  const cplx plane_expected[] = {{1, 0}, {0, 1}, {0, -1}, {1, 0}};
  for (int t = 3; t >= 0; --t) {
    b.chart("P_i coefficient of x^" + std::to_string(t), s.projection.plane.coeffs()[t], plane_expected[t], "i");
  }
  const QPolynomial perp = s.projection.perp.to_quaternionic();
  b.quaternion("P_i^perp coefficient of x^2", perp[2], Quaternion(0, 0, -1, -1));
  b.quaternion("P_i^perp coefficient of x^1", perp[1], Quaternion(0, 0, -1, 1));

  const double r = std::sqrt(0.5);
  b.root_set("R(P_i)", charts(s.plane_roots), {{0, 1}, {r, -r}, {-r, r}}, "i",
             "printed as {i, e^{i pi/4}, e^{i 5pi/4}}; x^3 - i x^2 + i x + 1 = (x - i)(x^2 + i) gives e^{-i pi/4}, e^{i 3pi/4}");
  b.root_set("R(P_i^perp)", charts(s.perp_roots), {{0, 0}, {0, -1}}, "i");
  b.condition("snail is a triangle", s.snail.kind == RegionKind::Polygon && s.snail.vertices.size() == 3,
              to_string(s.snail.kind) + " with " + std::to_string(s.snail.vertices.size()) + " vertices",
              "polygon with 3 vertices");
  b.condition("cosnail is a segment", s.cosnail.kind == RegionKind::Segment, to_string(s.cosnail.kind), "segment");
  b.condition("snm is a point", s.snm.kind == RegionKind::Point, to_string(s.snm.kind), "point");
  if (s.snm.kind == RegionKind::Point) {
    b.chart("snm point", {s.snm.vertices[0].a, s.snm.vertices[0].b}, {0, 0}, "i", kRootTol);
  }

  // Companion slice j.
  const SnmSlice sj = snm_slice(P, UnitImaginary::j());
  const cplx pj_expected[] = {{1, 0}, {0, -1}, {0, -1}, {1, 0}};
  for (int t = 3; t >= 0; --t) {
    b.chart("P_j coefficient of x^" + std::to_string(t), sj.projection.plane.coeffs()[t], pj_expected[t], "j");
  }
  const Quaternion pj_at_minus_one = sj.projection.plane.evaluate({-1.0, 0.0, UnitImaginary::j()});
  b.value("|P_j(-1)|", pj_at_minus_one.norm(), 0.0);
  const Quaternion perp_j_at_minus_one = sj.projection.perp.evaluate({-1.0, 0.0, UnitImaginary::j()});
  b.quaternion("P_j^perp(-1)", perp_j_at_minus_one, Quaternion(0, -2, 0, -2), kValueTol);
  b.root_set("R(P_j^perp)", charts(sj.perp_roots), {{0, 0}, {1, 0}}, "j",
             "-1 is a root of P_j but not of P_j^perp; the slice-j snm is nonempty at the hull level");
  b.condition("snm at slice j is nonempty", sj.snm.kind != RegionKind::Empty, to_string(sj.snm.kind), "not empty");

  b.svg(render_slice_svg(s));
  return b.take();
}

DemoReport bounds_5_4() {
  Builder b("bounds-5-4");
  const QPolynomial P({Quaternion(0), Quaternion(0, 0, 3, 0), Quaternion(0, 1, 0, 0), Quaternion(1)});
  b.value("C(P_j)", snail_objective(P, UnitImaginary::j()), std::sqrt(10.0));
  b.value("C(P_i)", snail_objective(P, UnitImaginary::i()), std::sqrt(2.0));
  const Projection pi = project(P, UnitImaginary::i());
  b.value("C(P_i^perp)", coefficient_bound_C(pi.perp).value(), 1.0);

  // Closed forms for I = alpha i + beta j + gamma k.
  const double dirs[][3] = {{0.3, 0.5, 0.0}, {-0.6, -0.7, 0.0}, {0.1, 0.2, 0.3}};
  for (const auto& d : dirs) {
    const UnitImaginary I = UnitImaginary::normalized(d[0], d[1], d[2]);
    const double al = I.x();
    const double be = I.y();
    const Projection pr = project(P, I);
    const std::string tag = " at I = " + format_quaternion(I.q());
    b.value("C(P_I)" + tag, coefficient_bound_C(pr.plane).value(), std::sqrt(1 + al * al + 9 * be * be));
    b.value("C(P_I^perp)" + tag, coefficient_bound_C(pr.perp).value(),
            std::sqrt(1 + 9 * (1 - be * be) / (1 - al * al)));
  }

  const SupEstimate snail = bound_snail(P, 2000);
  const SupEstimate snm = bound_snm(P, 2000);
  b.condition("sup C(P_I) >= sqrt(10)", snail.value >= std::sqrt(10.0) - 1e-9, format_number(snail.value),
              ">= " + format_number(std::sqrt(10.0)));
  b.condition("sup min(C(P_I), C(P_I^perp)) <= 3", snm.value <= 3.0 + 1e-9, format_number(snm.value), "<= 3");
  b.condition("strict improvement", snm.value < snail.value, format_number(snm.value) + " < " + format_number(snail.value),
              "snm bound < snail bound");
  return b.take();
}

}  // namespace

bool DemoReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const DemoCheck& c) { return c.pass; });
}

const std::vector<std::string>& demo_cases() {
  static const std::vector<std::string> cases = {"example-2-4", "section-3-projection", "strict-inclusion",
                                                 "bounds-5-4"};
  return cases;
}

DemoReport run_demo(const std::string& case_id) {
  if (case_id == "example-2-4") return example_2_4();
  if (case_id == "section-3-projection") return section_3_projection();
  if (case_id == "strict-inclusion") return strict_inclusion();
  if (case_id == "bounds-5-4") return bounds_5_4();
  throw UnknownCase(case_id);
}

nlohmann::json demo_json(const DemoReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json item = {{"name", c.name},
                           {"computed", c.computed},
                           {"expected", c.expected},
                           {"error", std::isfinite(c.error) ? nlohmann::json(round12(c.error)) : nlohmann::json(nullptr)},
                           {"tol", round12(c.tol)},
                           {"pass", c.pass}};
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  return {{"case", r.id}, {"pass", r.pass()}, {"checks", checks}};
}

std::string demo_table(const DemoReport& r) {
  std::string out = "demo " + r.id + "\n";
  for (const auto& c : r.checks) {
    char line[512];
    std::snprintf(line, sizeof line, "  [%s] %-44s computed %s | expected %s | err %s\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.computed.c_str(), c.expected.c_str(), format_number(c.error).c_str());
    out += line;
    if (!c.note.empty()) out += "         note: " + c.note + "\n";
  }
  out += r.pass() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

}  // namespace qgl
