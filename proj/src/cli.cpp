#include "qgl/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qgl/bounds.hpp"
#include "qgl/demos.hpp"
#include "qgl/error.hpp"
#include "qgl/hull_sets.hpp"
#include "qgl/io.hpp"
#include "qgl/random.hpp"

namespace qgl {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// --poly accepts a file path or inline JSON.
QPolynomial load_polynomial(const std::string& source) {
  const std::string text = !source.empty() && source.front() == '{' ? source : read_text(source);
  return parse_polynomial(text);
}

UnitImaginary parse_slice(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("--slice expects \"x,y,z\"");
    }
  }
  if (v.size() != 3) throw UsageError("--slice expects \"x,y,z\"");
  return UnitImaginary::normalized(v[0], v[1], v[2]);
}

void fail_detail(std::ostream& err, const json& failures) {
  err << json{{"status", "fail"}, {"failures", failures}}.dump() << "\n";
}

std::string poly_text(const QPolynomial& P) {
  std::string s;
  for (std::size_t t = P.size(); t-- > 0;) {
    if (!s.empty()) s += " + ";
    s += "(" + format_quaternion(P[t]) + ")x^" + std::to_string(t);
  }
  return s;
}

int cmd_demo(const std::string& id, const std::string& svg_path, const std::string& json_path, std::ostream& out,
             std::ostream& err) {
  std::vector<std::string> ids = id == "all" ? demo_cases() : std::vector<std::string>{id};
  json all = json::array();
  json failures = json::array();
  bool pass = true;
  for (const auto& case_id : ids) {
    const DemoReport r = run_demo(case_id);
    out << demo_table(r);
    all.push_back(demo_json(r));
    for (const auto& c : r.checks) {
      if (!c.pass) failures.push_back({{"case", r.id}, {"check", c.name}, {"computed", c.computed}, {"expected", c.expected}});
    }
    pass = pass && r.pass();
    if (!svg_path.empty() && r.svg) write_text(svg_path, *r.svg);
  }
  if (!json_path.empty()) write_text(json_path, (ids.size() == 1 ? all[0] : all).dump(2) + "\n");
  if (!pass) fail_detail(err, failures);
  return pass ? kExitPass : kExitFail;
}

struct VerifyArgs {
  std::string poly;
  std::size_t samples = 2000;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  int count = 1;
  int degree = 4;
  double scale = 10.0;
  std::string json_path;
  std::string csv_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<QPolynomial> polys;
  if (!a.poly.empty()) {
    polys.push_back(load_polynomial(a.poly));
  } else {
    if (a.count < 1 || a.degree < 2) throw UsageError("random verification needs --count >= 1 and --degree >= 2");
    Rng seeds(a.seed);
    for (int n = 0; n < a.count; ++n) polys.push_back(random_polynomial(seeds.next(), a.degree, a.scale));
  }
  VerifyConfig config;
  config.tol_rel = a.tol;
  config.sphere_samples = a.samples;
  config.seed = a.seed;
  const auto reports = verify_batch(polys, config);

  json instances = json::array();
  json failures = json::array();
  CsvWriter csv;
  bool pass = true;
  for (std::size_t n = 0; n < reports.size(); ++n) {
    const auto& r = reports[n];
    out << "instance " << n << ": " << poly_text(r.polynomial) << "\n";
    for (const auto& p : r.probes) {
      out << "  " << to_string(p.kind) << " " << format_quaternion(p.point) << "  |P'|=" << format_number(p.residual)
          << "  d_snm=" << format_number(p.dist_snm) << "  d_snail=" << format_number(p.dist_snail)
          << "  eps=" << format_number(p.eps) << "  " << (p.in_snm && p.in_snail && p.classical_ok ? "ok" : "FAIL")
          << "\n";
      if (!(p.in_snm && p.in_snail && p.classical_ok)) {
        failures.push_back({{"instance", n}, {"point", quaternion_json(p.point)}, {"in_snm", p.in_snm},
                            {"in_snail", p.in_snail}, {"classical_ok", p.classical_ok}});
      }
    }
    out << "  snm " << (r.pass ? "pass" : "FAIL") << ", snail " << (r.snail_pass ? "pass" : "FAIL") << ", classical "
        << (r.classical_pass ? "pass" : "FAIL") << "\n";
    pass = pass && r.all_pass();
    instances.push_back(report_json(r));
    csv.report(r);
  }
  if (!a.json_path.empty()) {
    write_text(a.json_path, json{{"pass", pass}, {"seed", a.seed}, {"instances", instances}}.dump(2) + "\n");
  }
  if (!a.csv_path.empty()) write_text(a.csv_path, csv.str());
  out << (pass ? "result: PASS\n" : "result: FAIL\n");
  if (!pass) fail_detail(err, failures);
  return pass ? kExitPass : kExitFail;
}

int cmd_bounds(const std::string& poly, std::size_t samples, const std::string& json_path, std::ostream& out) {
  const QPolynomial P = load_polynomial(poly);
  const SupEstimate snail = bound_snail(P, samples);
  const SupEstimate snm = bound_snm(P, samples);
  const ExtendedReal C = coefficient_bound_C(P);
  out << "C(P)                          " << format_number(C.value()) << "\n";
  out << "sup_I C(P_I)                  " << format_number(snail.value) << "  at I = " << format_quaternion(snail.witness.q())
      << "\n";
  out << "sup_I min(C(P_I), C(P_I^perp)) " << format_number(snm.value) << "  at I = " << format_quaternion(snm.witness.q())
      << "\n";
  out << "samples                       " << samples << "\n";
  if (!json_path.empty()) {
    auto num = [](double v) { return std::isfinite(v) ? json(round12(v)) : json(nullptr); };
    write_text(json_path, json{{"C", num(C.value())},
                               {"bound_snail", {{"value", num(snail.value)}, {"witness", quaternion_json(snail.witness.q())}}},
                               {"bound_snm", {{"value", num(snm.value)}, {"witness", quaternion_json(snm.witness.q())}}},
                               {"samples", samples}}
                                  .dump(2) +
                              "\n");
  }
  return kExitPass;
}

int cmd_hull(const std::string& poly, const std::string& slice, const std::string& svg_path,
             const std::string& csv_path, const std::string& json_path, std::ostream& out) {
  const QPolynomial P = load_polynomial(poly);
  const SnmSlice s = snm_slice(P, parse_slice(slice));
  out << "slice   " << format_quaternion(s.slice.q()) << "\n";
  auto region_line = [](const ConvexRegion2D& R) {
    std::string line = to_string(R.kind);
    for (const auto& v : R.vertices) line += " (" + format_number(v.a) + ", " + format_number(v.b) + ")";
    return line;
  };
  out << "snail   " << region_line(s.snail) << "\n";
  out << "cosnail " << region_line(s.cosnail) << "\n";
  out << "snm     " << region_line(s.snm) << "\n";
  if (!svg_path.empty()) write_text(svg_path, render_slice_svg(s));
  if (!csv_path.empty()) {
    CsvWriter csv;
    csv.slice(s);
    write_text(csv_path, csv.str());
  }
  if (!json_path.empty()) write_text(json_path, slice_json(s).dump(2) + "\n");
  return kExitPass;
}

int cmd_roots(const std::string& poly, bool of_derivative, const std::string& csv_path, const std::string& json_path,
              std::ostream& out) {
  QPolynomial P = load_polynomial(poly);
  if (of_derivative) P = derivative(P);
  const RootSetH roots = roots_quaternionic(P);
  CsvWriter csv;
  const UnitImaginary none = UnitImaginary::i();
  for (const auto& h : roots.isolated) {
    out << "root    " << format_quaternion(h) << "  |P(h)|=" << format_number(evaluate(P, h).norm()) << "\n";
    if (h.imag_norm() > kZeroTol * (1.0 + std::abs(h.w))) {
      csv.row("isolated", imaginary_unit_of(h), h.w, h.imag_norm());
    } else {
      csv.row("real", none, h.w, 0.0);
    }
  }
  for (const auto& s : roots.spheres) {
    out << "sphere  " << format_number(s.alpha) << " + " << format_number(s.beta) << " S\n";
    csv.row("sphere", none, s.alpha, s.beta);
  }
  if (!csv_path.empty()) write_text(csv_path, csv.str());
  if (!json_path.empty()) write_text(json_path, roots_json(roots).dump(2) + "\n");
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternionic Gauss-Lucas toolkit: slice projections, root hulls, snm verification, bounds"};
  app.require_subcommand(1);

  std::string demo_case;
  std::string demo_svg;
  std::string demo_json_path;
  auto* demo = app.add_subcommand("demo", "Reproduce a built-in worked example");
  demo->add_option("case", demo_case, "example-2-4 | section-3-projection | strict-inclusion | bounds-5-4 | all")
      ->required();
  demo->add_option("--svg", demo_svg, "Write the slice plot (strict-inclusion)");
  demo->add_option("--json", demo_json_path, "Write the checks as JSON");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check that the roots of P' lie in snm(P)");
  verify->add_option("--poly", va.poly, "Polynomial JSON file (or inline JSON); random instances when omitted");
  verify->add_option("--samples", va.samples, "Sphere samples for real roots")->check(CLI::PositiveNumber);
  verify->add_option("--tol", va.tol, "Relative containment tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for random instances");
  verify->add_option("--count", va.count, "Number of random instances");
  verify->add_option("--degree", va.degree, "Degree of random instances");
  verify->add_option("--scale", va.scale, "Coefficient scale of random instances")->check(CLI::PositiveNumber);
  verify->add_option("--json", va.json_path, "Write the report as JSON");
  verify->add_option("--csv", va.csv_path, "Write roots and hull vertices as CSV");

  std::string bounds_poly;
  std::size_t bounds_samples = 2000;
  std::string bounds_json;
  auto* bounds = app.add_subcommand("bounds", "Root-modulus bounds for the derivative");
  bounds->add_option("--poly", bounds_poly, "Polynomial JSON file (or inline JSON)")->required();
  bounds->add_option("--samples", bounds_samples, "Sphere samples")->check(CLI::PositiveNumber);
  bounds->add_option("--json", bounds_json, "Write the bounds as JSON");

  std::string hull_poly;
  std::string hull_slice;
  std::string hull_svg;
  std::string hull_csv;
  std::string hull_json;
  auto* hull = app.add_subcommand("hull", "Snail, cosnail and snm hulls in one slice");
  hull->add_option("--poly", hull_poly, "Polynomial JSON file (or inline JSON)")->required();
  hull->add_option("--slice", hull_slice, "Slice direction \"x,y,z\"")->required();
  hull->add_option("--svg", hull_svg, "Write an SVG plot");
  hull->add_option("--csv", hull_csv, "Write roots and vertices as CSV");
  hull->add_option("--json", hull_json, "Write the slice as JSON");

  std::string roots_poly;
  bool roots_derivative = false;
  std::string roots_csv;
  std::string roots_json_path;
  auto* roots = app.add_subcommand("roots", "Quaternionic roots (isolated and spherical)");
  roots->add_option("--poly", roots_poly, "Polynomial JSON file (or inline JSON)")->required();
  roots->add_flag("--derivative", roots_derivative, "Use P' instead of P");
  roots->add_option("--csv", roots_csv, "Write the roots as CSV");
  roots->add_option("--json", roots_json_path, "Write the roots as JSON");

  std::uint64_t rand_seed = 0;
  int rand_degree = 3;
  double rand_scale = 1.0;
  std::string rand_out;
  auto* random = app.add_subcommand("random", "Emit a seeded random polynomial as JSON");
  random->add_option("--seed", rand_seed, "Seed");
  random->add_option("--degree", rand_degree, "Degree")->check(CLI::PositiveNumber);
  random->add_option("--scale", rand_scale, "Coefficient scale")->check(CLI::PositiveNumber);
  random->add_option("--out", rand_out, "Output file (stdout when omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*demo) return cmd_demo(demo_case, demo_svg, demo_json_path, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*bounds) return cmd_bounds(bounds_poly, bounds_samples, bounds_json, out);
    if (*hull) return cmd_hull(hull_poly, hull_slice, hull_svg, hull_csv, hull_json, out);
    if (*roots) return cmd_roots(roots_poly, roots_derivative, roots_csv, roots_json_path, out);
    if (*random) {
      const std::string text = serialize_polynomial(random_polynomial(rand_seed, rand_degree, rand_scale)) + "\n";
      if (rand_out.empty()) {
        out << text;
      } else {
        write_text(rand_out, text);
      }
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << json{{"status", "usage_error"}, {"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const UnknownCase& e) {
    err << json{{"status", "usage_error"}, {"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << json{{"status", "usage_error"}, {"error", e.what()}, {"position", e.position()}}.dump() << "\n";
    return kExitUsage;
  } catch (const EmptyCoeffs& e) {
    err << json{{"status", "usage_error"}, {"error", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << json{{"status", "fail"}, {"error", e.what()}}.dump() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace qgl
