#include "qgl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qgl/error.hpp"

namespace qgl {

using nlohmann::json;

namespace {

json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

json chart_json(double a, double b) { return json::array({number(a), number(b)}); }

json direction_json(const UnitImaginary& I) { return json::array({number(I.x()), number(I.y()), number(I.z())}); }

json slice_roots_json(const std::vector<SliceComplex>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(chart_json(r.a, r.b));
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_number(v));
}

std::string format_quaternion(const Quaternion& h) {
  std::string s = format_number(h.w);
  const std::pair<double, char> parts[] = {{h.x, 'i'}, {h.y, 'j'}, {h.z, 'k'}};
  for (const auto& [v, unit] : parts) {
    const std::string t = format_number(v);
    if (t.front() != '-') s += '+';
    s += t;
    s += unit;
  }
  return s;
}

Quaternion parse_quaternion(std::string_view text) {
  Quaternion q;
  std::size_t pos = 0;
  bool any = false;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    const std::size_t term_start = pos;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (any) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    skip_space();
    double value = 1.0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    const bool has_number = ec == std::errc() && ptr != first;
    if (has_number) {
      pos += static_cast<std::size_t>(ptr - first);
    } else {
      value = 1.0;
    }
    skip_space();
    char unit = ' ';
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) unit = text[pos++];
    if (!has_number && unit == ' ') throw ParseError("expected a number or unit", term_start);
    value *= sign;
    switch (unit) {
      case 'i': q.x += value; break;
      case 'j': q.y += value; break;
      case 'k': q.z += value; break;
      default: q.w += value; break;
    }
    any = true;
    skip_space();
  }
  if (!any) throw ParseError("empty quaternion", 0);
  return q;
}

QPolynomial parse_polynomial(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw ParseError("expected an object with a \"coeffs\" array", 0);
  }
  const json& arr = doc["coeffs"];
  if (arr.empty()) throw EmptyCoeffs();
  std::vector<Quaternion> coeffs;
  coeffs.reserve(arr.size());
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const json& c = arr[t];
    if (!c.is_array() || c.size() != 4 || !std::all_of(c.begin(), c.end(), [](const json& v) { return v.is_number(); })) {
      throw ParseError("coefficient " + std::to_string(t) + " is not an array of 4 numbers", 0);
    }
    coeffs.emplace_back(c[0].get<double>(), c[1].get<double>(), c[2].get<double>(), c[3].get<double>());
  }
  return QPolynomial(std::move(coeffs));
}

std::string serialize_polynomial(const QPolynomial& P) {
  json arr = json::array();
  for (const auto& a : P.coeffs()) arr.push_back(json::array({a.w, a.x, a.y, a.z}));
  return json{{"coeffs", arr}}.dump();
}

json quaternion_json(const Quaternion& h) {
  return json::array({number(h.w), number(h.x), number(h.y), number(h.z)});
}

json region_json(const ConvexRegion2D& R) {
  json verts = json::array();
  for (const auto& v : R.vertices) verts.push_back(chart_json(v.a, v.b));
  return {{"kind", to_string(R.kind)}, {"vertices", verts}};
}

json slice_json(const SnmSlice& s) {
  return {{"slice", direction_json(s.slice)},
          {"plane_roots", slice_roots_json(s.plane_roots)},
          {"perp_roots", slice_roots_json(s.perp_roots)},
          {"snail", region_json(s.snail)},
          {"cosnail", region_json(s.cosnail)},
          {"snm", region_json(s.snm)}};
}

json roots_json(const RootSetH& roots) {
  json iso = json::array();
  for (const auto& h : roots.isolated) iso.push_back(quaternion_json(h));
  json sph = json::array();
  for (const auto& s : roots.spheres) sph.push_back({{"alpha", number(s.alpha)}, {"beta", number(s.beta)}});
  return {{"isolated", iso}, {"spheres", sph}};
}

json report_json(const VerificationReport& r) {
  json coeffs = json::array();
  for (const auto& a : r.polynomial.coeffs()) coeffs.push_back(quaternion_json(a));
  json probes = json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"kind", to_string(p.kind)},
                      {"point", quaternion_json(p.point)},
                      {"slice", direction_json(p.geometry.slice)},
                      {"chart", chart_json(p.chart.a, p.chart.b)},
                      {"residual", number(p.residual)},
                      {"eps", number(p.eps)},
                      {"dist_snm", number(p.dist_snm)},
                      {"dist_snail", number(p.dist_snail)},
                      {"dist_cosnail", number(p.dist_cosnail)},
                      {"in_snm", p.in_snm},
                      {"in_snail", p.in_snail},
                      {"classical_dist", number(p.classical_dist)},
                      {"classical_ok", p.classical_ok},
                      {"snm_kind", to_string(p.geometry.snm.kind)}});
  }
  return {{"polynomial", {{"coeffs", coeffs}}},
          {"derivative_roots", roots_json(r.derivative_roots)},
          {"config",
           {{"tol_rel", number(r.config.tol_rel)},
            {"sphere_samples", r.config.sphere_samples},
            {"sphere_probes", r.config.sphere_probes},
            {"seed", r.config.seed}}},
          {"pass", r.pass},
          {"snail_pass", r.snail_pass},
          {"classical_pass", r.classical_pass},
          {"probes", probes}};
}

CsvWriter::CsvWriter() : text_("kind,slice_x,slice_y,slice_z,a,b\n") {}

void CsvWriter::row(std::string_view kind, const UnitImaginary& slice, double a, double b) {
  text_ += kind;
  for (double v : {slice.x(), slice.y(), slice.z(), a, b}) {
    text_ += ',';
    text_ += format_number(v);
  }
  text_ += '\n';
}

void CsvWriter::slice(const SnmSlice& s) {
  for (const auto& r : s.plane_roots) row("p_root", s.slice, r.a, r.b);
  for (const auto& r : s.perp_roots) row("q_root", s.slice, r.a, r.b);
  for (const auto& v : s.snail.vertices) row("snail_vertex", s.slice, v.a, v.b);
  for (const auto& v : s.cosnail.vertices) row("cosnail_vertex", s.slice, v.a, v.b);
  for (const auto& v : s.snm.vertices) row("snm_vertex", s.slice, v.a, v.b);
}

void CsvWriter::report(const VerificationReport& r) {
  for (const auto& p : r.probes) {
    row("derivative_root", p.geometry.slice, p.chart.a, p.chart.b);
    slice(p.geometry);
  }
}

std::string render_slice_svg(const SnmSlice& s, const std::vector<SvgMarker>& extra) {
  std::vector<Point2> all;
  for (const auto& r : s.plane_roots) all.push_back({r.a, r.b});
  for (const auto& r : s.perp_roots) all.push_back({r.a, r.b});
  for (const auto& m : extra) all.push_back(m.at);
  for (const auto* R : {&s.snail, &s.cosnail, &s.snm}) all.insert(all.end(), R->vertices.begin(), R->vertices.end());
  double lo_a = -1.0, hi_a = 1.0, lo_b = -1.0, hi_b = 1.0;
  for (const auto& p : all) {
    lo_a = std::min(lo_a, p.a);
    hi_a = std::max(hi_a, p.a);
    lo_b = std::min(lo_b, p.b);
    hi_b = std::max(hi_b, p.b);
  }
  const double span = std::max(hi_a - lo_a, hi_b - lo_b) * 1.2;
  const double ca = 0.5 * (lo_a + hi_a);
  const double cb = 0.5 * (lo_b + hi_b);
  constexpr double kSize = 400.0;
  auto px = [&](Point2 p) {
    return std::pair{(p.a - ca) / span * kSize + kSize / 2, kSize / 2 - (p.b - cb) / span * kSize};
  };
  auto points_attr = [&](const ConvexRegion2D& R) {
    std::vector<Point2> verts = R.vertices;
    if (R.kind == RegionKind::WholePlane) {
      const double h = span / 2;
      verts = {{ca - h, cb - h}, {ca + h, cb - h}, {ca + h, cb + h}, {ca - h, cb + h}};
    }
    std::string out;
    for (const auto& v : verts) {
      const auto [x, y] = px(v);
      if (!out.empty()) out += ' ';
      out += format_number(x) + "," + format_number(y);
    }
    return out;
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  svg += "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  {
    const auto [x0, y0] = px({ca - span, 0.0});
    const auto [x1, y1] = px({ca + span, 0.0});
    const auto [x2, y2] = px({0.0, cb - span});
    const auto [x3, y3] = px({0.0, cb + span});
    svg += "<line x1=\"" + format_number(x0) + "\" y1=\"" + format_number(y0) + "\" x2=\"" + format_number(x1) +
           "\" y2=\"" + format_number(y1) + "\" stroke=\"#bbb\"/>\n";
    svg += "<line x1=\"" + format_number(x2) + "\" y1=\"" + format_number(y2) + "\" x2=\"" + format_number(x3) +
           "\" y2=\"" + format_number(y3) + "\" stroke=\"#bbb\"/>\n";
  }
  const std::tuple<const ConvexRegion2D*, const char*, const char*> hulls[] = {
      {&s.snail, "snail", "#4a7fd4"}, {&s.cosnail, "cosnail", "#d4874a"}, {&s.snm, "snm", "#2a9d3a"}};
  for (const auto& [R, name, color] : hulls) {
    svg += "<polygon class=\"" + std::string(name) + "\" data-kind=\"" + to_string(R->kind) + "\" points=\"" +
           points_attr(*R) + "\" fill=\"" + color + "\" fill-opacity=\"0.25\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
  }
  auto marker = [&](Point2 p, const std::string& cls, const std::string& color) {
    const auto [x, y] = px(p);
    svg += "<circle class=\"" + cls + "\" cx=\"" + format_number(x) + "\" cy=\"" + format_number(y) +
           "\" r=\"4\" fill=\"" + color + "\"/>\n";
  };
  for (const auto& r : s.plane_roots) marker({r.a, r.b}, "p_root", "#1f4fa0");
  for (const auto& r : s.perp_roots) marker({r.a, r.b}, "q_root", "#a0521f");
  for (const auto& m : extra) marker(m.at, m.label, m.color);
  svg += "</svg>\n";
  return svg;
}

}  // namespace qgl
