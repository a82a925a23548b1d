#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qgl/hull_sets.hpp"

namespace qgl {

/// Numbers in every text output carry 12 significant digits.
std::string format_number(double v);

/// Value rounded to 12 significant digits, for JSON emission.
double round12(double v);

/// "w+xi+yj+zk", e.g. "1+11i-2j-1k".
std::string format_quaternion(const Quaternion& h);

/// Parses the format_quaternion form. Terms may be omitted or reordered
/// ("3j", "-k+2", "0.5+0.5i"). Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// {"coeffs": [[w,x,y,z], ...]} in ascending degree. Throws ParseError
/// (with byte position for syntax errors) or EmptyCoeffs.
QPolynomial parse_polynomial(std::string_view json_text);

/// Inverse of parse_polynomial; values survive a round trip bit-exactly.
std::string serialize_polynomial(const QPolynomial& P);

nlohmann::json quaternion_json(const Quaternion& h);
nlohmann::json region_json(const ConvexRegion2D& R);
nlohmann::json slice_json(const SnmSlice& s);
nlohmann::json report_json(const VerificationReport& r);
nlohmann::json roots_json(const RootSetH& roots);

/// CSV with the fixed header kind,slice_x,slice_y,slice_z,a,b.
class CsvWriter {
 public:
  CsvWriter();

  void row(std::string_view kind, const UnitImaginary& slice, double a, double b);
  void slice(const SnmSlice& s);
  void report(const VerificationReport& r);

  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

struct SvgMarker {
  Point2 at;
  std::string label;
  std::string color;
};

/// SVG of one slice: one <polygon> per hull (snail, cosnail, snm) and one
/// <circle> per root marker.
std::string render_slice_svg(const SnmSlice& s, const std::vector<SvgMarker>& extra = {});

}  // namespace qgl
