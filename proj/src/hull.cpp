#include "qgl/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qgl {

namespace {

constexpr double kRelTol = 1e-12;
constexpr double kSlack = 1e-14;

Point2 operator-(Point2 p, Point2 q) { return {p.a - q.a, p.b - q.b}; }
Point2 operator+(Point2 p, Point2 q) { return {p.a + q.a, p.b + q.b}; }
Point2 operator*(double s, Point2 p) { return {s * p.a, s * p.b}; }

double cross(Point2 u, Point2 v) { return u.a * v.b - u.b * v.a; }
double dot(Point2 u, Point2 v) { return u.a * v.a + u.b * v.b; }
double len(Point2 u) { return std::hypot(u.a, u.b); }

// Twice the signed area of (o, a, b); positive for a left turn.
double orient(Point2 o, Point2 a, Point2 b) { return cross(a - o, b - o); }

double max_coord(std::span<const Point2> pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max({m, std::abs(p.a), std::abs(p.b)});
  return m;
}

double bbox_diagonal(std::span<const Point2> pts) {
  if (pts.empty()) return 0.0;
  double lo_a = pts[0].a, hi_a = pts[0].a, lo_b = pts[0].b, hi_b = pts[0].b;
  for (const auto& p : pts) {
    lo_a = std::min(lo_a, p.a);
    hi_a = std::max(hi_a, p.a);
    lo_b = std::min(lo_b, p.b);
    hi_b = std::max(hi_b, p.b);
  }
  return std::hypot(hi_a - lo_a, hi_b - lo_b);
}

double segment_distance(Point2 p, Point2 s0, Point2 s1) {
  const Point2 d = s1 - s0;
  const double dd = dot(d, d);
  double t = dd > 0.0 ? dot(p - s0, d) / dd : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return len(p - (s0 + t * d));
}

ConvexRegion2D from_interval(Point2 p, Point2 q, double tol) {
  if (len(q - p) <= tol) return ConvexRegion2D::point(0.5 * (p + q));
  return {RegionKind::Segment, {p, q}};
}

// Tolerance used for contact decisions between two regions.
double contact_tol(const ConvexRegion2D& A, const ConvexRegion2D& B) {
  const double scale = std::max({max_coord(A.vertices), max_coord(B.vertices), bbox_diagonal(A.vertices),
                                 bbox_diagonal(B.vertices)});
  return kRelTol * std::max(scale, std::numeric_limits<double>::min());
}

// Signed distance of p from the directed line through c0 -> c1; positive on the left.
double side(Point2 c0, Point2 c1, Point2 p) {
  const Point2 e = c1 - c0;
  return cross(e, p - c0) / len(e);
}

// Parameter interval of s0 -> s1 inside poly, each edge pushed outward by slack.
std::pair<double, double> clip_interval(Point2 s0, Point2 s1, const std::vector<Point2>& poly, double slack) {
  double t0 = 0.0;
  double t1 = 1.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 c0 = poly[i];
    const Point2 c1 = poly[(i + 1) % n];
    const double f0 = side(c0, c1, s0) + slack;
    const double f1 = side(c0, c1, s1) + slack;
    if (f0 < 0.0 && f1 < 0.0) return {1.0, 0.0};
    if (f0 >= 0.0 && f1 >= 0.0) continue;
    const double t = f0 / (f0 - f1);
    if (f0 < 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  return {t0, t1};
}

ConvexRegion2D clip_segment(Point2 s0, Point2 s1, const std::vector<Point2>& poly, double tol) {
  const auto [t0, t1] = clip_interval(s0, s1, poly, tol);
  if (t0 > t1) return ConvexRegion2D::empty();
  const Point2 d = s1 - s0;
  // A grazing contact widens into a sliver under the slack; report the exact piece when there is one.
  const auto [u0, u1] = clip_interval(s0, s1, poly, 0.0);
  if (u0 > u1) return ConvexRegion2D::point(s0 + (0.5 * (t0 + t1)) * d);
  return from_interval(s0 + u0 * d, s0 + u1 * d, tol);
}

ConvexRegion2D segment_segment(Point2 p0, Point2 p1, Point2 q0, Point2 q1, double tol) {
  const Point2 d = p1 - p0;
  const Point2 e = q1 - q0;
  const double dl = len(d);
  const bool collinear = std::abs(cross(d, q0 - p0)) <= tol * dl && std::abs(cross(d, q1 - p0)) <= tol * dl;
  if (collinear) {
    const double dd = dot(d, d);
    const double u0 = dot(q0 - p0, d) / dd;
    const double u1 = dot(q1 - p0, d) / dd;
    const double lo = std::max(0.0, std::min(u0, u1));
    const double hi = std::min(1.0, std::max(u0, u1));
    if (lo > hi + tol / dl) return ConvexRegion2D::empty();
    return from_interval(p0 + lo * d, p0 + std::max(lo, hi) * d, tol);
  }
  const double denom = cross(d, e);
  if (denom == 0.0) return ConvexRegion2D::empty();
  const double t = cross(q0 - p0, e) / denom;
  const double s = cross(q0 - p0, d) / denom;
  const double el = len(e);
  if (t < -tol / dl || t > 1.0 + tol / dl || s < -tol / el || s > 1.0 + tol / el) {
    return ConvexRegion2D::empty();
  }
  return ConvexRegion2D::point(p0 + std::clamp(t, 0.0, 1.0) * d);
}

std::vector<Point2> clip_polygon(const std::vector<Point2>& subject, const std::vector<Point2>& clip, double tol) {
  std::vector<Point2> out = subject;
  const std::size_t n = clip.size();
  for (std::size_t i = 0; i < n && !out.empty(); ++i) {
    const Point2 c0 = clip[i];
    const Point2 c1 = clip[(i + 1) % n];
    std::vector<Point2> in = std::move(out);
    out.clear();
    for (std::size_t k = 0; k < in.size(); ++k) {
      const Point2 s = in[k];
      const Point2 e = in[(k + 1) % in.size()];
      const double ds = side(c0, c1, s) + tol;
      const double de = side(c0, c1, e) + tol;
      if (de >= 0.0) {
        if (ds < 0.0) out.push_back(s + (ds / (ds - de)) * (e - s));
        out.push_back(e);
      } else if (ds >= 0.0) {
        out.push_back(s + (ds / (ds - de)) * (e - s));
      }
    }
  }
  return out;
}

}  // namespace

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::Empty: return "empty";
    case RegionKind::Point: return "point";
    case RegionKind::Segment: return "segment";
    case RegionKind::Polygon: return "polygon";
    case RegionKind::WholePlane: return "whole_plane";
  }
  return "unknown";
}

ConvexRegion2D convex_hull(std::span<const Point2> points) {
  if (points.empty()) return ConvexRegion2D::empty();
  const double diag = bbox_diagonal(points);
  const double tol = kRelTol * diag;
  if (diag == 0.0) return ConvexRegion2D::point(points[0]);

  std::vector<Point2> pts;
  for (const auto& p : points) {
    const bool dup = std::any_of(pts.begin(), pts.end(), [&](const Point2& q) { return len(p - q) <= tol; });
    if (!dup) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end(), [](const Point2& u, const Point2& v) { return u.a < v.a || (u.a == v.a && u.b < v.b); });
  if (pts.size() == 1) return ConvexRegion2D::point(pts[0]);

  // Keep b only when it turns left of o -> a by more than tol (distance).
  auto keeps = [&](Point2 o, Point2 a, Point2 b) { return orient(o, a, b) > tol * len(b - o); };
  std::vector<Point2> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && !keeps(hull[hull.size() - 2], hull.back(), p)) hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (hull.size() >= lower && !keeps(hull[hull.size() - 2], hull.back(), pts[i])) hull.pop_back();
    hull.push_back(pts[i]);
  }
  hull.pop_back();

  if (hull.size() <= 2) {
    // Collinear: the lexicographic ends need not be the extremes when the line is near vertical.
    auto farthest = [&](Point2 from) {
      return *std::max_element(pts.begin(), pts.end(),
                               [&](const Point2& u, const Point2& v) { return len(u - from) < len(v - from); });
    };
    const Point2 p = farthest(pts.front());
    return from_interval(p, farthest(p), tol);
  }
  return {RegionKind::Polygon, std::move(hull)};
}

ConvexRegion2D intersect(const ConvexRegion2D& A, const ConvexRegion2D& B) {
  if (A.kind == RegionKind::Empty || B.kind == RegionKind::Empty) return ConvexRegion2D::empty();
  if (A.kind == RegionKind::WholePlane) return B;
  if (B.kind == RegionKind::WholePlane) return A;
  // Order so that A has the lower-dimensional kind.
  if (static_cast<int>(A.kind) > static_cast<int>(B.kind)) return intersect(B, A);

  const double tol = contact_tol(A, B);
  if (A.kind == RegionKind::Point) {
    return distance(B, A.vertices[0]) <= tol ? A : ConvexRegion2D::empty();
  }
  if (A.kind == RegionKind::Segment) {
    if (B.kind == RegionKind::Segment) {
      return segment_segment(A.vertices[0], A.vertices[1], B.vertices[0], B.vertices[1], tol);
    }
    return clip_segment(A.vertices[0], A.vertices[1], B.vertices, tol);
  }
  const std::vector<Point2> exact = clip_polygon(A.vertices, B.vertices, 0.0);
  if (!exact.empty()) return convex_hull(exact);
  // Touching within tol: collapse the sliver to its longest chord.
  const std::vector<Point2> clipped = clip_polygon(A.vertices, B.vertices, tol);
  if (clipped.empty()) return ConvexRegion2D::empty();
  Point2 p = clipped[0];
  Point2 q = clipped[0];
  for (const auto& u : clipped) {
    for (const auto& v : clipped) {
      if (len(u - v) > len(p - q)) {
        p = u;
        q = v;
      }
    }
  }
  return from_interval(p, q, 1e3 * tol);
}

double distance(const ConvexRegion2D& R, Point2 p) {
  switch (R.kind) {
    case RegionKind::Empty: return std::numeric_limits<double>::infinity();
    case RegionKind::WholePlane: return 0.0;
    case RegionKind::Point: return len(p - R.vertices[0]);
    case RegionKind::Segment: return segment_distance(p, R.vertices[0], R.vertices[1]);
    case RegionKind::Polygon: break;
  }
  const auto& v = R.vertices;
  const std::size_t n = v.size();
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 c0 = v[i];
    const Point2 c1 = v[(i + 1) % n];
    if (orient(c0, c1, p) < 0.0) inside = false;
    best = std::min(best, segment_distance(p, c0, c1));
  }
  return inside ? 0.0 : best;
}

bool contains(const ConvexRegion2D& R, Point2 p, double eps) {
  const double scale = 1.0 + std::max({max_coord(R.vertices), std::abs(p.a), std::abs(p.b)});
  return distance(R, p) <= eps + kSlack * scale;
}

}  // namespace qgl
