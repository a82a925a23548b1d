#pragma once

#include <span>
#include <string>
#include <vector>

namespace qgl {

/// A point (a, b) of the chart a + I b of a slice plane.
struct Point2 {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class RegionKind { Empty, Point, Segment, Polygon, WholePlane };

std::string to_string(RegionKind kind);

/// Closed convex set in a slice chart. Polygon vertices are counterclockwise
/// and strictly convex; a Segment has 2 vertices, a Point 1, Empty and
/// WholePlane none.
struct ConvexRegion2D {
  RegionKind kind = RegionKind::Empty;
  std::vector<Point2> vertices;

  static ConvexRegion2D empty() { return {}; }
  static ConvexRegion2D whole_plane() { return {RegionKind::WholePlane, {}}; }
  static ConvexRegion2D point(Point2 p) { return {RegionKind::Point, {p}}; }
};

/// Monotone-chain hull. Near-collinear input (within 1e-12 of the bounding
/// box diagonal) collapses to a Segment or Point.
ConvexRegion2D convex_hull(std::span<const Point2> points);

/// Intersection of closed convex regions. Boundary contact within
/// 1e-12 of the combined extent counts as contact, so touching regions meet
/// in a Point or Segment instead of vanishing.
ConvexRegion2D intersect(const ConvexRegion2D& A, const ConvexRegion2D& B);

/// Euclidean distance from p to R; 0 inside, +infinity for Empty.
double distance(const ConvexRegion2D& R, Point2 p);

/// True iff p lies within eps of R (plus floating-point slack at R's scale).
bool contains(const ConvexRegion2D& R, Point2 p, double eps);

}  // namespace qgl
