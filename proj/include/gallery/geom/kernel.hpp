#pragma once

#include <vector>

#include "gallery/geom/polygon.hpp"

namespace gallery::geom {

/// Convex set represented by its extreme points: empty, a single point, a
/// segment, or a counterclockwise convex polygon.
struct ConvexRegion {
  std::vector<Point> hull;

  bool empty() const { return hull.empty(); }
  bool contains(const Point& q) const;
  Q area2() const;
};

/// The set of points that see the entire polygon. Empty whenever the polygon
/// has a hole (something always hides behind it); otherwise the intersection
/// of the inner half-planes of all edges.
ConvexRegion kernel(const Polygon& poly);

/// Counterclockwise convex hull keeping only extreme points; collinear
/// midpoints are dropped. Returns 0, 1, 2, or >= 3 points.
std::vector<Point> convex_hull(std::vector<Point> points);

}  // namespace gallery::geom
