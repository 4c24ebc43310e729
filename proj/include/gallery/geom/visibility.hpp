#pragma once

#include <vector>

#include "gallery/geom/polygon.hpp"

namespace gallery::geom {

/// True iff the closed segment [a, b] stays inside the closed polygon.
/// Running along the boundary (grazing a vertex or an edge) counts as seeing.
/// Exact; used as the ground-truth oracle for the region-based routines.
bool sees(const Point& a, const Point& b, const Polygon& poly);

/// Largest t >= 0 such that origin + s*dir stays inside the closed polygon
/// for every s in [0, t]. Requires poly.contains(origin); dir must be nonzero.
Q ray_clearance(const Polygon& poly, const Point& origin, const Point& dir);

/// Everything a fixed apex sees: a star-shaped region plus the degenerate
/// one-dimensional sight segments ("antennas") that arise when the line of
/// sight grazes through collinear reflex vertices. Each antenna starts on the
/// region boundary (possibly at the apex) and extends outward along a ray
/// from the apex.
struct VisibilityPolygon {
  Point apex;
  Ring region;                     // simple, counterclockwise, contains apex
  std::vector<Segment> antennas;   // antenna.a is the base on the region

  /// q is visible from the apex: inside the region or on an antenna.
  bool contains(const Point& q) const;
};

/// Computes the visibility polygon of apex inside poly (exact).
/// Throws std::invalid_argument if the apex is outside the polygon.
VisibilityPolygon visibility_polygon(const Polygon& poly, const Point& apex);

}  // namespace gallery::geom
