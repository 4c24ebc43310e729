#pragma once

#include <cstddef>
#include <vector>

#include "gallery/geom/segment.hpp"

namespace gallery::geom {

using Ring = std::vector<Point>;

/// Twice the signed area; positive iff the ring is counterclockwise.
Q signed_area2(const Ring& ring);

/// p lies on some edge of the ring.
bool point_on_ring(const Ring& ring, const Point& p);

/// Even-odd ray parity. Requires p strictly off the ring boundary.
bool parity_inside(const Ring& ring, const Point& p);

/// Polygon with optional holes, the closed region between the rings.
///
/// Invariants (enforced by validate): every ring is simple with >= 3 vertices
/// and no repeated or collinear consecutive vertices; the outer ring is
/// counterclockwise and holes are clockwise, so the interior lies to the left
/// of every directed edge; holes are strictly inside the outer ring and
/// pairwise disjoint (no touching).
struct Polygon {
  Ring outer;
  std::vector<Ring> holes;

  std::size_t vertex_count() const;
  std::vector<Point> vertices() const;   // outer first, then holes, ring order
  std::vector<Segment> edges() const;    // directed, interior on the left
  Q area2() const;                       // outer minus holes
  Box bounding_box() const;

  /// Closed containment: boundary points (outer and hole rings) count.
  bool contains(const Point& p) const;
  bool on_boundary(const Point& p) const;
  bool strictly_inside(const Point& p) const;

  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

}  // namespace gallery::geom
