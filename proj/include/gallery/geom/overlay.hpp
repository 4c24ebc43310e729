#pragma once

#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/geom/visibility.hpp"

namespace gallery::geom {

/// A weighted closed region inside the clip polygon: a simple
/// counterclockwise ring plus optional one-dimensional antenna segments.
/// The closed point set is ring interior + ring boundary + antennas.
struct OverlayRegion {
  Ring boundary;
  std::vector<Segment> antennas;
  Q weight = Q(1);
};

OverlayRegion to_overlay_region(const VisibilityPolygon& vis, Q weight = Q(1));

enum class CellKind { Face, Edge, Vertex };

struct OverlayCell {
  CellKind kind;
  Point rep;  // a point of the cell: interior sample, or the vertex itself
  Q weight;
};

/// Exact arrangement of weighted closed regions clipped to a polygon.
///
/// The cells subdivide the clip polygon: two-dimensional faces (trapezoid
/// pieces between consecutive boundary crossings of a vertical slab),
/// one-dimensional edge pieces (region boundaries, antennas, clip edges),
/// and arrangement vertices. A cell's weight adds up every region whose
/// closed point set contains it, so boundary and antenna points count.
///
/// Faces may be reported as several cells with equal weight; min/max queries
/// and weight_at are unaffected. Regions must lie inside the clip polygon.
class Overlay {
 public:
  Overlay(const Polygon& clip, std::vector<OverlayRegion> regions);

  const std::vector<OverlayCell>& cells() const { return cells_; }

  /// The face cell of smallest weight. The minimum of the weight function
  /// over the whole clip polygon is always attained on a face, because a
  /// region covering a face also covers the face's closure.
  const OverlayCell& min_face() const { return cells_[min_face_]; }

  /// The cell of largest weight. The maximum is always attained at an
  /// arrangement vertex, for the same closure reason; edge and face cells
  /// still participate in the scan.
  const OverlayCell& max_cell() const { return cells_[max_cell_]; }

  /// Direct pointwise evaluation (membership test against every region).
  /// Agrees with the cell weights; used as an independent cross-check.
  Q weight_at(const Point& p) const;

 private:
  Polygon clip_;
  std::vector<OverlayRegion> regions_;
  std::vector<Box> boxes_;  // per region, antennas included
  std::vector<OverlayCell> cells_;
  std::size_t min_face_ = 0;
  std::size_t max_cell_ = 0;

  void build();
};

}  // namespace gallery::geom
