#pragma once

#include <optional>

#include "gallery/geom/point.hpp"

namespace gallery::geom {

struct Segment {
  Point a;
  Point b;

  Segment() = default;
  Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}

  bool degenerate() const { return a == b; }
  Point midpoint() const { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

  friend bool operator==(const Segment& s, const Segment& t) {
    return s.a == t.a && s.b == t.b;
  }
};

/// Closed axis-aligned box; used as a cheap overlap prefilter.
struct Box {
  Q xmin, ymin, xmax, ymax;

  static Box of(const Point& p) { return {p.x, p.y, p.x, p.y}; }
  static Box of(const Segment& s) {
    Box b = of(s.a);
    b.expand(s.b);
    return b;
  }

  void expand(const Point& p) {
    if (p.x < xmin) xmin = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.x > xmax) xmax = p.x;
    if (p.y > ymax) ymax = p.y;
  }

  bool intersects(const Box& o) const {
    return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
  }

  bool contains(const Point& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
};

/// Closed segments share at least one point (touching counts).
bool segments_intersect(const Segment& s, const Segment& t);

/// The open interiors cross in a single point: endpoints touching or any
/// collinear contact do not count.
bool segments_properly_cross(const Segment& s, const Segment& t);

/// Collinear segments sharing more than one point.
bool collinear_overlap(const Segment& s, const Segment& t);

/// Intersection of the infinite lines through ab and cd; nullopt if parallel
/// (including both degenerate). Requires a != b and c != d.
std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d);

}  // namespace gallery::geom
