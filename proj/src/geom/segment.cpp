#include "gallery/geom/segment.hpp"

namespace gallery::geom {

bool segments_intersect(const Segment& s, const Segment& t) {
  int d1 = orientation(t.a, t.b, s.a);
  int d2 = orientation(t.a, t.b, s.b);
  int d3 = orientation(s.a, s.b, t.a);
  int d4 = orientation(s.a, s.b, t.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(s.a, t.a, t.b)) return true;
  if (d2 == 0 && on_segment(s.b, t.a, t.b)) return true;
  if (d3 == 0 && on_segment(t.a, s.a, s.b)) return true;
  if (d4 == 0 && on_segment(t.b, s.a, s.b)) return true;
  return false;
}

bool segments_properly_cross(const Segment& s, const Segment& t) {
  int d1 = orientation(t.a, t.b, s.a);
  int d2 = orientation(t.a, t.b, s.b);
  int d3 = orientation(s.a, s.b, t.a);
  int d4 = orientation(s.a, s.b, t.b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool collinear_overlap(const Segment& s, const Segment& t) {
  if (!collinear(s.a, s.b, t.a) || !collinear(s.a, s.b, t.b)) return false;
  if (s.degenerate() && !collinear(t.a, t.b, s.a)) return false;
  // All four points on one line: overlap iff the intervals share length.
  Point lo_s = lex_less(s.a, s.b) ? s.a : s.b;
  Point hi_s = lex_less(s.a, s.b) ? s.b : s.a;
  Point lo_t = lex_less(t.a, t.b) ? t.a : t.b;
  Point hi_t = lex_less(t.a, t.b) ? t.b : t.a;
  const Point& lo = lex_less(lo_s, lo_t) ? lo_t : lo_s;
  const Point& hi = lex_less(hi_s, hi_t) ? hi_s : hi_t;
  return lex_less(lo, hi);
}

std::optional<Point> line_intersection(const Point& a, const Point& b,
                                       const Point& c, const Point& d) {
  Point u = b - a;
  Point v = d - c;
  Q denom = cross(u, v);
  if (sign(denom) == 0) return std::nullopt;
  Q t = cross(c - a, v) / denom;
  return a + t * u;
}

}  // namespace gallery::geom
