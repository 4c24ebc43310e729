#include "gallery/geom/kernel.hpp"

#include <algorithm>

namespace gallery::geom {

bool ConvexRegion::contains(const Point& q) const {
  if (hull.empty()) return false;
  if (hull.size() == 1) return q == hull[0];
  if (hull.size() == 2) return on_segment(q, hull[0], hull[1]);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], q) < 0) return false;
  }
  return true;
}

Q ConvexRegion::area2() const {
  if (hull.size() < 3) return 0;
  return signed_area2(hull);
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), PointLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::size_t n = points.size();
  if (n <= 2) return points;
  std::vector<Point> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (h >= 2 && orientation(hull[h - 2], hull[h - 1], points[i]) <= 0) --h;
    hull[h++] = points[i];
  }
  for (std::size_t i = n - 1, base = h + 1; i-- > 0;) {  // upper chain
    while (h >= base && orientation(hull[h - 2], hull[h - 1], points[i]) <= 0) --h;
    hull[h++] = points[i];
  }
  hull.resize(h - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

ConvexRegion kernel(const Polygon& poly) {
  if (!poly.holes.empty()) return {};  // something always hides behind a hole

  Box bb = poly.bounding_box();
  Q m = 1;
  std::vector<Point> region = {{bb.xmin - m, bb.ymin - m},
                               {bb.xmax + m, bb.ymin - m},
                               {bb.xmax + m, bb.ymax + m},
                               {bb.xmin - m, bb.ymax + m}};
  for (const Segment& e : poly.edges()) {
    // Keep the closed half-plane to the left of the directed edge.
    Point u = e.b - e.a;
    std::size_t n = region.size();
    if (n == 1) {
      if (sign(cross(u, region[0] - e.a)) < 0) return {};
      continue;
    }
    std::vector<Point> next;
    for (std::size_t i = 0; i < n; ++i) {
      const Point& cur = region[i];
      const Point& nxt = region[(i + 1) % n];
      int sc = sign(cross(u, cur - e.a));
      int sn = sign(cross(u, nxt - e.a));
      if (sc >= 0) next.push_back(cur);
      if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
        next.push_back(*line_intersection(cur, nxt, e.a, e.b));
      }
    }
    region = std::move(next);
    if (region.empty()) return {};
  }
  return ConvexRegion{convex_hull(std::move(region))};
}

}  // namespace gallery::geom
