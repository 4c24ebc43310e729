#include "gallery/geom/visibility.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gallery::geom {

namespace {

/// Scale to |x| + |y| = 1: a unique exact representative per ray direction.
Point l1_normalize(const Point& d) {
  Q s = abs(d.x) + abs(d.y);
  return {d.x / s, d.y / s};
}

Point rot90(const Point& d) { return {-d.y, d.x}; }

/// Counterclockwise order of directions starting just above the +x axis.
int dir_half(const Point& d) {
  return (sign(d.y) > 0 || (sign(d.y) == 0 && sign(d.x) > 0)) ? 0 : 1;
}

bool dir_less(const Point& a, const Point& b) {
  int ha = dir_half(a), hb = dir_half(b);
  if (ha != hb) return ha < hb;
  return sign(cross(a, b)) > 0;
}

bool dir_equal(const Point& a, const Point& b) {
  return !dir_less(a, b) && !dir_less(b, a);
}

struct Hit {
  Q t;
  std::size_t edge;
};

/// Nearest intersection of the open ray origin + t*dir (t > 0) with any edge.
std::optional<Hit> ray_first_hit(const std::vector<Segment>& edges,
                                 const Point& origin, const Point& dir) {
  std::optional<Hit> best;
  Q dd = dot(dir, dir);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Segment& e = edges[i];
    Point u = e.b - e.a;
    Q denom = cross(dir, u);
    if (sign(denom) == 0) {
      if (!collinear(origin, e.a, e.b)) continue;
      Q ta = dot(e.a - origin, dir) / dd;
      Q tb = dot(e.b - origin, dir) / dd;
      Q lo = ta < tb ? ta : tb;
      if (sign(lo) > 0 && (!best || lo < best->t)) best = Hit{lo, i};
      continue;
    }
    Q t = cross(e.a - origin, u) / denom;
    if (sign(t) <= 0) continue;
    Q s = cross(e.a - origin, dir) / denom;
    if (s < 0 || s > 1) continue;
    if (!best || t < best->t) best = Hit{t, i};
  }
  return best;
}

Q ray_param(const Point& apex, const Point& dir, const Point& x) {
  return dot(x - apex, dir) / dot(dir, dir);
}

}  // namespace

bool sees(const Point& a, const Point& b, const Polygon& poly) {
  if (!poly.contains(a) || !poly.contains(b)) return false;
  if (a == b) return true;
  Point d = b - a;
  Q dd = dot(d, d);
  Segment ab{a, b};
  Box ab_box = Box::of(ab);
  // The explicit return type forces gmpxx to evaluate the lazy expression
  // before its operands go out of scope.
  auto param = [&](const Point& x) -> Q { return dot(x - a, d) / dd; };

  std::vector<Q> ts = {Q(0), Q(1)};
  for (const Segment& e : poly.edges()) {
    if (!ab_box.intersects(Box::of(e))) continue;
    if (collinear_overlap(ab, e)) {
      for (const Point* pt : {&e.a, &e.b}) {
        Q t = param(*pt);
        if (t > 0 && t < 1) ts.push_back(t);
      }
    } else if (segments_intersect(ab, e)) {
      if (segments_properly_cross(ab, e)) {
        ts.push_back(param(*line_intersection(a, b, e.a, e.b)));
      } else {
        if (on_segment(e.a, a, b)) ts.push_back(param(e.a));
        if (on_segment(e.b, a, b)) ts.push_back(param(e.b));
        // A touch at a or b itself contributes the parameters 0 / 1,
        // which are already present.
      }
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  // Between consecutive boundary contacts the segment stays on one side, so
  // the midpoint of each gap decides visibility for the whole gap.
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Q mid = (ts[i] + ts[i + 1]) / 2;
    if (!poly.contains(a + mid * d)) return false;
  }
  return true;
}

Q ray_clearance(const Polygon& poly, const Point& origin, const Point& dir) {
  if (dir == Point{Q(0), Q(0)}) throw std::invalid_argument("zero ray direction");
  Q dd = dot(dir, dir);
  std::vector<Q> ts = {Q(0)};
  for (const Segment& e : poly.edges()) {
    Point u = e.b - e.a;
    Q denom = cross(dir, u);
    if (sign(denom) == 0) {
      if (!collinear(origin, e.a, e.b)) continue;
      for (const Point* pt : {&e.a, &e.b}) {
        Q t = dot(*pt - origin, dir) / dd;
        if (sign(t) > 0) ts.push_back(t);
      }
      continue;
    }
    Q t = cross(e.a - origin, u) / denom;
    Q s = cross(e.a - origin, dir) / denom;
    if (sign(t) > 0 && s >= 0 && s <= 1) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  Q far = 0;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    Q mid = (ts[i] + ts[i + 1]) / 2;
    if (!poly.contains(origin + mid * dir)) break;
    far = ts[i + 1];
  }
  return far;
}

bool VisibilityPolygon::contains(const Point& q) const {
  if (q == apex) return true;
  if (point_on_ring(region, q) || parity_inside(region, q)) return true;
  for (const Segment& s : antennas) {
    if (on_segment(q, s.a, s.b)) return true;
  }
  return false;
}

VisibilityPolygon visibility_polygon(const Polygon& poly, const Point& apex) {
  if (!poly.contains(apex)) {
    throw std::invalid_argument("visibility apex outside polygon");
  }
  std::vector<Segment> edges = poly.edges();

  // Critical directions: toward every vertex, plus opposites. Between two
  // consecutive critical directions the nearest blocking edge cannot change.
  std::vector<Point> dirs;
  for (const Point& v : poly.vertices()) {
    if (v == apex) continue;
    Point d = l1_normalize(v - apex);
    dirs.push_back(d);
    dirs.push_back({-d.x, -d.y});
  }
  std::sort(dirs.begin(), dirs.end(), dir_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(), dir_equal), dirs.end());
  std::size_t k = dirs.size();

  struct Wedge {
    bool lit = false;
    Point xl, xr;  // far arc endpoints on the bounding rays
  };
  std::vector<Wedge> wedges(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Point& d0 = dirs[i];
    const Point& d1 = dirs[(i + 1) % k];
    Point mid = sign(cross(d0, d1)) == 0 ? rot90(d0) : d0 + d1;
    auto hit = ray_first_hit(edges, apex, mid);
    if (!hit) continue;
    if (!poly.contains(apex + (hit->t / 2) * mid)) continue;
    const Segment& star = edges[hit->edge];
    auto xl = line_intersection(apex, apex + d0, star.a, star.b);
    auto xr = line_intersection(apex, apex + d1, star.a, star.b);
    if (!xl || !xr) {
      // The bounding edge spans the whole wedge, so it cannot be parallel
      // to either bounding ray.
      throw std::logic_error("visibility wedge bounded by a parallel edge");
    }
    wedges[i] = {true, *xl, *xr};
  }

  VisibilityPolygon out;
  out.apex = apex;
  Ring& ring = out.region;
  auto push = [&ring](const Point& p) {
    if (ring.empty() || ring.back() != p) ring.push_back(p);
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (wedges[i].lit) {
      push(wedges[i].xl);
      push(wedges[i].xr);
    } else {
      push(apex);
    }
  }
  while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  // Drop redundant points in the middle of straight boundary runs.
  for (std::size_t i = 0; i < ring.size() && ring.size() >= 3;) {
    const Point& prev = ring[(i + ring.size() - 1) % ring.size()];
    const Point& cur = ring[i];
    const Point& next = ring[(i + 1) % ring.size()];
    if (collinear(prev, cur, next) && on_segment(cur, prev, next)) {
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      i = 0;
    } else {
      ++i;
    }
  }

  // Antennas: along a critical ray the visible prefix can extend past the
  // two-dimensional region when the sight line squeezes through grazing
  // contacts. Junction i sits between wedge i-1 and wedge i.
  for (std::size_t i = 0; i < k; ++i) {
    const Point& d = dirs[i];
    const Wedge& before = wedges[(i + k - 1) % k];
    const Wedge& after = wedges[i];
    Q extent = 0;
    if (before.lit) extent = std::max(extent, ray_param(apex, d, before.xr));
    if (after.lit) extent = std::max(extent, ray_param(apex, d, after.xl));
    Q reach = ray_clearance(poly, apex, d);
    if (reach > extent) {
      out.antennas.push_back(Segment{apex + extent * d, apex + reach * d});
    }
  }
  return out;
}

}  // namespace gallery::geom
