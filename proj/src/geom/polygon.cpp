#include "gallery/geom/polygon.hpp"

#include <stdexcept>
#include <string>

namespace gallery::geom {

namespace {

std::vector<Segment> ring_edges(const Ring& ring) {
  std::vector<Segment> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    out.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
  }
  return out;
}

[[noreturn]] void invalid(const std::string& what) {
  throw std::invalid_argument("invalid polygon: " + what);
}

void check_ring_shape(const Ring& ring, const std::string& name) {
  std::size_t n = ring.size();
  if (n < 3) invalid(name + " has fewer than 3 vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (ring[i] == ring[(i + 1) % n]) {
      invalid(name + " repeats vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (collinear(ring[i], ring[(i + 1) % n], ring[(i + 2) % n])) {
      invalid(name + " has collinear consecutive vertices at index " +
              std::to_string((i + 1) % n));
    }
  }
  // Simplicity: non-adjacent edges must not touch. Adjacent edges share only
  // their common vertex once collinear consecutive triples are excluded.
  std::vector<Segment> edges = ring_edges(ring);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(edges[i], edges[j])) {
        invalid(name + " self-intersects (edges " + std::to_string(i) + " and " +
                std::to_string(j) + ")");
      }
    }
  }
}

bool strictly_inside_ring(const Ring& ring, const Point& p) {
  return !point_on_ring(ring, p) && parity_inside(ring, p);
}

bool rings_touch(const Ring& a, const Ring& b) {
  std::vector<Segment> ea = ring_edges(a);
  std::vector<Segment> eb = ring_edges(b);
  for (const Segment& s : ea) {
    for (const Segment& t : eb) {
      if (segments_intersect(s, t)) return true;
    }
  }
  return false;
}

}  // namespace

Q signed_area2(const Ring& ring) {
  Q acc = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    acc += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return acc;
}

bool point_on_ring(const Ring& ring, const Point& p) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (on_segment(p, ring[i], ring[(i + 1) % ring.size()])) return true;
  }
  return false;
}

bool parity_inside(const Ring& ring, const Point& p) {
  bool in = false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    if ((a.y <= p.y) == (b.y <= p.y)) continue;  // half-open rule, skips horizontals
    Q t = (p.y - a.y) / (b.y - a.y);
    Q x = a.x + t * (b.x - a.x);
    if (x > p.x) in = !in;
  }
  return in;
}

std::size_t Polygon::vertex_count() const {
  std::size_t n = outer.size();
  for (const Ring& h : holes) n += h.size();
  return n;
}

std::vector<Point> Polygon::vertices() const {
  std::vector<Point> out(outer.begin(), outer.end());
  for (const Ring& h : holes) out.insert(out.end(), h.begin(), h.end());
  return out;
}

std::vector<Segment> Polygon::edges() const {
  std::vector<Segment> out = ring_edges(outer);
  for (const Ring& h : holes) {
    std::vector<Segment> he = ring_edges(h);
    out.insert(out.end(), he.begin(), he.end());
  }
  return out;
}

Q Polygon::area2() const {
  Q acc = signed_area2(outer);
  for (const Ring& h : holes) acc += signed_area2(h);  // holes are clockwise: negative
  return acc;
}

Box Polygon::bounding_box() const {
  Box b = Box::of(outer.front());
  for (const Point& p : outer) b.expand(p);
  return b;  // holes lie inside the outer ring
}

bool Polygon::on_boundary(const Point& p) const {
  if (point_on_ring(outer, p)) return true;
  for (const Ring& h : holes) {
    if (point_on_ring(h, p)) return true;
  }
  return false;
}

bool Polygon::contains(const Point& p) const {
  if (on_boundary(p)) return true;
  if (!parity_inside(outer, p)) return false;
  for (const Ring& h : holes) {
    if (parity_inside(h, p)) return false;
  }
  return true;
}

bool Polygon::strictly_inside(const Point& p) const {
  return !on_boundary(p) && contains(p);
}

void Polygon::validate() const {
  check_ring_shape(outer, "outer ring");
  if (sign(signed_area2(outer)) <= 0) invalid("outer ring must be counterclockwise");
  for (std::size_t k = 0; k < holes.size(); ++k) {
    std::string name = "hole " + std::to_string(k);
    check_ring_shape(holes[k], name);
    if (sign(signed_area2(holes[k])) >= 0) invalid(name + " must be clockwise");
    if (rings_touch(outer, holes[k])) invalid(name + " touches the outer ring");
    for (const Point& p : holes[k]) {
      if (!strictly_inside_ring(outer, p)) {
        invalid(name + " is not strictly inside the outer ring");
      }
    }
  }
  for (std::size_t k = 0; k < holes.size(); ++k) {
    for (std::size_t m = k + 1; m < holes.size(); ++m) {
      std::string pair = "holes " + std::to_string(k) + " and " + std::to_string(m);
      if (rings_touch(holes[k], holes[m])) invalid(pair + " touch");
      if (strictly_inside_ring(holes[m], holes[k].front()) ||
          strictly_inside_ring(holes[k], holes[m].front())) {
        invalid(pair + " are nested");
      }
    }
  }
}

}  // namespace gallery::geom
