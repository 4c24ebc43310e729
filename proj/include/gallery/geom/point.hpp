#pragma once

#include <utility>

#include "gallery/rational.hpp"

namespace gallery::geom {

struct Point {
  Q x;
  Q y;

  Point() = default;
  Point(Q px, Q py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point operator*(const Q& s, const Point& p) { return {s * p.x, s * p.y}; }
};

/// Lexicographic (x, then y); strict weak order for maps and dedup.
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

struct PointLess {
  bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
};

inline Q cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Q dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

/// Reads v into out when it is an integer small enough that the 128-bit
/// predicate fast paths below stay exact. Benchmark coordinates are integers,
/// so this hits almost always; LP-derived rational points take the slow path.
inline bool small_int(const Q& v, long& out) {
  mpq_srcptr q = v.get_mpq_t();
  if (mpz_cmp_ui(mpq_denref(q), 1) != 0) return false;
  if (!mpz_fits_slong_p(mpq_numref(q))) return false;
  long n = mpz_get_si(mpq_numref(q));
  if (n > (1L << 40) || n < -(1L << 40)) return false;
  out = n;
  return true;
}

/// Sign of the turn a->b->c: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  long ax, ay, bx, by, cx, cy;
  if (small_int(a.x, ax) && small_int(a.y, ay) && small_int(b.x, bx) &&
      small_int(b.y, by) && small_int(c.x, cx) && small_int(c.y, cy)) {
    // |coords| <= 2^40, so the products fit in 2^83 and stay exact.
    __int128 s = static_cast<__int128>(bx - ax) * (cy - ay) -
                 static_cast<__int128>(by - ay) * (cx - ax);
    return s > 0 ? 1 : s < 0 ? -1 : 0;
  }
  return sign(cross(b - a, c - a));
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return orientation(a, b, c) == 0;
}

/// p lies on the closed segment [a, b]; endpoints count.
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
  long px, py, ax, ay, bx, by;
  if (small_int(p.x, px) && small_int(p.y, py) && small_int(a.x, ax) &&
      small_int(a.y, ay) && small_int(b.x, bx) && small_int(b.y, by)) {
    __int128 cr = static_cast<__int128>(bx - ax) * (py - ay) -
                  static_cast<__int128>(by - ay) * (px - ax);
    if (cr != 0) return false;
    __int128 d = static_cast<__int128>(px - ax) * (px - bx) +
                 static_cast<__int128>(py - ay) * (py - by);
    return d <= 0;
  }
  if (!collinear(a, b, p)) return false;
  return dot(p - a, p - b) <= 0;
}

}  // namespace gallery::geom
