#include "gallery/geom/overlay.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gallery::geom {

OverlayRegion to_overlay_region(const VisibilityPolygon& vis, Q weight) {
  return OverlayRegion{vis.region, vis.antennas, std::move(weight)};
}

namespace {

// One input segment of the arrangement, before splitting.
//   delta    face-weight change when walking upward across the segment
//            (region boundary edges oriented interior-left: +w when the
//            parent edge points rightward, -w leftward, 0 when vertical)
//   clip     true for clip polygon edges; crossing toggles inside-parity
//   antenna  contributing region weight when the segment is an antenna,
//            otherwise 0
struct RawSeg {
  Segment s;
  Q delta = Q(0);
  bool clip = false;
  Q antenna = Q(0);
};

// A maximal crossing-free piece of a raw segment.
struct Piece {
  Point a, b;
  Q delta;
  bool clip;
  Q antenna;
};

Q param_on(const Segment& s, const Point& p) {
  Point d = s.b - s.a;
  if (sign(d.x) != 0) return Q((p.x - s.a.x) / d.x);
  return Q((p.y - s.a.y) / d.y);
}

void add_cut(std::vector<Q>& cuts, const Q& t) {
  if (sign(t) > 0 && t < 1) cuts.push_back(t);
}

// y-coordinate of a non-vertical piece at abscissa x.
Q y_at(const Piece& p, const Q& x) {
  return Q(p.a.y + (p.b.y - p.a.y) * (x - p.a.x) / (p.b.x - p.a.x));
}

bool region_covers(const OverlayRegion& r, const Point& p) {
  for (const Segment& ant : r.antennas)
    if (on_segment(p, ant.a, ant.b)) return true;
  if (point_on_ring(r.boundary, p)) return true;
  return parity_inside(r.boundary, p);
}

}  // namespace

Overlay::Overlay(const Polygon& clip, std::vector<OverlayRegion> regions)
    : clip_(clip), regions_(std::move(regions)) {
  boxes_.reserve(regions_.size());
  for (const OverlayRegion& r : regions_) {
    if (r.boundary.size() < 3)
      throw std::invalid_argument("overlay region ring needs >= 3 vertices");
    Box b = Box::of(r.boundary[0]);
    for (const Point& p : r.boundary) b.expand(p);
    for (const Segment& ant : r.antennas) {
      b.expand(ant.a);
      b.expand(ant.b);
    }
    boxes_.push_back(std::move(b));
  }
  build();
}

Q Overlay::weight_at(const Point& p) const {
  Q total(0);
  for (std::size_t k = 0; k < regions_.size(); ++k)
    if (boxes_[k].contains(p) && region_covers(regions_[k], p))
      total += regions_[k].weight;
  return total;
}

void Overlay::build() {
  std::vector<RawSeg> raw;
  auto push_ring = [&raw](const Ring& ring, bool clip, const Q& w) {
    std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % n];
      RawSeg rs;
      rs.s = Segment{a, b};
      rs.clip = clip;
      if (!clip) {
        int dx = sign(b.x - a.x);
        if (dx > 0)
          rs.delta = w;
        else if (dx < 0)
          rs.delta = Q(-w);
      }
      raw.push_back(std::move(rs));
    }
  };

  push_ring(clip_.outer, true, Q(0));
  for (const Ring& hole : clip_.holes) push_ring(hole, true, Q(0));
  for (const OverlayRegion& r : regions_) {
    push_ring(r.boundary, false, r.weight);
    for (const Segment& ant : r.antennas) {
      if (ant.degenerate()) continue;
      RawSeg rs;
      rs.s = ant;
      rs.antenna = r.weight;
      raw.push_back(std::move(rs));
    }
  }

  // Split every segment at every contact with another segment, so that the
  // resulting pieces meet only at shared endpoints.
  std::size_t m = raw.size();
  std::vector<std::vector<Q>> cuts(m);
  std::vector<Box> boxes;
  boxes.reserve(m);
  for (const RawSeg& rs : raw) boxes.push_back(Box::of(rs.s));

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!boxes[i].intersects(boxes[j])) continue;
      const Segment& si = raw[i].s;
      const Segment& sj = raw[j].s;
      if (collinear_overlap(si, sj)) {
        if (on_segment(sj.a, si.a, si.b)) add_cut(cuts[i], param_on(si, sj.a));
        if (on_segment(sj.b, si.a, si.b)) add_cut(cuts[i], param_on(si, sj.b));
        if (on_segment(si.a, sj.a, sj.b)) add_cut(cuts[j], param_on(sj, si.a));
        if (on_segment(si.b, sj.a, sj.b)) add_cut(cuts[j], param_on(sj, si.b));
        continue;
      }
      if (!segments_intersect(si, sj)) continue;
      if (segments_properly_cross(si, sj)) {
        auto x = line_intersection(si.a, si.b, sj.a, sj.b);
        if (!x) throw std::logic_error("proper crossing without intersection");
        add_cut(cuts[i], param_on(si, *x));
        add_cut(cuts[j], param_on(sj, *x));
        continue;
      }
      // Improper contact: an endpoint of one lies on the other.
      if (on_segment(sj.a, si.a, si.b)) add_cut(cuts[i], param_on(si, sj.a));
      if (on_segment(sj.b, si.a, si.b)) add_cut(cuts[i], param_on(si, sj.b));
      if (on_segment(si.a, sj.a, sj.b)) add_cut(cuts[j], param_on(sj, si.a));
      if (on_segment(si.b, sj.a, sj.b)) add_cut(cuts[j], param_on(sj, si.b));
    }
  }

  std::vector<Piece> pieces;    // non-vertical, a.x < b.x
  std::vector<Piece> vertical;  // a.y < b.y
  std::set<Point, PointLess> verts;

  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Q>& ts = cuts[i];
    ts.push_back(Q(0));
    ts.push_back(Q(1));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const Segment& s = raw[i].s;
    Point d = s.b - s.a;
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      Point p0 = s.a + ts[k] * d;
      Point p1 = s.a + ts[k + 1] * d;
      verts.insert(p0);
      verts.insert(p1);
      Piece pc{p0, p1, raw[i].delta, raw[i].clip, raw[i].antenna};
      if (sign(p1.x - p0.x) == 0) {
        if (p1.y < p0.y) std::swap(pc.a, pc.b);
        vertical.push_back(std::move(pc));
      } else {
        if (p1.x < p0.x) std::swap(pc.a, pc.b);
        pieces.push_back(std::move(pc));
      }
    }
  }

  // Vertical slab sweep. Slab boundaries are the distinct vertex abscissae;
  // every non-vertical piece either spans a slab completely or misses it.
  std::vector<Q> xs;
  xs.reserve(verts.size());
  for (const Point& p : verts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::size_t nslabs = xs.empty() ? 0 : xs.size() - 1;
  std::vector<std::vector<std::size_t>> slab_pieces(nslabs);
  for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
    auto lo = std::lower_bound(xs.begin(), xs.end(), pieces[pi].a.x);
    auto hi = std::lower_bound(xs.begin(), xs.end(), pieces[pi].b.x);
    for (auto it = lo; it != hi; ++it)
      slab_pieces[static_cast<std::size_t>(it - xs.begin())].push_back(pi);
  }

  struct Member {
    Q y;
    std::size_t piece;
  };

  for (std::size_t si = 0; si < nslabs; ++si) {
    Q midx((xs[si] + xs[si + 1]) / 2);
    std::vector<Member> members;
    members.reserve(slab_pieces[si].size());
    for (std::size_t pi : slab_pieces[si])
      members.push_back(Member{y_at(pieces[pi], midx), pi});
    std::sort(members.begin(), members.end(),
              [](const Member& l, const Member& r) { return l.y < r.y; });

    // Pieces with equal y at the slab midline share a supporting line across
    // the whole slab (a crossing inside the slab would have been split), so
    // they form one geometric arrangement edge.
    bool parity = false;  // inside the clip polygon
    Q below(0);           // face weight of the trapezoid under the cursor
    Q prev_y(0);
    std::size_t g = 0;
    while (g < members.size()) {
      std::size_t h = g;
      Q gy = members[g].y;
      Q delta(0), entering(0), antenna(0);
      bool clip_edge = false;
      while (h < members.size() && !(gy < members[h].y)) {
        const Piece& pc = pieces[members[h].piece];
        delta += pc.delta;
        if (sign(pc.delta) > 0) entering += pc.delta;
        antenna += pc.antenna;
        if (pc.clip) clip_edge = !clip_edge;
        ++h;
      }
      if (parity) {
        Q ry((prev_y + gy) / 2);
        cells_.push_back(OverlayCell{CellKind::Face, Point{midx, ry}, below});
      }
      // Edge cell: regions covering the face below stay on (closed sets),
      // regions entering here start here, antennas contribute directly.
      Q ew(below + entering + antenna);
      cells_.push_back(OverlayCell{CellKind::Edge, Point{midx, gy}, ew});
      below += delta;
      if (clip_edge) parity = !parity;
      prev_y = gy;
      g = h;
    }
    if (parity || sign(below) != 0)
      throw std::logic_error("overlay sweep did not close");
  }

  for (const Piece& pc : vertical) {
    Point mid{pc.a.x, Q((pc.a.y + pc.b.y) / 2)};
    cells_.push_back(OverlayCell{CellKind::Edge, mid, weight_at(mid)});
  }
  for (const Point& p : verts)
    cells_.push_back(OverlayCell{CellKind::Vertex, p, weight_at(p)});

  bool have_face = false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const OverlayCell& c = cells_[i];
    if (c.kind == CellKind::Face && (!have_face || c.weight < cells_[min_face_].weight)) {
      min_face_ = i;
      have_face = true;
    }
    if (cells_[max_cell_].weight < c.weight) max_cell_ = i;
  }
  if (!have_face) throw std::logic_error("overlay produced no face cells");
}

}  // namespace gallery::geom
