#include "gallery/bench/bench.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gallery/geom/segment.hpp"

namespace gallery::bench {

std::string to_string(PolygonClass c) {
  switch (c) {
    case PolygonClass::Koch: return "koch";
    case PolygonClass::Orthogonal: return "orthogonal";
    case PolygonClass::Simple: return "simple";
    case PolygonClass::Spike: return "spike";
  }
  return "koch";
}

PolygonClass parse_class(const std::string& s) {
  if (s == "koch") return PolygonClass::Koch;
  if (s == "orthogonal") return PolygonClass::Orthogonal;
  if (s == "simple") return PolygonClass::Simple;
  if (s == "spike") return PolygonClass::Spike;
  throw std::invalid_argument("unknown polygon class: " + s);
}

namespace {

using Rng = std::mt19937_64;

/// Inclusive uniform draw by modulo; bias is irrelevant here and the result
/// depends only on the engine's specified output stream.
long pick(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Q round_q(const Q& v) {
  Q shifted = v + Q(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  return Q(out);
}

long round_long(const Q& v) {
  return static_cast<long>(round_q(v).get_num().get_si());
}

geom::Point round_point(const Q& x, const Q& y) {
  return {round_q(x), round_q(y)};
}

bool ring_valid(const geom::Ring& ring) {
  geom::Polygon p{ring, {}};
  try {
    p.validate();
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

// Triangle with randomized bump replacements: an edge ab becomes
// a, p1, apex, p2, b where p1 and p2 sit near the thirds of ab and the apex
// juts out (or in) perpendicular to the edge. Each accepted bump adds three
// vertices; rejected bumps (self-intersection, degenerate rounding) are
// redrawn.
geom::Ring koch_ring(int target, Rng& rng, const GenKnobs& k) {
  const long s = 1 << 13;
  geom::Ring ring = {{Q(0), Q(0)}, {Q(s), Q(0)}, {Q(s / 2), Q(s)}};
  int rejects = 0;
  while (static_cast<int>(ring.size()) + 3 <= target + 1) {
    if (rejects > 400) return {};
    int n = static_cast<int>(ring.size());
    int i = static_cast<int>(pick(rng, 0, n - 1));
    const geom::Point& a = ring[static_cast<std::size_t>(i)];
    const geom::Point& b = ring[static_cast<std::size_t>((i + 1) % n)];
    Q dx = b.x - a.x, dy = b.y - a.y;
    geom::Point p1 = round_point(a.x + dx / 3, a.y + dy / 3);
    geom::Point p2 = round_point(a.x + dx * 2 / 3, a.y + dy * 2 / 3);
    Q h = Q(pick(rng, k.koch_bump_min, k.koch_bump_max), 5);
    if (pick(rng, 0, 1) == 0) h = -h;
    Q mx = (p1.x + p2.x) / 2, my = (p1.y + p2.y) / 2;
    geom::Point apex = round_point(mx - dy * h, my + dx * h);
    geom::Ring next = ring;
    next.insert(next.begin() + i + 1, {p1, apex, p2});
    if (!ring_valid(next)) {
      ++rejects;
      continue;
    }
    ring = std::move(next);
  }
  return ring;
}

// Floorplan-like outline: vertical columns with random widths; every column
// spans from a negative bottom height to a positive top height, so all
// columns share the band around y = 0 and the outline is simple by
// construction. Consecutive heights are forced distinct to avoid collinear
// corners. A leftover of two vertices is absorbed by splitting one column's
// top edge into two levels.
geom::Ring ortho_ring(int target, Rng& rng, const GenKnobs& k) {
  int cols = target / 4;
  bool notch = target - 4 * cols >= 2;

  std::vector<long> xs{0};
  for (int i = 0; i < cols; ++i)
    xs.push_back(xs.back() + pick(rng, 2, k.ortho_gap_max));
  auto heights = [&](long sign) {
    std::vector<long> h;
    for (int i = 0; i < cols; ++i) {
      long v = pick(rng, 1, k.ortho_height_max);
      while (!h.empty() && v == h.back()) v = pick(rng, 1, k.ortho_height_max);
      h.push_back(sign * v);
    }
    return h;
  };
  std::vector<long> bottom = heights(-1);
  std::vector<long> top = heights(1);

  // The top profile may use a finer partition than the bottom one.
  std::vector<long> top_xs = xs;
  if (notch) {
    int c = static_cast<int>(pick(rng, 0, cols - 1));
    long split = xs[static_cast<std::size_t>(c)] +
                 pick(rng, 1, xs[static_cast<std::size_t>(c) + 1] -
                                  xs[static_cast<std::size_t>(c)] - 1);
    long level = pick(rng, 1, k.ortho_height_max);
    while (level == top[static_cast<std::size_t>(c)] ||
           (c + 1 < cols && level == top[static_cast<std::size_t>(c) + 1]))
      ++level;
    top_xs.insert(top_xs.begin() + c + 1, split);
    top.insert(top.begin() + c + 1, level);
  }

  geom::Ring ring;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    ring.push_back({Q(xs[i]), Q(bottom[i])});
    ring.push_back({Q(xs[i + 1]), Q(bottom[i])});
  }
  for (std::size_t i = top.size(); i-- > 0;) {
    ring.push_back({Q(top_xs[i + 1]), Q(top[i])});
    ring.push_back({Q(top_xs[i]), Q(top[i])});
  }
  return ring;
}

// Random vertex cloud untangled by 2-opt: while two non-adjacent edges
// properly cross, reversing the chain between them strictly shortens the
// tour, so the loop terminates. Touching or collinear contacts are not
// fixable this way and surface as validation failures, triggering a fresh
// attempt.
geom::Ring simple_ring(int target, Rng& rng) {
  const long box = 20L * target;
  std::set<std::pair<long, long>> used;
  std::vector<std::pair<long, long>> pts;
  while (static_cast<int>(pts.size()) < target) {
    std::pair<long, long> p{pick(rng, 0, box), pick(rng, 0, box)};
    if (used.insert(p).second) pts.push_back(p);
  }
  for (std::size_t i = pts.size(); i > 1; --i)
    std::swap(pts[i - 1], pts[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(i) - 1))]);

  geom::Ring ring;
  ring.reserve(pts.size());
  for (const auto& [x, y] : pts) ring.push_back({Q(x), Q(y)});

  const std::size_t n = ring.size();
  auto edge = [&](std::size_t i) {
    return geom::Segment{ring[i], ring[(i + 1) % n]};
  };
  for (int swaps = 0; swaps < 4000; ++swaps) {
    bool crossed = false;
    for (std::size_t i = 0; i + 1 < n && !crossed; ++i)
      for (std::size_t j = i + 2; j < n && !crossed; ++j) {
        if (i == 0 && j + 1 == n) continue;  // adjacent around the wrap
        if (!geom::segments_properly_cross(edge(i), edge(j))) continue;
        std::reverse(ring.begin() + static_cast<long>(i) + 1,
                     ring.begin() + static_cast<long>(j) + 1);
        crossed = true;
      }
    if (!crossed) break;
  }
  if (geom::signed_area2(ring) < 0) std::reverse(ring.begin(), ring.end());
  // Drop any collinear middle vertices the untangling left behind.
  for (std::size_t i = 0; i < ring.size() && ring.size() > 3;) {
    std::size_t m = ring.size();
    const geom::Point& a = ring[(i + m - 1) % m];
    const geom::Point& b = ring[i];
    const geom::Point& c = ring[(i + 1) % m];
    Q cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (sign(cross) == 0)
      ring.erase(ring.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return ring;
}

struct Vec {
  long x, y;
};

// CCW angular order starting from the positive x axis, exact.
bool angle_less(const Vec& u, const Vec& v) {
  auto half = [](const Vec& w) { return w.y < 0 || (w.y == 0 && w.x < 0); };
  if (half(u) != half(v)) return half(u) < half(v);
  long long cross = static_cast<long long>(u.x) * v.y -
                    static_cast<long long>(u.y) * v.x;
  return cross > 0;
}

// Convex body from angle-sorted random edge vectors, then thin triangular
// spikes pointing outward from random edges and small clockwise triangular
// holes near the centroid. Spikes on a convex body cannot re-enter it, but
// neighboring spikes or holes may still collide; validation failures redraw
// the whole polygon.
geom::Polygon spike_polygon(int target, Rng& rng, const GenKnobs& k) {
  int holes = 0;
  long roll = pick(rng, 1, k.hole_weight0 + k.hole_weight1 + k.hole_weight2);
  if (roll > k.hole_weight0) holes = roll > k.hole_weight0 + k.hole_weight1 ? 2 : 1;
  int body = target - 3 * holes;
  int base = std::max(6, 2 * body / 5);
  int spikes = (body - base) / 3;
  if (spikes > base) spikes = base;
  if (spikes < 0) spikes = 0;
  base = body - 3 * spikes;

  std::vector<Vec> vecs;
  long sx = 0, sy = 0;
  for (int i = 0; i + 1 < base; ++i) {
    Vec v{0, 0};
    do {
      v = {pick(rng, -40, 40), pick(rng, -40, 40)};
    } while (v.x == 0 && v.y == 0);
    vecs.push_back(v);
    sx += v.x;
    sy += v.y;
  }
  vecs.push_back({-sx, -sy});
  if (vecs.back().x == 0 && vecs.back().y == 0) return {};
  // Two vectors pointing the same way would make collinear corners.
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      long long cross = static_cast<long long>(vecs[i].x) * vecs[j].y -
                        static_cast<long long>(vecs[i].y) * vecs[j].x;
      long long dot = static_cast<long long>(vecs[i].x) * vecs[j].x +
                      static_cast<long long>(vecs[i].y) * vecs[j].y;
      if (cross == 0 && dot > 0) return {};
    }
  std::sort(vecs.begin(), vecs.end(), angle_less);

  const long scale = 60;
  geom::Ring ring;
  long cx = 0, cy = 0;
  for (std::size_t i = 0; i + 1 < vecs.size(); ++i) {
    cx += vecs[i].x * scale;
    cy += vecs[i].y * scale;
    ring.push_back({Q(cx), Q(cy)});
  }
  ring.push_back({Q(0), Q(0)});
  std::rotate(ring.begin(), ring.end() - 1, ring.end());

  geom::Box bb{ring[0].x, ring[0].y, ring[0].x, ring[0].y};
  long sumx = 0, sumy = 0;
  for (const geom::Point& p : ring) {
    bb.xmin = std::min(bb.xmin, p.x);
    bb.xmax = std::max(bb.xmax, p.x);
    bb.ymin = std::min(bb.ymin, p.y);
    bb.ymax = std::max(bb.ymax, p.y);
    sumx += static_cast<long>(p.x.get_num().get_si());
    sumy += static_cast<long>(p.y.get_num().get_si());
  }
  long extent = std::min(round_long(bb.xmax - bb.xmin),
                         round_long(bb.ymax - bb.ymin));

  // Spikes, edges chosen without repeats, applied right to left so earlier
  // insertions do not shift pending edge indices.
  std::vector<int> order(static_cast<std::size_t>(base));
  for (int i = 0; i < base; ++i) order[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(i) - 1))]);
  std::vector<int> chosen(order.begin(), order.begin() + spikes);
  std::sort(chosen.rbegin(), chosen.rend());
  for (int e : chosen) {
    const geom::Point a = ring[static_cast<std::size_t>(e)];
    const geom::Point b = ring[static_cast<std::size_t>(e + 1) % ring.size()];
    Q dx = b.x - a.x, dy = b.y - a.y;
    long t1 = pick(rng, 25, 45), width = pick(rng, 8, 15);
    geom::Point p1 = round_point(a.x + dx * t1 / 100, a.y + dy * t1 / 100);
    geom::Point p2 = round_point(a.x + dx * (t1 + width) / 100,
                                 a.y + dy * (t1 + width) / 100);
    Q len = Q(k.spike_len_pct * pick(rng, 60, 140), 10000);
    geom::Point tip = round_point((p1.x + p2.x) / 2 + dy * len,
                                  (p1.y + p2.y) / 2 - dx * len);
    ring.insert(ring.begin() + e + 1, {p1, tip, p2});
  }

  geom::Polygon poly{std::move(ring), {}};
  long ccx = sumx / base, ccy = sumy / base;
  long spread = std::max(extent / 8, 4L);
  long radius = std::max(extent / 16, 3L);
  for (int j = 0; j < holes; ++j) {
    long hx = ccx + pick(rng, -spread, spread);
    long hy = ccy + pick(rng, -spread, spread);
    long j1 = pick(rng, 0, radius / 4 + 1), j2 = pick(rng, 0, radius / 4 + 1);
    geom::Ring hole = {{Q(hx + radius), Q(hy + j1)},
                       {Q(hx - radius / 2 - j2), Q(hy + radius)},
                       {Q(hx - radius / 2 + j1), Q(hy - radius - j2)}};
    if (geom::signed_area2(hole) > 0) std::reverse(hole.begin(), hole.end());
    poly.holes.push_back(std::move(hole));
  }
  return poly;
}

bool count_ok(const geom::Polygon& poly, int target) {
  long n = static_cast<long>(poly.vertex_count());
  return 10 * n >= 9 * target && 10 * n <= 11 * target;
}

}  // namespace

geom::Polygon generate(const GenSpec& spec) { return generate(spec, GenKnobs{}); }

geom::Polygon generate(const GenSpec& spec, const GenKnobs& knobs) {
  if (spec.target_vertices < 12)
    throw std::invalid_argument("generation target must be at least 12 vertices");
  for (std::uint64_t attempt = 0; attempt < 40; ++attempt) {
    // Reseed per attempt so one bad draw cannot poison every retry.
    Rng rng(spec.seed * 1000003 + attempt);
    geom::Polygon poly;
    switch (spec.cls) {
      case PolygonClass::Koch:
        poly = {koch_ring(spec.target_vertices, rng, knobs), {}};
        break;
      case PolygonClass::Orthogonal:
        poly = {ortho_ring(spec.target_vertices, rng, knobs), {}};
        break;
      case PolygonClass::Simple:
        poly = {simple_ring(spec.target_vertices, rng), {}};
        break;
      case PolygonClass::Spike:
        poly = spike_polygon(spec.target_vertices, rng, knobs);
        break;
    }
    if (poly.outer.size() < 3 || !count_ok(poly, spec.target_vertices)) continue;
    try {
      poly.validate();
    } catch (const std::invalid_argument&) {
      continue;
    }
    return poly;
  }
  throw std::runtime_error("generation failed after bounded retries: " +
                           to_string(spec.cls) + " " +
                           std::to_string(spec.target_vertices) + " seed " +
                           std::to_string(spec.seed));
}

std::optional<double> relative_gap(long lb, const std::optional<long>& ub) {
  if (!ub || lb <= 0) return std::nullopt;
  return static_cast<double>(*ub - lb) / static_cast<double>(lb);
}

BatchResult run_batch(const std::vector<GenSpec>& specs,
                      const std::vector<NamedConfig>& configs) {
  BatchResult out;
  for (const GenSpec& spec : specs)
    for (const NamedConfig& nc : configs) {
      RunRow row;
      row.spec = spec;
      row.config = nc.name;
      try {
        geom::Polygon poly = generate(spec);
        engine::Result res = engine::solve(poly, nc.config);
        row.solved = res.solved();
        row.lb = res.lb;
        row.ub = res.ub;
        row.time_s = res.log.empty() ? 0.0 : res.log.back().t;
        row.log = std::move(res.log);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      out.rows.push_back(std::move(row));
    }
  return out;
}

std::string BatchResult::csv() const {
  std::ostringstream os;
  os << "class,size,seed,config,solved,lb,ub,gap,time_s\n";
  for (const RunRow& r : rows) {
    os << to_string(r.spec.cls) << ',' << r.spec.target_vertices << ','
       << r.spec.seed << ',' << r.config << ',' << (r.solved ? 1 : 0) << ','
       << r.lb << ',';
    if (r.ub) os << *r.ub;
    os << ',';
    std::optional<double> gap = relative_gap(r.lb, r.ub);
    if (gap)
      os << *gap;
    else
      os << "inf";
    os << ',' << r.time_s << '\n';
  }
  return os.str();
}

namespace {

/// Nearest-rank quartile k of gaps sorted ascending with infinities last.
std::optional<double> quartile(std::vector<std::optional<double>> gaps, int k) {
  if (gaps.empty()) return std::nullopt;
  std::sort(gaps.begin(), gaps.end(),
            [](const std::optional<double>& a, const std::optional<double>& b) {
              if (a && b) return *a < *b;
              return a.has_value() && !b.has_value();
            });
  return gaps[static_cast<std::size_t>(k) * (gaps.size() - 1) / 4];
}

}  // namespace

std::vector<TableRow> BatchResult::table() const {
  std::vector<TableRow> out;
  std::vector<std::vector<std::optional<double>>> gaps;
  for (const RunRow& r : rows) {
    std::size_t cell = out.size();
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].cls == r.spec.cls && out[i].size == r.spec.target_vertices &&
          out[i].config == r.config) {
        cell = i;
        break;
      }
    if (cell == out.size()) {
      out.push_back({r.spec.cls, r.spec.target_vertices, r.config, 0, 0.0, {}});
      gaps.emplace_back();
    }
    ++out[cell].instances;
    if (r.solved) out[cell].solved_pct += 1.0;
    gaps[cell].push_back(relative_gap(r.lb, r.ub));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].solved_pct = 100.0 * out[i].solved_pct / out[i].instances;
    out[i].median_gap = quartile(gaps[i], 2);
  }
  return out;
}

nlohmann::json BatchResult::gap_series(int samples) const {
  if (samples < 2) samples = 2;
  std::vector<std::string> names;
  for (const RunRow& r : rows)
    if (std::find(names.begin(), names.end(), r.config) == names.end())
      names.push_back(r.config);

  nlohmann::json series = nlohmann::json::array();
  for (const std::string& name : names) {
    std::vector<const RunRow*> group;
    double horizon = 0.0;
    for (const RunRow& r : rows)
      if (r.config == name) {
        group.push_back(&r);
        if (!r.log.empty()) horizon = std::max(horizon, r.log.back().t);
      }
    nlohmann::json entry;
    entry["config"] = name;
    entry["samples"] = nlohmann::json::array();
    for (int s = 0; s < samples; ++s) {
      double t = horizon * s / (samples - 1);
      std::vector<std::optional<double>> gaps;
      for (const RunRow* r : group) {
        long lb = 0;
        std::optional<long> ub;
        for (const engine::Event& e : r->log) {
          if (e.t > t) break;
          lb = e.lb;
          ub = e.ub;
        }
        gaps.push_back(relative_gap(lb, ub));
      }
      nlohmann::json sample;
      sample["t"] = t;
      for (int k = 0; k <= 4; ++k) {
        std::optional<double> q = quartile(gaps, k);
        sample["q" + std::to_string(k)] =
            q ? nlohmann::json(*q) : nlohmann::json(nullptr);
      }
      entry["samples"].push_back(std::move(sample));
    }
    series.push_back(std::move(entry));
  }
  return series;
}

}  // namespace gallery::bench
