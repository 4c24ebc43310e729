#include "gallery/sep/separate.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

#include "gallery/geom/overlay.hpp"
#include "gallery/geom/visibility.hpp"

namespace gallery::sep {

namespace {

using geom::Overlay;
using geom::OverlayCell;
using geom::OverlayRegion;
using geom::Point;
using model::Bitset;
using model::CutConstraint;
using model::VisibilityMatrix;

/// Budget on witness tuples examined per set-cover call; keeps the search
/// lexicographic and bounded on degenerate inputs with huge tight pools.
constexpr long kMaxCombinations = 1'000'000;

/// Edge-cover premise certificates sweep a full overlay, so only this many
/// candidate cycles are certified per call.
constexpr int kMaxPremiseChecks = 16;

Q coverage_at(const VisibilityMatrix& vm, const std::vector<Q>& x, const Point& p) {
  Q total(0);
  for (int g = 0; g < vm.guard_count(); ++g) {
    if (sign(x[g]) <= 0) continue;
    if (geom::sees(vm.guard(g), p, vm.polygon())) total += x[g];
  }
  return total;
}

Q dual_value_at(const VisibilityMatrix& vm, const std::vector<CutConstraint>& cuts,
                const std::vector<Q>& y_wit, const std::vector<Q>& y_cut,
                const Point& p) {
  Q total(0);
  for (int w = 0; w < vm.witness_count(); ++w) {
    if (sign(y_wit[w]) <= 0) continue;
    if (geom::sees(p, vm.witness(w), vm.polygon())) total += y_wit[w];
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (sign(y_cut[k]) <= 0) continue;
    long a = model::cut_coefficient(cuts[k], vm, p);
    if (a != 0) total += Q(a) * y_cut[k];
  }
  return total;
}

/// Cheap first-tier candidates: ring vertices and edge midpoints.
std::vector<Point> candidate_pool(const geom::Polygon& poly) {
  std::vector<Point> pool = poly.vertices();
  for (const geom::Segment& e : poly.edges()) pool.push_back(e.midpoint());
  return pool;
}

struct Scored {
  Point p;
  Q value;
};

/// Deduplicate by point, order by value (ties broken lexicographically so the
/// result is reproducible), keep the strongest max_new.
std::vector<Point> finish_ranked(std::vector<Scored> found, bool ascending,
                                 int max_new) {
  std::map<Point, Q, geom::PointLess> uniq;
  for (Scored& s : found) uniq.emplace(s.p, s.value);
  std::vector<Scored> v;
  v.reserve(uniq.size());
  for (const auto& [p, val] : uniq) v.push_back({p, val});
  std::sort(v.begin(), v.end(), [&](const Scored& a, const Scored& b) {
    if (a.value != b.value) return ascending ? a.value < b.value : b.value < a.value;
    return geom::lex_less(a.p, b.p);
  });
  if (static_cast<int>(v.size()) > max_new) v.resize(max_new);
  std::vector<Point> out;
  out.reserve(v.size());
  for (Scored& s : v) out.push_back(s.p);
  return out;
}

std::vector<int> cycle_labels(int u, int v, int w, const std::vector<int>& parent,
                              const std::vector<int>& plabel,
                              const std::vector<int>& depth) {
  std::vector<int> ids = {w};
  int a = u;
  int b = v;
  while (depth[a] > depth[b]) {
    ids.push_back(plabel[a]);
    a = parent[a];
  }
  while (depth[b] > depth[a]) {
    ids.push_back(plabel[b]);
    b = parent[b];
  }
  while (a != b) {
    ids.push_back(plabel[a]);
    a = parent[a];
    ids.push_back(plabel[b]);
    b = parent[b];
  }
  return ids;
}

}  // namespace

std::vector<Point> separate_primal(const VisibilityMatrix& vm,
                                   const std::vector<Q>& x, int max_new) {
  if (static_cast<int>(x.size()) != vm.guard_count())
    throw std::invalid_argument("separate_primal: one weight per guard required");
  if (max_new <= 0) return {};
  const geom::Polygon& poly = vm.polygon();
  const Q one(1);

  std::vector<Scored> found;
  for (const Point& p : candidate_pool(poly)) {
    Q c = coverage_at(vm, x, p);
    if (c < one) found.push_back({p, c});
  }
  if (!found.empty()) return finish_ranked(std::move(found), true, max_new);

  // Exact tier: sweep the weighted overlay of the positive guards' regions.
  // Coverage is constant on every open cell and can only grow on a cell's
  // closure, so scanning all cell representatives finds every shortfall; an
  // empty scan certifies full coverage.
  std::vector<OverlayRegion> regions;
  for (int g = 0; g < vm.guard_count(); ++g)
    if (sign(x[g]) > 0)
      regions.push_back(geom::to_overlay_region(vm.guard_region(g), x[g]));
  Overlay ov(poly, std::move(regions));
  for (const OverlayCell& cell : ov.cells()) {
    if (cell.weight < one) {
      Q direct = coverage_at(vm, x, cell.rep);
      if (direct != cell.weight)
        throw std::logic_error("separate_primal: overlay and visibility oracle disagree");
      found.push_back({cell.rep, direct});
    }
  }
  return finish_ranked(std::move(found), true, max_new);
}

std::vector<Point> separate_dual(const VisibilityMatrix& vm,
                                 const std::vector<CutConstraint>& cuts,
                                 const std::vector<Q>& y_wit,
                                 const std::vector<Q>& y_cut, int max_new) {
  if (static_cast<int>(y_wit.size()) != vm.witness_count())
    throw std::invalid_argument("separate_dual: one dual per witness required");
  if (y_cut.size() != cuts.size())
    throw std::invalid_argument("separate_dual: one dual per cut required");
  if (max_new <= 0) return {};
  const geom::Polygon& poly = vm.polygon();
  const Q one(1);

  std::vector<Scored> found;
  for (const Point& p : candidate_pool(poly)) {
    Q v = dual_value_at(vm, cuts, y_wit, y_cut, p);
    if (v > one) found.push_back({p, v});
  }
  if (!found.empty()) return finish_ranked(std::move(found), false, max_new);

  // Exact tier. Cells must refine at every boundary the dual value can jump
  // across: positive-dual witness regions carry their dual as weight, and
  // witnesses that appear only inside positive-dual cuts join with weight
  // zero purely to split cells. Within an open cell every visibility
  // indicator is constant, hence so is the full dual value, and it can only
  // grow toward lower-dimensional cells; evaluating each representative is
  // therefore an exact maximization.
  std::vector<char> used(vm.witness_count(), 0);
  std::vector<OverlayRegion> regions;
  for (int w = 0; w < vm.witness_count(); ++w)
    if (sign(y_wit[w]) > 0) {
      used[w] = 1;
      regions.push_back(geom::to_overlay_region(vm.witness_region(w), y_wit[w]));
    }
  for (std::size_t k = 0; k < cuts.size(); ++k)
    if (sign(y_cut[k]) > 0)
      for (int w : cuts[k].witnesses)
        if (!used[w]) {
          used[w] = 1;
          regions.push_back(geom::to_overlay_region(vm.witness_region(w), Q(0)));
        }
  if (regions.empty()) return {};  // dual value is identically zero

  Overlay ov(poly, std::move(regions));
  for (const OverlayCell& cell : ov.cells()) {
    Q v = cell.weight;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      if (sign(y_cut[k]) <= 0) continue;
      long a = model::cut_coefficient(cuts[k], vm, cell.rep);
      if (a != 0) v += Q(a) * y_cut[k];
    }
    if (v > one) {
      Q direct = dual_value_at(vm, cuts, y_wit, y_cut, cell.rep);
      if (direct != v)
        throw std::logic_error("separate_dual: overlay and visibility oracle disagree");
      found.push_back({cell.rep, v});
    }
  }
  return finish_ranked(std::move(found), false, max_new);
}

std::vector<CutCandidate> separate_set_cover(const VisibilityMatrix& vm,
                                             const std::vector<Q>& x, bool quads,
                                             int max_cuts) {
  if (static_cast<int>(x.size()) != vm.guard_count())
    throw std::invalid_argument("separate_set_cover: one weight per guard required");
  if (max_cuts <= 0) return {};
  const int n_guards = vm.guard_count();
  const Q one(1);
  const Q two(2);

  Bitset mask(n_guards);
  std::vector<double> xd(n_guards, 0.0);
  for (int g = 0; g < n_guards; ++g)
    if (sign(x[g]) > 0) {
      mask.set(g);
      xd[g] = to_double(x[g]);
    }

  // Pool: witnesses whose covering row is tight. A violated row needs its
  // witnesses barely covered, so this is where candidates live.
  std::vector<int> pool;
  for (int w = 0; w < vm.witness_count(); ++w) {
    Bitset support = vm.guards_seeing(w) & mask;
    Q cov(0);
    for (std::size_t g = support.find_first(); g != Bitset::npos;
         g = support.find_next(g))
      cov += x[g];
    if (cov == one) pool.push_back(w);
  }
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    std::size_t ca = (vm.guards_seeing(a) & mask).count();
    std::size_t cb = (vm.guards_seeing(b) & mask).count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  const int p = static_cast<int>(pool.size());
  std::vector<Bitset> rb;
  rb.reserve(pool.size());
  for (int w : pool) rb.push_back(vm.guards_seeing(w) & mask);

  std::vector<CutCandidate> out;
  long budget = kMaxCombinations;
  auto consider = [&](const std::vector<int>& idx) {
    Bitset any = rb[idx[0]];
    Bitset all = rb[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) {
      any |= rb[idx[t]];
      all &= rb[idx[t]];
    }
    // Conservative floating prescreen; only clearly satisfied tuples skip
    // the exact recount.
    double lhs_d = 0.0;
    for (std::size_t g = any.find_first(); g != Bitset::npos; g = any.find_next(g))
      lhs_d += all.test(g) ? 2.0 * xd[g] : xd[g];
    if (lhs_d > 2.0 + 1e-6) return;
    Q lhs(0);
    for (std::size_t g = any.find_first(); g != Bitset::npos; g = any.find_next(g)) {
      lhs += x[g];
      if (all.test(g)) lhs += x[g];
    }
    if (lhs < two) {
      std::vector<int> ids;
      ids.reserve(idx.size());
      for (int t : idx) ids.push_back(pool[t]);
      std::sort(ids.begin(), ids.end());
      out.push_back({model::make_set_cover_cut(std::move(ids)), two - lhs});
    }
  };

  for (int i = 0; i < p && budget > 0; ++i)
    for (int j = i + 1; j < p && budget > 0; ++j)
      for (int k = j + 1; k < p && budget > 0; ++k) {
        --budget;
        consider({i, j, k});
      }
  if (quads)
    for (int i = 0; i < p && budget > 0; ++i)
      for (int j = i + 1; j < p && budget > 0; ++j)
        for (int k = j + 1; k < p && budget > 0; ++k)
          for (int l = k + 1; l < p && budget > 0; ++l) {
            --budget;
            consider({i, j, k, l});
          }

  std::sort(out.begin(), out.end(), [](const CutCandidate& a, const CutCandidate& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return a.cut.witnesses < b.cut.witnesses;
  });
  if (static_cast<int>(out.size()) > max_cuts) out.resize(max_cuts);

  // Independent recount straight from the visibility oracle before anything
  // is handed to the caller.
  for (const CutCandidate& cand : out) {
    Q lhs(0);
    for (std::size_t g = mask.find_first(); g != Bitset::npos; g = mask.find_next(g)) {
      long a = model::cut_coefficient(cand.cut, vm, vm.guard(static_cast<int>(g)));
      if (a != 0) lhs += Q(a) * x[g];
    }
    if (two - lhs != cand.violation)
      throw std::logic_error("separate_set_cover: violation does not re-verify");
  }
  return out;
}

std::vector<CutCandidate> separate_edge_cover(const VisibilityMatrix& vm,
                                              const std::vector<Q>& x, int max_cuts) {
  if (static_cast<int>(x.size()) != vm.guard_count())
    throw std::invalid_argument("separate_edge_cover: one weight per guard required");
  if (max_cuts <= 0) return {};
  const int n_guards = vm.guard_count();

  Bitset mask(n_guards);
  for (int g = 0; g < n_guards; ++g)
    if (sign(x[g]) > 0) mask.set(g);

  // Witnesses supported by exactly two positive guards become edges; an odd
  // cycle of such edges is a candidate witness set whose union of supports
  // carries too little weight.
  std::vector<std::vector<std::pair<int, int>>> adj(n_guards);
  for (int w = 0; w < vm.witness_count(); ++w) {
    Bitset s = vm.guards_seeing(w) & mask;
    if (s.count() != 2) continue;
    int g1 = static_cast<int>(s.find_first());
    int g2 = static_cast<int>(s.find_next(g1));
    adj[g1].push_back({g2, w});
    adj[g2].push_back({g1, w});
  }

  std::vector<int> color(n_guards, -1), parent(n_guards, -1),
      plabel(n_guards, -1), depth(n_guards, 0);
  std::set<std::vector<int>> dedup;
  std::vector<std::vector<int>> candidates;
  for (int root = 0; root < n_guards; ++root) {
    if (color[root] != -1 || adj[root].empty()) continue;
    color[root] = 0;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (const auto& [v, w] : adj[u]) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          parent[v] = u;
          plabel[v] = w;
          depth[v] = depth[u] + 1;
          bfs.push(v);
        } else if (color[v] == color[u]) {
          std::vector<int> ids = cycle_labels(u, v, w, parent, plabel, depth);
          std::sort(ids.begin(), ids.end());
          ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
          if (ids.size() % 2 == 0) continue;  // not a simple odd cycle
          if (candidates.size() >= 64) break;
          if (dedup.insert(ids).second) candidates.push_back(std::move(ids));
        }
      }
    }
  }

  std::vector<CutCandidate> out;
  int premise_checks = 0;
  for (const std::vector<int>& ids : candidates) {
    long rhs = (static_cast<long>(ids.size()) + 1) / 2;
    Bitset uni(n_guards);
    for (int w : ids) uni |= vm.guards_seeing(w);
    uni &= mask;
    Q lhs(0);
    for (std::size_t g = uni.find_first(); g != Bitset::npos; g = uni.find_next(g))
      lhs += x[g];
    if (!(lhs < Q(rhs))) continue;
    if (++premise_checks > kMaxPremiseChecks) break;
    if (!ec_premise_holds(vm, ids)) continue;
    CutConstraint cut = model::make_edge_cover_cut(ids);
    Q lhs2(0);
    for (std::size_t g = mask.find_first(); g != Bitset::npos; g = mask.find_next(g)) {
      long a = model::cut_coefficient(cut, vm, vm.guard(static_cast<int>(g)));
      if (a != 0) lhs2 += Q(a) * x[g];
    }
    if (lhs2 != lhs)
      throw std::logic_error("separate_edge_cover: violation does not re-verify");
    out.push_back({std::move(cut), Q(rhs) - lhs});
  }
  std::sort(out.begin(), out.end(), [](const CutCandidate& a, const CutCandidate& b) {
    if (a.violation != b.violation) return a.violation > b.violation;
    return a.cut.witnesses < b.cut.witnesses;
  });
  if (static_cast<int>(out.size()) > max_cuts) out.resize(max_cuts);
  return out;
}

bool ec_premise_holds(const VisibilityMatrix& vm, const std::vector<int>& witnesses) {
  for (int w : witnesses)
    if (w < 0 || w >= vm.witness_count())
      throw std::invalid_argument("ec_premise_holds: witness id out of range");
  if (witnesses.size() <= 2) return true;
  std::vector<OverlayRegion> regions;
  regions.reserve(witnesses.size());
  for (int w : witnesses)
    regions.push_back(geom::to_overlay_region(vm.witness_region(w)));
  Overlay ov(vm.polygon(), std::move(regions));
  return ov.max_cell().weight <= Q(2);
}

}  // namespace gallery::sep
