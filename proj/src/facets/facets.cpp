#include "gallery/facets/facets.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "gallery/geom/overlay.hpp"
#include "gallery/geom/visibility.hpp"
#include "gallery/rational.hpp"

namespace gallery::facets {

namespace {

void validate_witnesses(const CoverInstance& inst, const std::vector<int>& ids,
                        const char* who) {
  for (int w : ids)
    if (w < 0 || w >= inst.witnesses())
      throw std::invalid_argument(std::string(who) + ": witness id out of range");
  std::vector<int> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(who) + ": repeated witness id");
}

/// Transposed incidence: per guard, the witnesses it sees.
std::vector<Bitset> columns(const CoverInstance& inst) {
  std::vector<Bitset> cols(inst.guards, Bitset(inst.rows.size()));
  for (std::size_t w = 0; w < inst.rows.size(); ++w)
    for (std::size_t g = inst.rows[w].find_first(); g != Bitset::npos;
         g = inst.rows[w].find_next(g))
      cols[g].set(w);
  return cols;
}

/// How many of the chosen witnesses each guard sees.
std::vector<int> seen_counts(const CoverInstance& inst, const std::vector<int>& ids) {
  std::vector<int> cnt(inst.guards, 0);
  for (int w : ids)
    for (std::size_t g = inst.rows[w].find_first(); g != Bitset::npos;
         g = inst.rows[w].find_next(g))
      ++cnt[g];
  return cnt;
}

/// Every connected component contains an odd cycle, i.e. none is bipartite.
/// An isolated node counts as a (trivially bipartite) component.
bool all_components_have_odd_cycles(const TwoCoverGraph& graph) {
  if (graph.nodes.empty()) return true;
  std::vector<std::vector<int>> adj(graph.nodes.size());
  std::vector<int> index_of;
  {
    int max_node = 0;
    for (int n : graph.nodes) max_node = std::max(max_node, n);
    index_of.assign(max_node + 1, -1);
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) index_of[graph.nodes[i]] = static_cast<int>(i);
  }
  for (const auto& [a, b] : graph.edges) {
    adj[index_of[a]].push_back(index_of[b]);
    adj[index_of[b]].push_back(index_of[a]);
  }
  std::vector<int> color(graph.nodes.size(), -1);
  for (std::size_t root = 0; root < graph.nodes.size(); ++root) {
    if (color[root] != -1) continue;
    bool odd = false;
    color[root] = 0;
    std::queue<int> bfs;
    bfs.push(static_cast<int>(root));
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = color[u] ^ 1;
          bfs.push(v);
        } else if (color[v] == color[u]) {
          odd = true;
        }
      }
    }
    if (!odd) return false;
  }
  return true;
}

int affine_dimension(const std::vector<std::uint32_t>& pts, int n) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Q>> basis;  // echelon rows of the difference space
  std::vector<int> pivot;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (static_cast<int>(basis.size()) == n) break;
    std::vector<Q> v(n);
    for (int j = 0; j < n; ++j) {
      long d = static_cast<long>((pts[i] >> j) & 1u) -
               static_cast<long>((pts[0] >> j) & 1u);
      v[j] = Q(d);
    }
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (sign(v[pivot[r]]) != 0) {
        Q f = v[pivot[r]] / basis[r][pivot[r]];
        for (int j = 0; j < n; ++j) v[j] -= f * basis[r][j];
      }
    for (int j = 0; j < n; ++j)
      if (sign(v[j]) != 0) {
        pivot.push_back(j);
        basis.push_back(std::move(v));
        break;
      }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

CoverInstance cover_instance(const model::VisibilityMatrix& vm) {
  CoverInstance inst;
  inst.guards = vm.guard_count();
  inst.rows.reserve(vm.witness_count());
  for (int w = 0; w < vm.witness_count(); ++w) inst.rows.push_back(vm.guards_seeing(w));
  return inst;
}

bool is_full_dimensional(const CoverInstance& inst) {
  for (const Bitset& row : inst.rows)
    if (row.count() < 2) return false;
  return true;
}

TwoCoverGraph two_cover_graph(const CoverInstance& inst,
                              const std::vector<int>& witness_set) {
  validate_witnesses(inst, witness_set, "two_cover_graph");
  const int k = static_cast<int>(witness_set.size());
  std::vector<int> cnt = seen_counts(inst, witness_set);
  TwoCoverGraph graph;
  for (int g = 0; g < inst.guards; ++g)
    if (cnt[g] > 0 && cnt[g] < k) graph.nodes.push_back(g);
  // Which of the chosen witnesses each partial guard sees, as a small mask.
  std::vector<unsigned> part(inst.guards, 0);
  for (int i = 0; i < k; ++i)
    for (std::size_t g = inst.rows[witness_set[i]].find_first(); g != Bitset::npos;
         g = inst.rows[witness_set[i]].find_next(g))
      part[g] |= 1u << i;
  const unsigned full = (k == 32) ? ~0u : (1u << k) - 1;
  for (std::size_t a = 0; a < graph.nodes.size(); ++a)
    for (std::size_t b = a + 1; b < graph.nodes.size(); ++b)
      if ((part[graph.nodes[a]] | part[graph.nodes[b]]) == full)
        graph.edges.push_back({graph.nodes[a], graph.nodes[b]});
  return graph;
}

CheckResult check_sc_facet(const CoverInstance& inst,
                           const std::vector<int>& witness_set) {
  validate_witnesses(inst, witness_set, "check_sc_facet");
  if (witness_set.size() < 3)
    return {false, false, "precondition: needs at least three witnesses"};
  if (!is_full_dimensional(inst))
    return {false, false, "precondition: polytope is not full-dimensional"};

  const int k = static_cast<int>(witness_set.size());
  std::vector<int> cnt = seen_counts(inst, witness_set);
  Bitset seeing_any(inst.guards);
  for (int g = 0; g < inst.guards; ++g)
    if (cnt[g] > 0) seeing_any.set(g);

  std::vector<char> in_set(inst.rows.size(), 0);
  for (int w : witness_set) in_set[w] = 1;
  for (int w = 0; w < inst.witnesses(); ++w)
    if (!in_set[w] && (inst.rows[w] & ~seeing_any).none())
      return {false, false,
              "precondition: not maximal, witness " + std::to_string(w) +
                  " is seen only by guards that see the set"};

  if (!all_components_have_odd_cycles(two_cover_graph(inst, witness_set)))
    return {true, false, "condition 1: a two-cover component has no odd cycle"};

  std::vector<Bitset> cols = columns(inst);
  Bitset blind(inst.guards);  // J0 guards
  for (int g = 0; g < inst.guards; ++g)
    if (cnt[g] == 0) blind.set(g);
  Bitset set_mask(inst.rows.size());
  for (int w : witness_set) set_mask.set(w);

  std::vector<int> partial, all_seeing;
  for (int g = 0; g < inst.guards; ++g) {
    if (cnt[g] == k) all_seeing.push_back(g);
    else if (cnt[g] > 0) partial.push_back(g);
  }

  for (std::size_t g = blind.find_first(); g != Bitset::npos; g = blind.find_next(g)) {
    // Witnesses only this blind guard can serve among the blind.
    Bitset forced(inst.rows.size());
    for (std::size_t w = cols[g].find_first(); w != Bitset::npos;
         w = cols[g].find_next(w)) {
      Bitset other_blind = inst.rows[w] & blind;
      other_blind.reset(g);
      if (other_blind.none()) forced.set(w);
    }
    if (forced.none()) continue;
    bool lifted = false;
    for (int g2 : all_seeing)
      if ((forced & ~cols[g2]).none()) {
        lifted = true;
        break;
      }
    if (!lifted) {
      Bitset need = forced | set_mask;
      for (std::size_t a = 0; a < partial.size() && !lifted; ++a)
        for (std::size_t b = a + 1; b < partial.size() && !lifted; ++b)
          if ((need & ~(cols[partial[a]] | cols[partial[b]])).none()) lifted = true;
    }
    if (!lifted)
      return {true, false,
              "condition 2: blind guard " + std::to_string(g) +
                  "'s forced witnesses cannot be re-covered"};
  }
  return {true, true, "facet"};
}

CheckResult check_ec_facet(const CoverInstance& inst, const std::vector<int>& cycle) {
  validate_witnesses(inst, cycle, "check_ec_facet");
  const int k = static_cast<int>(cycle.size());
  if (k < 3 || k % 2 == 0)
    return {false, false, "precondition: needs an odd cycle of at least three"};
  if (!is_full_dimensional(inst))
    return {false, false, "precondition: polytope is not full-dimensional"};

  Bitset cycle_mask(inst.rows.size());
  for (int w : cycle) cycle_mask.set(w);
  std::vector<Bitset> cols = columns(inst);

  // Positions inside the cycle per guard.
  std::vector<std::vector<int>> at(inst.guards);
  for (int i = 0; i < k; ++i)
    for (std::size_t g = inst.rows[cycle[i]].find_first(); g != Bitset::npos;
         g = inst.rows[cycle[i]].find_next(g))
      at[g].push_back(i);

  for (int g = 0; g < inst.guards; ++g) {
    if (at[g].size() > 2)
      return {true, false,
              "condition 1: guard " + std::to_string(g) + " sees three of the cycle"};
    if (at[g].size() == 2) {
      int i = at[g][0], j = at[g][1];
      bool successive = (i + 1) % k == j || (j + 1) % k == i;
      if (!successive)
        return {true, false,
                "condition 2: guard " + std::to_string(g) +
                    " sees a non-successive pair"};
    }
  }
  for (int i = 0; i < k; ++i) {
    Bitset both = inst.rows[cycle[i]] & inst.rows[cycle[(i + 1) % k]];
    if (both.none())
      return {true, false,
              "condition 3: successive pair " + std::to_string(i) + "," +
                  std::to_string((i + 1) % k) + " is unseen"};
  }
  for (int g = 0; g < inst.guards; ++g) {
    if (at[g].empty()) continue;
    if ((cols[g] & ~cycle_mask).any())
      return {true, false,
              "condition 4: guard " + std::to_string(g) +
                  " sees a witness outside the cycle"};
  }
  return {true, true, "facet"};
}

TrivialReport check_trivial_facets(const CoverInstance& inst) {
  TrivialReport report;
  report.full_dimensional = is_full_dimensional(inst);
  report.lower_bound_facet.assign(inst.guards, 0);
  report.upper_bound_facet.assign(inst.guards, 0);
  report.witness_row_facet.assign(inst.rows.size(), 0);

  for (int g = 0; g < inst.guards; ++g) {
    bool ok = true;
    for (const Bitset& row : inst.rows) {
      std::size_t others = row.count() - (row.test(g) ? 1 : 0);
      if (others < 2) {
        ok = false;
        break;
      }
    }
    report.lower_bound_facet[g] = ok ? 1 : 0;
    report.upper_bound_facet[g] = report.full_dimensional ? 1 : 0;
  }

  std::vector<Bitset> cols = columns(inst);
  for (int w = 0; w < inst.witnesses(); ++w) {
    const Bitset& support = inst.rows[w];
    bool ok = true;
    // No other witness may be strictly harder to cover.
    for (int w2 = 0; w2 < inst.witnesses() && ok; ++w2)
      if (w2 != w && inst.rows[w2].is_proper_subset_of(support)) ok = false;
    // Every outside guard's exclusively-held witnesses must be coverable
    // from inside the support.
    for (int g = 0; g < inst.guards && ok; ++g) {
      if (support.test(g)) continue;
      Bitset exclusive(inst.rows.size());
      for (std::size_t w2 = cols[g].find_first(); w2 != Bitset::npos;
           w2 = cols[g].find_next(w2)) {
        Bitset outside = inst.rows[w2] & ~support;
        outside.reset(g);
        if (outside.none()) exclusive.set(w2);
      }
      if (exclusive.none()) continue;
      bool lifted = false;
      for (std::size_t g2 = support.find_first(); g2 != Bitset::npos && !lifted;
           g2 = support.find_next(g2))
        if ((exclusive & ~cols[g2]).none()) lifted = true;
      if (!lifted) ok = false;
    }
    report.witness_row_facet[w] = ok ? 1 : 0;
  }
  return report;
}

bool is_full_circulant(const model::VisibilityMatrix& vm) {
  const int k = vm.guard_count();
  if (k < 3 || vm.witness_count() != k) return false;
  std::vector<char> missed(k, 0);
  for (int g = 0; g < k; ++g) {
    const Bitset& seen = vm.witnesses_seen(g);
    if (static_cast<int>(seen.count()) != k - 1) return false;
    int miss = -1;
    for (int w = 0; w < k; ++w)
      if (!seen.test(w)) miss = w;
    if (missed[miss]) return false;  // two guards blind to the same witness
    missed[miss] = 1;
  }
  std::vector<geom::OverlayRegion> regions;
  regions.reserve(k);
  for (int g = 0; g < k; ++g)
    regions.push_back(geom::to_overlay_region(
        geom::visibility_polygon(vm.polygon(), vm.guard(g))));
  geom::Overlay ov(vm.polygon(), std::move(regions));
  return ov.min_face().weight >= Q(k - 1);
}

std::vector<std::uint32_t> enumerate_covers(const CoverInstance& inst) {
  if (inst.guards < 0 || inst.guards > 20)
    throw std::invalid_argument("enumerate_covers: needs 0..20 guards");
  std::vector<std::uint32_t> row_bits(inst.rows.size(), 0);
  for (std::size_t w = 0; w < inst.rows.size(); ++w)
    for (std::size_t g = inst.rows[w].find_first(); g != Bitset::npos;
         g = inst.rows[w].find_next(g))
      row_bits[w] |= 1u << g;
  std::vector<std::uint32_t> covers;
  const std::uint32_t end = 1u << inst.guards;
  for (std::uint32_t x = 0; x < end; ++x) {
    bool ok = true;
    for (std::uint32_t row : row_bits)
      if ((row & x) == 0) {
        ok = false;
        break;
      }
    if (ok) covers.push_back(x);
  }
  return covers;
}

int polytope_dimension(const CoverInstance& inst) {
  return affine_dimension(enumerate_covers(inst), inst.guards);
}

int face_dimension(const CoverInstance& inst, const Inequality& ineq) {
  if (static_cast<int>(ineq.coeff.size()) != inst.guards)
    throw std::invalid_argument("face_dimension: one coefficient per guard");
  std::vector<std::uint32_t> tight;
  for (std::uint32_t x : enumerate_covers(inst)) {
    long lhs = 0;
    for (int g = 0; g < inst.guards; ++g)
      if ((x >> g) & 1u) lhs += ineq.coeff[g];
    if (lhs == ineq.rhs) tight.push_back(x);
  }
  return affine_dimension(tight, inst.guards);
}

bool oracle_facet(const CoverInstance& inst, const Inequality& ineq) {
  return polytope_dimension(inst) == inst.guards &&
         face_dimension(inst, ineq) == inst.guards - 1;
}

Inequality sc_inequality(const CoverInstance& inst, const std::vector<int>& witness_set) {
  validate_witnesses(inst, witness_set, "sc_inequality");
  std::vector<int> cnt = seen_counts(inst, witness_set);
  Inequality ineq;
  ineq.coeff.assign(inst.guards, 0);
  for (int g = 0; g < inst.guards; ++g)
    ineq.coeff[g] = cnt[g] == static_cast<int>(witness_set.size()) ? 2
                    : cnt[g] > 0                                   ? 1
                                                                   : 0;
  ineq.rhs = 2;
  return ineq;
}

Inequality ec_inequality(const CoverInstance& inst, const std::vector<int>& witness_set) {
  validate_witnesses(inst, witness_set, "ec_inequality");
  std::vector<int> cnt = seen_counts(inst, witness_set);
  Inequality ineq;
  ineq.coeff.assign(inst.guards, 0);
  for (int g = 0; g < inst.guards; ++g) ineq.coeff[g] = cnt[g] > 0 ? 1 : 0;
  ineq.rhs = (static_cast<long>(witness_set.size()) + 1) / 2;
  return ineq;
}

Inequality witness_inequality(const CoverInstance& inst, int witness) {
  if (witness < 0 || witness >= inst.witnesses())
    throw std::invalid_argument("witness_inequality: id out of range");
  Inequality ineq;
  ineq.coeff.assign(inst.guards, 0);
  for (std::size_t g = inst.rows[witness].find_first(); g != Bitset::npos;
       g = inst.rows[witness].find_next(g))
    ineq.coeff[g] = 1;
  ineq.rhs = 1;
  return ineq;
}

Inequality lower_bound_inequality(int guards, int guard) {
  Inequality ineq;
  ineq.coeff.assign(guards, 0);
  ineq.coeff.at(guard) = 1;
  ineq.rhs = 0;
  return ineq;
}

Inequality upper_bound_inequality(int guards, int guard) {
  Inequality ineq;
  ineq.coeff.assign(guards, 0);
  ineq.coeff.at(guard) = -1;
  ineq.rhs = -1;
  return ineq;
}

}  // namespace gallery::facets
