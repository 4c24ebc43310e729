#pragma once

#include <vector>

#include "gallery/geom/point.hpp"
#include "gallery/model/cuts.hpp"
#include "gallery/model/visibility_matrix.hpp"
#include "gallery/rational.hpp"

namespace gallery::sep {

/// Witness points whose coverage under the guard weights x falls below 1,
/// most deficient first, deduplicated, at most max_new. Complete: an empty
/// result is a certificate that every point of the polygon reaches coverage
/// 1. A cheap candidate pool (polygon vertices and edge midpoints) is tried
/// first; the exact weighted overlay of the positive guards' visibility
/// regions runs when the pool comes up empty, either finding interior
/// shortfalls or proving there are none.
std::vector<geom::Point> separate_primal(const model::VisibilityMatrix& vm,
                                         const std::vector<Q>& x, int max_new);

/// Guard points whose dual value exceeds 1: the witness-dual sum over what
/// the point sees plus every cut row's coefficient times its dual. Complete
/// in the same sense as separate_primal; the exact sweep overlays the
/// positive-dual witness regions (cut witnesses join as zero-weight regions
/// so cells refine correctly) and evaluates the full dual value at every cell
/// representative, which is where the maximum of this monotone cell-wise
/// constant function lives.
std::vector<geom::Point> separate_dual(const model::VisibilityMatrix& vm,
                                       const std::vector<model::CutConstraint>& cuts,
                                       const std::vector<Q>& y_wit,
                                       const std::vector<Q>& y_cut, int max_new);

struct CutCandidate {
  model::CutConstraint cut;
  Q violation;  // how far below the right-hand side the weights fall
};

/// Violated set-cover rows over witness triples (and quadruples when quads is
/// set) drawn from tight covering rows, strongest violation first. Heuristic:
/// finding nothing does not prove none exists; pool combinations are capped,
/// so very large pools are only sampled lexicographically.
std::vector<CutCandidate> separate_set_cover(const model::VisibilityMatrix& vm,
                                             const std::vector<Q>& x, bool quads,
                                             int max_cuts);

/// Violated edge-cover rows from odd cycles in the graph whose edges are
/// witnesses supported by exactly two positive guards. Every emitted cut has
/// its premise certified exactly (see ec_premise_holds), so the rows are
/// valid; like the set-cover search this is a heuristic, not a decision
/// procedure.
std::vector<CutCandidate> separate_edge_cover(const model::VisibilityMatrix& vm,
                                              const std::vector<Q>& x, int max_cuts);

/// Exact check that no point of the polygon sees three or more of the chosen
/// witnesses (grazing contact and sight along degenerate corridors count as
/// seeing). This is the condition that makes an edge-cover row valid.
bool ec_premise_holds(const model::VisibilityMatrix& vm,
                      const std::vector<int>& witnesses);

}  // namespace gallery::sep
