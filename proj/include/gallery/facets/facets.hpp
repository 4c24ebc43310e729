#pragma once

#include <string>
#include <vector>

#include "gallery/model/visibility_matrix.hpp"

namespace gallery::facets {

using model::Bitset;

/// A finite covering system: witness rows over a guard ground set. This is
/// all the combinatorial checkers need; geometry only enters through
/// cover_instance and is_full_circulant.
struct CoverInstance {
  int guards = 0;
  std::vector<Bitset> rows;  // per witness, the guards seeing it

  int witnesses() const { return static_cast<int>(rows.size()); }
};

CoverInstance cover_instance(const model::VisibilityMatrix& vm);

/// True iff every witness is seen by at least two guards, which is exactly
/// when the convex hull of the binary covers has full dimension.
bool is_full_dimensional(const CoverInstance& inst);

struct CheckResult {
  bool precondition_ok = true;
  bool facet = false;
  std::string detail;  // names the failed precondition or condition
};

/// Graph on the guards that see part but not all of the chosen witness set;
/// an edge joins two guards that jointly see all of it.
struct TwoCoverGraph {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> edges;
};

TwoCoverGraph two_cover_graph(const CoverInstance& inst,
                              const std::vector<int>& witness_set);

/// Facet test for the weight-2 covering row over witness_set (|set| >= 3).
/// Preconditions, reported distinctly from condition failures: full dimension
/// and maximality (no outside witness seen only by guards that see the set).
/// Verdict: facet iff every component of the two-cover graph has an odd cycle
/// and every blind guard's forced witnesses can be picked up by a single
/// all-seeing guard or a covering pair of partial guards.
CheckResult check_sc_facet(const CoverInstance& inst,
                           const std::vector<int>& witness_set);

/// Facet test for the edge-cover row over an odd cycle of witnesses, given in
/// cyclic order. The four conditions (in verdict order): no guard sees three
/// of them; any guard seeing two sees a successive pair; every successive
/// pair is seen; guards seeing any of them see nothing outside. The
/// conditions are sufficient but not necessary, so a false verdict does not
/// prove the row is no facet; the dimension oracle settles such cases.
CheckResult check_ec_facet(const CoverInstance& inst,
                           const std::vector<int>& cycle);

/// Facet status of the bound and witness rows.
struct TrivialReport {
  bool full_dimensional = false;
  std::vector<char> lower_bound_facet;  // per guard, the row x_g >= 0
  std::vector<char> upper_bound_facet;  // per guard, the row x_g <= 1
  std::vector<char> witness_row_facet;  // per witness, its covering row
};

TrivialReport check_trivial_facets(const CoverInstance& inst);

/// True iff guards and witnesses form the miss-exactly-one circulant pattern
/// under some matching (guard i sees all witnesses but the i-th) and every
/// point of the polygon sees at least k-1 of the k guards (checked exactly on
/// the guard-region overlay).
bool is_full_circulant(const model::VisibilityMatrix& vm);

/// Ground-truth oracles: exhaustive enumeration plus exact rank. Usable for
/// desk-scale instances only (guards <= 20 enforced).
std::vector<std::uint32_t> enumerate_covers(const CoverInstance& inst);

/// Affine dimension of the integral covers: -1 when infeasible, guards when
/// full-dimensional.
int polytope_dimension(const CoverInstance& inst);

/// One linear row, coeff . x >= rhs.
struct Inequality {
  std::vector<long> coeff;
  long rhs = 0;
};

/// Affine dimension of the covers satisfying the row with equality; -1 when
/// none is tight.
int face_dimension(const CoverInstance& inst, const Inequality& ineq);

/// The polytope is full-dimensional and the tight face has dimension
/// guards - 1.
bool oracle_facet(const CoverInstance& inst, const Inequality& ineq);

Inequality sc_inequality(const CoverInstance& inst, const std::vector<int>& witness_set);
Inequality ec_inequality(const CoverInstance& inst, const std::vector<int>& witness_set);
Inequality witness_inequality(const CoverInstance& inst, int witness);
Inequality lower_bound_inequality(int guards, int guard);
Inequality upper_bound_inequality(int guards, int guard);

}  // namespace gallery::facets
