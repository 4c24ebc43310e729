#pragma once

#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/model/points.hpp"
#include "gallery/model/visibility_matrix.hpp"

namespace gallery::model {

enum class CutKind {
  /// Over a small witness set S: guards seeing all of S count twice, guards
  /// seeing part of it once, and any cover must pay at least 2. One guard
  /// finishing S alone is exactly as good as two partial guards.
  SetCover,
  /// Over a witness set no polygon point sees more than two of: each guard
  /// counts once and k witnesses need at least ceil(k/2) guards.
  EdgeCover,
};

/// One extra covering row. The witness ids refer to the model's witness set;
/// coefficients for any guard (present or future) are recomputed from
/// visibility, so freshly generated columns pick up their cut entries.
struct CutConstraint {
  CutKind kind = CutKind::SetCover;
  std::vector<int> witnesses;
  long rhs = 2;
};

CutConstraint make_set_cover_cut(std::vector<int> witness_ids);
CutConstraint make_edge_cover_cut(std::vector<int> witness_ids);

/// Coefficient of an existing guard column, read from the matrix.
long cut_coefficient(const CutConstraint& cut, const VisibilityMatrix& vm, int guard);

/// Coefficient of an arbitrary candidate point, from the visibility oracle.
/// Must agree with the matrix route once the point becomes a column.
long cut_coefficient(const CutConstraint& cut, const geom::Polygon& poly,
                     const PointSet& witnesses, const geom::Point& p);

/// Point route against the matrix's witness store (same oracle, different
/// container); used when pricing candidate guard points during separation.
long cut_coefficient(const CutConstraint& cut, const VisibilityMatrix& vm,
                     const geom::Point& p);

}  // namespace gallery::model
