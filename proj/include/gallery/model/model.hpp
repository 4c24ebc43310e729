#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/lp/simplex.hpp"
#include "gallery/model/cuts.hpp"
#include "gallery/model/points.hpp"
#include "gallery/model/visibility_matrix.hpp"

namespace gallery::model {

/// The growing relaxation of a guarding instance: guard columns (unit cost,
/// bounds [0,1]), one covering row per witness, and extra cut rows, all
/// mirrored into an incremental LP so the basis survives growth. Guard ids
/// equal LP column indices; witness and cut rows are tracked by explicit row
/// maps because they interleave. Duplicate points are returned, not re-added.
template <typename T>
class Model {
 public:
  explicit Model(geom::Polygon poly) : poly_(std::move(poly)), vm_(&poly_) {}
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;

  int add_guard(const geom::Point& p) {
    int id = guards_.find(p);
    if (id >= 0) return id;
    id = guards_.add(p);
    vm_.add_guard(p);
    std::vector<std::pair<int, T>> coeffs;
    for (std::size_t w = 0; w < witness_rows_.size(); ++w)
      if (vm_.sees(static_cast<int>(w), id))
        coeffs.emplace_back(witness_rows_[w], T(1));
    for (std::size_t k = 0; k < cuts_.size(); ++k) {
      long a = cut_coefficient(cuts_[k], vm_, id);
      if (a != 0) coeffs.emplace_back(cut_rows_[k], T(a));
    }
    int col = lp_.add_variable(T(0), T(1), T(1), coeffs);
    if (col != id) throw std::logic_error("guard ids drifted from LP columns");
    return id;
  }

  int add_witness(const geom::Point& p) {
    int id = witnesses_.find(p);
    if (id >= 0) return id;
    id = witnesses_.add(p);
    vm_.add_witness(p);
    std::vector<std::pair<int, T>> coeffs;
    for (int g = 0; g < vm_.guard_count(); ++g)
      if (vm_.sees(id, g)) coeffs.emplace_back(g, T(1));
    witness_rows_.push_back(lp_.add_row(coeffs, T(1)));
    return id;
  }

  /// Index of the new cut. Coefficients cover the current guards; later
  /// guards get theirs in add_guard.
  int add_cut(CutConstraint cut) {
    for (int w : cut.witnesses)
      if (w < 0 || w >= witnesses_.size())
        throw std::invalid_argument("cut names an unknown witness");
    std::vector<std::pair<int, T>> coeffs;
    for (int g = 0; g < vm_.guard_count(); ++g) {
      long a = cut_coefficient(cut, vm_, g);
      if (a != 0) coeffs.emplace_back(g, T(a));
    }
    cut_rows_.push_back(lp_.add_row(coeffs, T(cut.rhs)));
    cuts_.push_back(std::move(cut));
    return static_cast<int>(cuts_.size()) - 1;
  }

  const geom::Polygon& polygon() const { return poly_; }
  const PointSet& guards() const { return guards_; }
  const PointSet& witnesses() const { return witnesses_; }
  const VisibilityMatrix& matrix() const { return vm_; }
  const std::vector<CutConstraint>& cuts() const { return cuts_; }
  lp::Simplex<T>& lp() { return lp_; }
  const lp::Simplex<T>& lp() const { return lp_; }
  int witness_row(int witness) const { return witness_rows_[static_cast<std::size_t>(witness)]; }
  int cut_row(int cut) const { return cut_rows_[static_cast<std::size_t>(cut)]; }

  /// Duals split back into per-witness and per-cut vectors.
  std::vector<T> witness_duals() const {
    std::vector<T> all = lp_.duals(), out;
    out.reserve(witness_rows_.size());
    for (int r : witness_rows_) out.push_back(all[static_cast<std::size_t>(r)]);
    return out;
  }
  std::vector<T> cut_duals() const {
    std::vector<T> all = lp_.duals(), out;
    out.reserve(cut_rows_.size());
    for (int r : cut_rows_) out.push_back(all[static_cast<std::size_t>(r)]);
    return out;
  }

 private:
  geom::Polygon poly_;
  VisibilityMatrix vm_;
  PointSet guards_, witnesses_;
  std::vector<CutConstraint> cuts_;
  std::vector<int> witness_rows_, cut_rows_;
  lp::Simplex<T> lp_;
};

}  // namespace gallery::model
