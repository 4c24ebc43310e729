#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/geom/visibility.hpp"

namespace gallery::model {

using Bitset = boost::dynamic_bitset<>;

/// Who-sees-whom between two growing point families inside a fixed polygon,
/// kept as bitsets in both directions. Rows are witnesses, columns guards;
/// indices follow insertion order and match the caller's ids. Incremental:
/// adding a point runs the visibility oracle only against the other family.
class VisibilityMatrix {
 public:
  explicit VisibilityMatrix(const geom::Polygon* poly) : poly_(poly) {}

  int add_guard(const geom::Point& g);
  int add_witness(const geom::Point& w);

  bool sees(int witness, int guard) const {
    return rows_[static_cast<std::size_t>(witness)].test(static_cast<std::size_t>(guard));
  }
  /// Guards covering a witness (one bit per guard column).
  const Bitset& guards_seeing(int witness) const {
    return rows_[static_cast<std::size_t>(witness)];
  }
  /// Witnesses covered by a guard (one bit per witness row).
  const Bitset& witnesses_seen(int guard) const {
    return cols_[static_cast<std::size_t>(guard)];
  }

  int guard_count() const { return static_cast<int>(cols_.size()); }
  int witness_count() const { return static_cast<int>(rows_.size()); }
  const geom::Point& guard(int id) const { return guards_[static_cast<std::size_t>(id)]; }
  const geom::Point& witness(int id) const { return witnesses_[static_cast<std::size_t>(id)]; }
  const geom::Polygon& polygon() const { return *poly_; }

  /// Visibility region of a point, computed on first use and cached for the
  /// matrix's lifetime. Not safe under concurrent first calls.
  const geom::VisibilityPolygon& guard_region(int id) const;
  const geom::VisibilityPolygon& witness_region(int id) const;

 private:
  const geom::Polygon* poly_;
  std::vector<geom::Point> guards_, witnesses_;
  std::vector<Bitset> rows_;  // witness -> guards
  std::vector<Bitset> cols_;  // guard -> witnesses
  mutable std::vector<std::unique_ptr<geom::VisibilityPolygon>> guard_regions_,
      witness_regions_;
};

}  // namespace gallery::model
