#pragma once

#include <map>
#include <vector>

#include "gallery/geom/point.hpp"

namespace gallery::model {

/// Append-only set of exact points with stable integer ids in insertion
/// order. Duplicates (after rational canonicalization) map to the first id.
class PointSet {
 public:
  /// Id of p, inserting it if new.
  int add(const geom::Point& p);

  /// Id of p, or -1 if absent.
  int find(const geom::Point& p) const;

  const geom::Point& operator[](int id) const {
    return pts_[static_cast<std::size_t>(id)];
  }
  int size() const { return static_cast<int>(pts_.size()); }
  const std::vector<geom::Point>& points() const { return pts_; }

 private:
  std::vector<geom::Point> pts_;
  std::map<geom::Point, int, geom::PointLess> index_;
};

}  // namespace gallery::model
