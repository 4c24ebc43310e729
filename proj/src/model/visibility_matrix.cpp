#include "gallery/model/visibility_matrix.hpp"

#include "gallery/geom/visibility.hpp"

namespace gallery::model {

int VisibilityMatrix::add_guard(const geom::Point& g) {
  int id = guard_count();
  guards_.push_back(g);
  guard_regions_.emplace_back();
  Bitset col(static_cast<std::size_t>(witness_count()));
  for (int w = 0; w < witness_count(); ++w) {
    bool v = geom::sees(g, witnesses_[static_cast<std::size_t>(w)], *poly_);
    rows_[static_cast<std::size_t>(w)].push_back(v);
    col.set(static_cast<std::size_t>(w), v);
  }
  cols_.push_back(std::move(col));
  return id;
}

const geom::VisibilityPolygon& VisibilityMatrix::guard_region(int id) const {
  auto& slot = guard_regions_[static_cast<std::size_t>(id)];
  if (!slot)
    slot = std::make_unique<geom::VisibilityPolygon>(
        geom::visibility_polygon(*poly_, guards_[static_cast<std::size_t>(id)]));
  return *slot;
}

const geom::VisibilityPolygon& VisibilityMatrix::witness_region(int id) const {
  auto& slot = witness_regions_[static_cast<std::size_t>(id)];
  if (!slot)
    slot = std::make_unique<geom::VisibilityPolygon>(geom::visibility_polygon(
        *poly_, witnesses_[static_cast<std::size_t>(id)]));
  return *slot;
}

int VisibilityMatrix::add_witness(const geom::Point& w) {
  int id = witness_count();
  witnesses_.push_back(w);
  witness_regions_.emplace_back();
  Bitset row(static_cast<std::size_t>(guard_count()));
  for (int g = 0; g < guard_count(); ++g) {
    bool v = geom::sees(guards_[static_cast<std::size_t>(g)], w, *poly_);
    row.set(static_cast<std::size_t>(g), v);
    cols_[static_cast<std::size_t>(g)].push_back(v);
  }
  rows_.push_back(std::move(row));
  return id;
}

}  // namespace gallery::model
