#include "gallery/model/points.hpp"

namespace gallery::model {

int PointSet::add(const geom::Point& p) {
  auto [it, fresh] = index_.try_emplace(p, static_cast<int>(pts_.size()));
  if (fresh) pts_.push_back(p);
  return it->second;
}

int PointSet::find(const geom::Point& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

}  // namespace gallery::model
