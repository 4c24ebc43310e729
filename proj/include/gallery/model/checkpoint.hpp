#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "gallery/geom/polygon.hpp"
#include "gallery/model/cuts.hpp"
#include "gallery/model/model.hpp"

namespace gallery::model {

/// Everything needed to rebuild a model: geometry, the two point families,
/// and the cuts. Visibility and the LP are derived data and are recomputed on
/// restore, so a checkpoint stays small and exact (all coordinates are
/// rational strings).
struct ModelState {
  geom::Polygon polygon;
  std::vector<geom::Point> guards;
  std::vector<geom::Point> witnesses;
  std::vector<CutConstraint> cuts;
};

nlohmann::json state_to_json(const ModelState& s);
ModelState state_from_json(const nlohmann::json& j);

template <typename T>
ModelState capture(const Model<T>& m) {
  return {m.polygon(), m.guards().points(), m.witnesses().points(), m.cuts()};
}

/// Rebuilds witnesses, then guards, then cuts; ids are preserved but LP row
/// order may differ from the original interleaving, which the row maps absorb.
template <typename T>
std::unique_ptr<Model<T>> restore(const ModelState& s) {
  auto m = std::make_unique<Model<T>>(s.polygon);
  for (const geom::Point& w : s.witnesses) m->add_witness(w);
  for (const geom::Point& g : s.guards) m->add_guard(g);
  for (const CutConstraint& c : s.cuts) m->add_cut(c);
  return m;
}

}  // namespace gallery::model
