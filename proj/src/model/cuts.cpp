#include "gallery/model/cuts.hpp"

#include <stdexcept>
#include <utility>

#include "gallery/geom/visibility.hpp"

namespace gallery::model {

namespace {

long coefficient_from_count(const CutConstraint& cut, std::size_t seen) {
  if (cut.kind == CutKind::EdgeCover) return seen > 0 ? 1 : 0;
  if (seen == cut.witnesses.size()) return 2;
  return seen > 0 ? 1 : 0;
}

}  // namespace

CutConstraint make_set_cover_cut(std::vector<int> witness_ids) {
  if (witness_ids.size() < 2)
    throw std::invalid_argument("a set-cover cut needs at least two witnesses");
  return {CutKind::SetCover, std::move(witness_ids), 2};
}

CutConstraint make_edge_cover_cut(std::vector<int> witness_ids) {
  if (witness_ids.empty())
    throw std::invalid_argument("an edge-cover cut needs witnesses");
  long k = static_cast<long>(witness_ids.size());
  return {CutKind::EdgeCover, std::move(witness_ids), (k + 1) / 2};
}

long cut_coefficient(const CutConstraint& cut, const VisibilityMatrix& vm, int guard) {
  std::size_t seen = 0;
  for (int w : cut.witnesses)
    if (vm.sees(w, guard)) ++seen;
  return coefficient_from_count(cut, seen);
}

long cut_coefficient(const CutConstraint& cut, const geom::Polygon& poly,
                     const PointSet& witnesses, const geom::Point& p) {
  std::size_t seen = 0;
  for (int w : cut.witnesses)
    if (geom::sees(p, witnesses[w], poly)) ++seen;
  return coefficient_from_count(cut, seen);
}

long cut_coefficient(const CutConstraint& cut, const VisibilityMatrix& vm,
                     const geom::Point& p) {
  std::size_t seen = 0;
  for (int w : cut.witnesses)
    if (geom::sees(p, vm.witness(w), vm.polygon())) ++seen;
  return coefficient_from_count(cut, seen);
}

}  // namespace gallery::model
