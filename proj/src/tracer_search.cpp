#include "crdyn/tracer_search.hpp"

#include <algorithm>

namespace crdyn::detail {

std::optional<Scalar> first_point_in(const BoxRelation& /*f*/, const Cell& cell, const IntervalUnion& region) {
  const auto inside = region.intersect(cell.closure());
  for (const auto& part : inside.parts()) {
    if (cell.contains(part.lo)) return part.lo;
    // part.lo is an excluded endpoint of the cell; anything strictly inside
    // the part is in the cell.
    if (part.lo < part.hi) return midpoint(part.lo, part.hi);
  }
  return std::nullopt;
}

std::optional<std::size_t> first_point_in(const FiniteRelation& /*f*/, std::size_t cell, const PointSet& region) {
  if (region.contains(cell)) return cell;
  return std::nullopt;
}

IntervalUnion cell_closure(const BoxRelation& /*f*/, const Cell& cell) { return cell.closure(); }

PointSet cell_closure(const FiniteRelation& /*f*/, std::size_t cell) { return PointSet::single(cell); }

Scalar cell_sample(const BoxRelation& /*f*/, const Cell& cell) { return cell.sample(); }

std::size_t cell_sample(const FiniteRelation& /*f*/, std::size_t cell) { return cell; }

IntervalUnion zero_step_region(const BoxRelation& f, const IntervalUnion& target, const Scalar& eps, TraceMode mode) {
  if (mode == TraceMode::plain) return neighborhood(eps, target, f.ambient());
  // H({y}, T) = max(y - min T, max T - y).
  Scalar lo = std::max(target.max() - eps, f.ambient().lo);
  Scalar hi = std::min(target.min() + eps, f.ambient().hi);
  if (hi < lo) return {};
  return IntervalUnion(Interval(std::move(lo), std::move(hi)));
}

PointSet zero_step_region(const FiniteRelation& f, const PointSet& target, const Scalar& eps, TraceMode mode) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < f.size(); ++y) {
    if (set_gap(f, PointSet::single(y), target, mode) <= eps) out.push_back(y);
  }
  return PointSet(std::move(out));
}

Scalar zero_step_infimum(const BoxRelation& f, const Cell& cell, const IntervalUnion& target, TraceMode mode) {
  if (mode == TraceMode::plain) return f.set_distance(cell.closure(), target);
  // max(y - m, M - y) is minimized at the midpoint of [m, M], clipped to the cell.
  const Scalar& m = target.min();
  const Scalar& big = target.max();
  const Scalar y = std::clamp(midpoint(m, big), cell.lo, cell.hi);
  return std::max(y - m, big - y);
}

Scalar zero_step_infimum(const FiniteRelation& f, std::size_t cell, const PointSet& target, TraceMode mode) {
  return set_gap(f, PointSet::single(cell), target, mode);
}

}  // namespace crdyn::detail
