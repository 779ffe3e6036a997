#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "crdyn/specification.hpp"

namespace crdyn {

template <ClosedRelation R>
struct TracerWitness {
  typename R::point_type y{};
  typename R::cell_type cell{};
  TraceReport report;
};

/// Why one cell cannot contain a tracer.
///
/// `lower_bounds[e]` bounds entry e of `report` from below for every y in the
/// cell: entries whose exponent on y is positive are constant on the cell and
/// the bound is exact; entries with exponent 0 carry the infimum over the
/// cell. `report` is check_trace at `representative`, so it can be replayed.
template <ClosedRelation R>
struct CellFailure {
  typename R::cell_type cell{};
  typename R::point_type representative{};
  TraceReport report;
  std::vector<Scalar> lower_bounds;
  /// Entry with the largest lower bound.
  std::size_t failing = 0;
  /// No single bound exceeds eps, but no point of the cell meets all the
  /// y-dependent constraints at once.
  bool constraints_infeasible = false;

  const Scalar& worst() const { return lower_bounds.at(failing); }
  const TraceEntry& failing_entry() const { return report.entries.at(failing); }
};

template <ClosedRelation R>
struct NoTracer {
  std::vector<CellFailure<R>> cells;
};

template <ClosedRelation R>
using TracerSearch = std::variant<TracerWitness<R>, NoTracer<R>>;

template <ClosedRelation R>
bool found(const TracerSearch<R>& r) {
  return std::holds_alternative<TracerWitness<R>>(r);
}

namespace detail {

// Geometry hooks the generic search needs from each space.
std::optional<Scalar> first_point_in(const BoxRelation& f, const Cell& cell, const IntervalUnion& region);
std::optional<std::size_t> first_point_in(const FiniteRelation& f, std::size_t cell, const PointSet& region);
IntervalUnion cell_closure(const BoxRelation& f, const Cell& cell);
PointSet cell_closure(const FiniteRelation& f, std::size_t cell);
Scalar cell_sample(const BoxRelation& f, const Cell& cell);
std::size_t cell_sample(const FiniteRelation& f, std::size_t cell);
/// { y : d({y}, target) <= eps } under the given mode.
IntervalUnion zero_step_region(const BoxRelation& f, const IntervalUnion& target, const Scalar& eps, TraceMode mode);
PointSet zero_step_region(const FiniteRelation& f, const PointSet& target, const Scalar& eps, TraceMode mode);
/// inf over y in the cell of d({y}, target).
Scalar zero_step_infimum(const BoxRelation& f, const Cell& cell, const IntervalUnion& target, TraceMode mode);
Scalar zero_step_infimum(const FiniteRelation& f, std::size_t cell, const PointSet& target, TraceMode mode);

}  // namespace detail

/// Exact search for a tracer of the given demands. Iterates with positive
/// exponent are constant on each cell; the exponent-0 terms restrict y to an
/// explicit closed set that is intersected with the cell. Cells are visited
/// in order and the first feasible one yields the witness.
template <ClosedRelation R>
TracerSearch<R> search_tracer(const R& f, const typename R::automaton_type& automaton,
                              const std::vector<Demand<R>>& demands, const Scalar& eps, TraceMode mode) {
  NoTracer<R> failures;
  for (std::size_t c = 0; c < automaton.size(); ++c) {
    const auto& cell = automaton.cells[c];
    std::vector<Scalar> lower(demands.size());
    bool constant_part_ok = true;
    auto region = detail::cell_closure(f, cell);
    for (std::size_t d = 0; d < demands.size(); ++d) {
      const auto& demand = demands[d];
      if (demand.exponent == 0) {
        lower[d] = detail::zero_step_infimum(f, cell, *demand.target, mode);
        if (!region.empty()) region = region.intersect(detail::zero_step_region(f, *demand.target, eps, mode));
      } else {
        lower[d] = set_gap(f, automaton.at(c, demand.exponent), *demand.target, mode);
        if (eps < lower[d]) constant_part_ok = false;
      }
    }
    if (constant_part_ok) {
      if (auto y = detail::first_point_in(f, cell, region)) {
        auto report = evaluate_demands(f, demands, *y, eps, mode);
        if (!report.passed) throw std::logic_error("tracer search produced a failing witness");
        return TracerWitness<R>{*y, cell, std::move(report)};
      }
    }
    CellFailure<R> failure;
    failure.cell = cell;
    failure.representative = detail::cell_sample(f, cell);
    failure.report = evaluate_demands(f, demands, failure.representative, eps, mode);
    for (std::size_t d = 0; d < lower.size(); ++d) {
      if (lower[failure.failing] < lower[d]) failure.failing = d;
    }
    failure.lower_bounds = std::move(lower);
    failure.constraints_infeasible = !(eps < failure.worst());
    failures.cells.push_back(std::move(failure));
  }
  return failures;
}

template <ClosedRelation R>
TracerSearch<R> find_tracer(const R& f, const Specification<R>& s, const Scalar& eps, TraceMode mode) {
  return search_tracer(f, f.iterate_automaton(), demands_of(s), eps, mode);
}

template <ClosedRelation R>
TracerSearch<R> find_initial_tracer(const R& f, const InitialSpecification<R>& s, const Scalar& eps,
                                    TraceMode mode) {
  return search_tracer(f, f.iterate_automaton(), demands_of(s), eps, mode);
}

/// { y : z in F^{k_1}(y) }. Throws NoPreimageError when empty.
template <ClosedRelation R>
typename R::set_type lift_tracer(const R& f, const Specification<R>& s, const typename R::point_type& z) {
  const std::size_t k1 = s.segments.front().k;
  if (k1 == 0) return f.singleton(z);
  const auto automaton = f.iterate_automaton();
  typename R::set_type out;
  for (std::size_t c = 0; c < automaton.size(); ++c) {
    if (automaton.at(c, k1).contains(z)) out = out.unite(detail::cell_closure(f, automaton.cells[c]));
  }
  if (out.empty()) throw NoPreimageError();
  return out;
}

}  // namespace crdyn
