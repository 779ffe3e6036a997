#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crdyn/box_relation.hpp"
#include "crdyn/finite_space.hpp"
#include "crdyn/iterate_automaton.hpp"

namespace crdyn {

/// Relation on a finite metric space given by its adjacency matrix:
/// (x, y) in F iff adjacency[x][y].
class FiniteRelation {
 public:
  using point_type = std::size_t;
  using set_type = PointSet;
  using cell_type = std::size_t;
  using automaton_type = IterateAutomaton<std::size_t, PointSet>;

  FiniteRelation(FiniteMetricSpace space, std::vector<std::vector<bool>> adjacency);
  static FiniteRelation from_pairs(FiniteMetricSpace space,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return space_.size(); }
  const FiniteMetricSpace& space() const { return space_; }
  const std::vector<std::vector<bool>>& adjacency() const { return adjacency_; }
  bool related(std::size_t x, std::size_t y) const { return adjacency_[x][y]; }

  PointSet full_set() const { return PointSet::all(size()); }
  bool in_space(std::size_t x) const { return x < size(); }
  PointSet singleton(std::size_t x) const;

  PointSet image(const PointSet& s) const;
  PointSet iterate(std::size_t x, std::size_t j) const;

  PointSet project(Projection which) const;
  FiniteRelation inverse() const;
  bool is_function() const;
  /// Every point is its own cell.
  automaton_type iterate_automaton() const;

  Scalar set_distance(const PointSet& a, const PointSet& b) const { return crdyn::set_distance(space_, a, b); }
  Scalar hausdorff_distance(const PointSet& a, const PointSet& b) const {
    return crdyn::hausdorff_distance(space_, a, b);
  }
  std::size_t min_element(const PointSet& s) const { return s.min(); }

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  FiniteMetricSpace space_;
  std::vector<std::vector<bool>> adjacency_;
};

}  // namespace crdyn
