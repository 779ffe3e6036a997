#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crdyn/interval_union.hpp"
#include "crdyn/iterate_automaton.hpp"

namespace crdyn {

enum class Projection { first, second };

/// One closed box A x B of a box relation.
struct Box {
  Interval domain;
  Interval range;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Maximal piece of the ambient interval on which the set of containing
/// domain intervals (the pattern) is constant. Either a single point or an
/// interval with independently open or closed ends.
struct Cell {
  Scalar lo;
  Scalar hi;
  bool lo_closed = true;
  bool hi_closed = true;
  std::vector<std::size_t> pattern;

  bool is_point() const { return lo == hi; }
  bool contains(const Scalar& x) const;
  /// The point itself, or the midpoint of the interval.
  Scalar sample() const;
  IntervalUnion closure() const { return IntervalUnion(Interval(lo, hi)); }
  /// e.g. "{1/2}" or "[0/1,1/2)".
  std::string to_string() const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellDecomposition {
  std::vector<Scalar> breakpoints;
  std::vector<Cell> cells;

  /// Index of the cell containing x (x must lie in the ambient interval).
  std::size_t locate(const Scalar& x) const;
};

/// Splits `ambient` at every endpoint of `sets` and merges neighbouring
/// pieces with identical membership patterns.
CellDecomposition decompose_by_membership(const Interval& ambient, const std::vector<Interval>& sets);

/// Closed relation on an interval given as a finite union of boxes.
class BoxRelation {
 public:
  using point_type = Scalar;
  using set_type = IntervalUnion;
  using cell_type = Cell;
  using automaton_type = IterateAutomaton<Cell, IntervalUnion>;

  BoxRelation(Interval ambient, std::vector<Box> boxes);

  const Interval& ambient() const { return ambient_; }
  const std::vector<Box>& boxes() const { return boxes_; }

  IntervalUnion full_set() const { return IntervalUnion(ambient_); }
  bool in_space(const Scalar& x) const { return ambient_.contains(x); }
  /// {x}; throws InvalidArgument if x is outside the ambient interval.
  IntervalUnion singleton(const Scalar& x) const;

  /// Union of B_i over the boxes whose A_i meets s. May be empty.
  IntervalUnion image(const IntervalUnion& s) const;
  /// F^j(x); F^0(x) = {x}. Throws EmptyImageError naming the first empty step.
  IntervalUnion iterate(const Scalar& x, std::size_t j) const;

  IntervalUnion project(Projection which) const;
  BoxRelation inverse() const;
  bool is_function() const;

  CellDecomposition cell_decomposition() const;
  /// Throws EmptyImageError if some cell's orbit dies.
  automaton_type iterate_automaton() const;

  Scalar set_distance(const IntervalUnion& a, const IntervalUnion& b) const { return crdyn::set_distance(a, b); }
  Scalar hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b) const {
    return crdyn::hausdorff_distance(a, b);
  }
  const Scalar& min_element(const IntervalUnion& s) const { return s.min(); }

  friend bool operator==(const BoxRelation&, const BoxRelation&) = default;

 private:
  Interval ambient_;
  std::vector<Box> boxes_;
};

}  // namespace crdyn
