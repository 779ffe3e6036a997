#pragma once

#include <string>
#include <vector>

#include "crdyn/scalar.hpp"

namespace crdyn {

/// Closed interval [lo, hi]; lo == hi encodes a single point.
struct Interval {
  Scalar lo;
  Scalar hi;

  Interval(Scalar lo_, Scalar hi_);
  static Interval point(const Scalar& p) { return Interval(p, p); }

  bool is_point() const { return lo == hi; }
  bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of closed rational intervals: parts sorted, pairwise
/// disjoint, and no two parts touch. The default value is the empty set.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(const Interval& part) : parts_{part} {}

  static IntervalUnion normalize(std::vector<Interval> parts);
  static IntervalUnion point(const Scalar& p) { return IntervalUnion(Interval::point(p)); }

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool is_singleton() const { return parts_.size() == 1 && parts_.front().is_point(); }

  /// Both throw EmptySetError on the empty set.
  const Scalar& min() const;
  const Scalar& max() const;

  bool contains(const Scalar& x) const;
  bool intersects(const Interval& other) const;
  bool intersects(const IntervalUnion& other) const;
  bool is_subset_of(const IntervalUnion& other) const;

  IntervalUnion intersect(const IntervalUnion& other) const;
  IntervalUnion unite(const IntervalUnion& other) const;

  /// d(x, this); throws EmptySetError on the empty set.
  Scalar distance_to(const Scalar& x) const;

  /// "{0} u [1/2,1]"; the empty set prints as "{}".
  std::string to_string() const;

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> parts_;
};

/// inf { |a - b| : a in A, b in B }.
Scalar set_distance(const IntervalUnion& a, const IntervalUnion& b);

/// Hausdorff distance between two non-empty interval unions.
Scalar hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b);

/// Closed eps-neighbourhood of A, clipped to the ambient interval.
IntervalUnion neighborhood(const Scalar& eps, const IntervalUnion& a, const Interval& ambient);

}  // namespace crdyn
