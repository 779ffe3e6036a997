#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "crdyn/scalar.hpp"

namespace crdyn {

/// n points with an n x n distance matrix. Construction only checks the
/// shape; use validate_metric for the axioms.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::size_t n, std::vector<Scalar> row_major);

  /// All off-diagonal distances equal to one.
  static FiniteMetricSpace discrete(std::size_t n);

  std::size_t size() const { return n_; }
  const Scalar& distance(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  Scalar diameter() const;
  FiniteMetricSpace scaled(const Scalar& factor) const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> dist_;
};

enum class MetricViolation { none, identity, symmetry, triangle };

struct MetricCheck {
  MetricViolation violation = MetricViolation::none;
  /// Offending pair (first two entries) or triple (i, j, k) with
  /// d(i,k) > d(i,j) + d(j,k).
  std::array<std::size_t, 3> where{};

  bool ok() const { return violation == MetricViolation::none; }
  std::string describe() const;
};

MetricCheck validate_metric(const FiniteMetricSpace& space);

/// Sorted set of point indices. The default value is the empty set.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<std::size_t> members);
  static PointSet single(std::size_t p) { return PointSet({p}); }
  static PointSet all(std::size_t n);

  const std::vector<std::size_t>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool is_singleton() const { return members_.size() == 1; }
  std::size_t min() const;
  bool contains(std::size_t p) const;
  bool intersects(const PointSet& other) const;
  bool is_subset_of(const PointSet& other) const;
  PointSet intersect(const PointSet& other) const;
  PointSet unite(const PointSet& other) const;

  std::string to_string() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

Scalar set_distance(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b);
Scalar hausdorff_distance(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b);
PointSet neighborhood(const FiniteMetricSpace& space, const Scalar& eps, const PointSet& a);

}  // namespace crdyn
