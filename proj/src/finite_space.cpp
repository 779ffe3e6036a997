#include "crdyn/finite_space.hpp"

#include <algorithm>

#include "crdyn/errors.hpp"

namespace crdyn {

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<Scalar> row_major)
    : n_(n), dist_(std::move(row_major)) {
  if (dist_.size() != n_ * n_) throw SizeMismatchError(n_ * n_, dist_.size());
}

FiniteMetricSpace FiniteMetricSpace::discrete(std::size_t n) {
  std::vector<Scalar> d(n * n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Scalar(0);
  return FiniteMetricSpace(n, std::move(d));
}

Scalar FiniteMetricSpace::diameter() const {
  Scalar best(0);
  for (const auto& d : dist_) best = std::max(best, d);
  return best;
}

FiniteMetricSpace FiniteMetricSpace::scaled(const Scalar& factor) const {
  std::vector<Scalar> d;
  d.reserve(dist_.size());
  for (const auto& v : dist_) d.push_back(v * factor);
  return FiniteMetricSpace(n_, std::move(d));
}

std::string MetricCheck::describe() const {
  auto pair = [&] { return "(" + std::to_string(where[0]) + "," + std::to_string(where[1]) + ")"; };
  switch (violation) {
    case MetricViolation::none:
      return "ok";
    case MetricViolation::identity:
      return "identity of indiscernibles fails at pair " + pair();
    case MetricViolation::symmetry:
      return "symmetry fails at pair " + pair();
    case MetricViolation::triangle:
      return "triangle inequality fails at triple (" + std::to_string(where[0]) + "," +
             std::to_string(where[1]) + "," + std::to_string(where[2]) + ")";
  }
  return "unknown";
}

MetricCheck validate_metric(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int s = space.distance(i, j).sign();
      if ((i == j && s != 0) || (i != j && s <= 0)) return {MetricViolation::identity, {i, j, 0}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.distance(i, j) != space.distance(j, i)) return {MetricViolation::symmetry, {i, j, 0}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (space.distance(i, j) + space.distance(j, k) < space.distance(i, k)) {
          return {MetricViolation::triangle, {i, j, k}};
        }
      }
    }
  }
  return {};
}

PointSet::PointSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet PointSet::all(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return PointSet(std::move(m));
}

std::size_t PointSet::min() const {
  if (empty()) throw EmptySetError();
  return members_.front();
}

bool PointSet::contains(std::size_t p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PointSet::intersects(const PointSet& other) const { return !intersect(other).empty(); }

bool PointSet::is_subset_of(const PointSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

PointSet PointSet::intersect(const PointSet& other) const {
  std::vector<std::size_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return PointSet(std::move(out));
}

PointSet PointSet::unite(const PointSet& other) const {
  std::vector<std::size_t> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return PointSet(std::move(out));
}

std::string PointSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

namespace {

Scalar point_to_set(const FiniteMetricSpace& space, std::size_t p, const PointSet& b) {
  Scalar best = space.distance(p, b.members().front());
  for (std::size_t q : b.members()) best = std::min(best, space.distance(p, q));
  return best;
}

Scalar directed_hausdorff(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b) {
  Scalar best(0);
  for (std::size_t p : a.members()) best = std::max(best, point_to_set(space, p, b));
  return best;
}

}  // namespace

Scalar set_distance(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw EmptySetError();
  Scalar best = point_to_set(space, a.members().front(), b);
  for (std::size_t p : a.members()) best = std::min(best, point_to_set(space, p, b));
  return best;
}

Scalar hausdorff_distance(const FiniteMetricSpace& space, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw EmptySetError();
  return std::max(directed_hausdorff(space, a, b), directed_hausdorff(space, b, a));
}

PointSet neighborhood(const FiniteMetricSpace& space, const Scalar& eps, const PointSet& a) {
  if (a.empty()) throw EmptySetError();
  if (eps.sign() < 0) throw InvalidArgument("negative neighbourhood radius");
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < space.size(); ++p) {
    if (point_to_set(space, p, a) <= eps) out.push_back(p);
  }
  return PointSet(std::move(out));
}

}  // namespace crdyn
