#include "crdyn/finite_relation.hpp"

#include <algorithm>

#include "crdyn/errors.hpp"

namespace crdyn {

FiniteRelation::FiniteRelation(FiniteMetricSpace space, std::vector<std::vector<bool>> adjacency)
    : space_(std::move(space)), adjacency_(std::move(adjacency)) {
  if (adjacency_.size() != space_.size()) throw SizeMismatchError(space_.size(), adjacency_.size());
  for (const auto& row : adjacency_) {
    if (row.size() != space_.size()) throw SizeMismatchError(space_.size(), row.size());
  }
}

FiniteRelation FiniteRelation::from_pairs(FiniteMetricSpace space,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t n = space.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InvalidArgument("pair outside the space");
    adj[x][y] = true;
  }
  return FiniteRelation(std::move(space), std::move(adj));
}

PointSet FiniteRelation::singleton(std::size_t x) const {
  if (!in_space(x)) throw InvalidArgument("point " + std::to_string(x) + " outside a space of size " +
                                          std::to_string(size()));
  return PointSet::single(x);
}

PointSet FiniteRelation::image(const PointSet& s) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y) {
    for (std::size_t x : s.members()) {
      if (adjacency_[x][y]) {
        out.push_back(y);
        break;
      }
    }
  }
  return PointSet(std::move(out));
}

PointSet FiniteRelation::iterate(std::size_t x, std::size_t j) const {
  PointSet current = singleton(x);
  for (std::size_t i = 1; i <= j; ++i) {
    current = image(current);
    if (current.empty()) throw EmptyImageError(i);
  }
  return current;
}

PointSet FiniteRelation::project(Projection which) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      const bool hit = which == Projection::first ? adjacency_[a][b] : adjacency_[b][a];
      if (hit) {
        out.push_back(a);
        break;
      }
    }
  }
  return PointSet(std::move(out));
}

FiniteRelation FiniteRelation::inverse() const {
  const std::size_t n = size();
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[y][x] = adjacency_[x][y];
  }
  return FiniteRelation(space_, std::move(t));
}

bool FiniteRelation::is_function() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const std::vector<bool>& row) { return std::count(row.begin(), row.end(), true) == 1; });
}

FiniteRelation::automaton_type FiniteRelation::iterate_automaton() const {
  automaton_type out;
  for (std::size_t x = 0; x < size(); ++x) {
    out.cells.push_back(x);
    out.sequences.push_back(
        unroll_orbit(image(PointSet::single(x)), [this](const PointSet& s) { return image(s); }));
  }
  return out;
}

}  // namespace crdyn
