#include "crdyn/random_systems.hpp"

#include <algorithm>

namespace crdyn {

Scalar RandomSystems::unit_rational(std::size_t max_den) {
  const auto den = static_cast<long>(1 + below(max_den));
  const auto num = static_cast<long>(below(static_cast<std::size_t>(den) + 1));
  return Scalar(num, den);
}

Interval RandomSystems::unit_interval(std::size_t max_den) {
  Scalar a = unit_rational(max_den);
  if (below(3) == 0) return Interval::point(a);
  Scalar b = unit_rational(max_den);
  if (b < a) std::swap(a, b);
  return Interval(a, b);
}

IntervalUnion RandomSystems::interval_union(std::size_t max_den) {
  std::vector<Interval> parts;
  const std::size_t count = 1 + below(3);
  for (std::size_t i = 0; i < count; ++i) parts.push_back(unit_interval(max_den));
  return IntervalUnion::normalize(std::move(parts));
}

BoxRelation RandomSystems::box_relation(std::size_t max_boxes, std::size_t max_den) {
  const std::size_t count = 1 + below(max_boxes);
  std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
  for (std::size_t i = 0; i + 1 < count; ++i) cuts.push_back(unit_rational(max_den));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < count; ++i) boxes.push_back({Interval(cuts[i], cuts[i + 1]), unit_interval(max_den)});
  return BoxRelation(Interval(Scalar(0), Scalar(1)), std::move(boxes));
}

FiniteMetricSpace RandomSystems::metric(std::size_t n) {
  std::vector<Scalar> d(n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto num = static_cast<long>(1 + below(8));
      const auto den = static_cast<long>(1 + below(4));
      d[i * n + j] = d[j * n + i] = Scalar(num, den);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar via = d[i * n + k] + d[k * n + j];
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  return FiniteMetricSpace(n, std::move(d));
}

FiniteRelation RandomSystems::finite_relation(std::size_t max_points, bool onto) {
  const std::size_t n = 2 + below(max_points - 1);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto& row : adj) {
    for (std::size_t j = 0; j < n; ++j) row[j] = below(3) == 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::none_of(adj[i].begin(), adj[i].end(), [](bool b) { return b; })) adj[i][below(n)] = true;
  }
  if (onto) {
    for (std::size_t j = 0; j < n; ++j) {
      bool hit = false;
      for (std::size_t i = 0; i < n; ++i) hit = hit || adj[i][j];
      if (!hit) adj[below(n)][j] = true;
    }
  }
  return FiniteRelation(metric(n), std::move(adj));
}

FiniteRelation RandomSystems::finite_function(std::size_t max_points) {
  const std::size_t n = 2 + below(max_points - 1);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto& row : adj) row[below(n)] = true;
  return FiniteRelation(metric(n), std::move(adj));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace crdyn
