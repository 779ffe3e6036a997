#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "crdyn/box_relation.hpp"
#include "crdyn/finite_relation.hpp"

namespace crdyn {

/// Seeded generators for randomized suites. Every draw goes through
/// `below`, so the streams do not depend on the standard library's
/// distribution implementations.
class RandomSystems {
 public:
  explicit RandomSystems(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish integer in [0, n).
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin() { return below(2) == 1; }

  /// p/q in [0, 1] with 1 <= q <= max_den.
  Scalar unit_rational(std::size_t max_den = 8);
  Interval unit_interval(std::size_t max_den = 8);
  /// One to three closed parts in [0, 1], some of them points.
  IntervalUnion interval_union(std::size_t max_den = 8);

  /// At most max_boxes boxes on [0, 1] whose domains cover [0, 1].
  BoxRelation box_relation(std::size_t max_boxes = 5, std::size_t max_den = 8);

  /// Random metric on n points: shortest-path closure of random positive
  /// rational edge weights.
  FiniteMetricSpace metric(std::size_t n);
  /// 2 <= |X| <= max_points. Every row is non-empty; with `onto` every column
  /// is non-empty as well.
  FiniteRelation finite_relation(std::size_t max_points = 6, bool onto = true);
  /// Graph of a random self-map.
  FiniteRelation finite_function(std::size_t max_points = 6);

 private:
  std::mt19937_64 rng_;
};

/// splitmix64 step; derives per-instance seeds from a suite seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace crdyn
