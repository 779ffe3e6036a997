#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crdyn {

struct SuiteFailure {
  std::size_t instance = 0;
  /// Seed that regenerates this instance on its own.
  std::uint64_t seed = 0;
  std::string detail;
};

struct PropertyVerdict {
  std::string implication;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Instance i of every suite is generated from derive_seed(seed, i), so a
/// failing instance can be rerun with `count` = 1 after that seed.

/// Hausdorff tracing implies plain tracing on the same (F, S, y, eps).
PropertyVerdict hausdorff_implies_plain(std::uint64_t seed, std::size_t count);
/// derive_initial, find_initial_tracer, lift_tracer, then check_trace on the
/// lifted points (finite systems with both projections onto).
PropertyVerdict initial_round_trip(std::uint64_t seed, std::size_t count);
/// Tracing verdicts agree across a distance-preserving relabelling.
PropertyVerdict conjugacy_invariance(std::uint64_t seed, std::size_t count);
/// On graphs of maps the set-valued checkers agree with pointwise ones.
PropertyVerdict function_agreement(std::uint64_t seed, std::size_t count);

/// The four suites above, in that order.
std::vector<PropertyVerdict> implication_suite(std::uint64_t seed, std::size_t count);

/// d(A, B) <= H_d(A, B) on random interval unions.
PropertyVerdict metric_suite(std::uint64_t seed, std::size_t count);
/// Each cell's iterate sequence has at most 2^r distinct sets for r boxes,
/// and agrees with direct iteration.
PropertyVerdict automaton_periodicity_suite(std::uint64_t seed, std::size_t count);

}  // namespace crdyn
