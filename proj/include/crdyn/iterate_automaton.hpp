#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "crdyn/errors.hpp"

namespace crdyn {

/// The sequence (F^j(y))_{j>=1} as preperiod followed by a repeating cycle.
template <class Set>
struct EventualSequence {
  std::vector<Set> preperiod;
  std::vector<Set> cycle;

  /// F^j(y) for j >= 1.
  const Set& at(std::size_t j) const {
    const std::size_t idx = j - 1;
    if (idx < preperiod.size()) return preperiod[idx];
    return cycle[(idx - preperiod.size()) % cycle.size()];
  }

  std::size_t distinct() const { return preperiod.size() + cycle.size(); }
};

/// Per-cell eventually periodic description of the iterates. For a box
/// relation the cells are those of the cell decomposition; for a finite
/// relation every point is its own cell.
template <class Cell, class Set>
struct IterateAutomaton {
  std::vector<Cell> cells;
  std::vector<EventualSequence<Set>> sequences;

  std::size_t size() const { return cells.size(); }
  const Set& at(std::size_t cell, std::size_t j) const { return sequences[cell].at(j); }
};

/// Applies `step` starting from `first` (which is F^1) until a set repeats.
template <class Set, class Step>
EventualSequence<Set> unroll_orbit(Set first, Step step) {
  std::vector<Set> seen;
  Set current = std::move(first);
  for (;;) {
    if (current.empty()) throw EmptyImageError(seen.size() + 1);
    auto hit = std::find(seen.begin(), seen.end(), current);
    if (hit != seen.end()) {
      EventualSequence<Set> out;
      out.preperiod.assign(seen.begin(), hit);
      out.cycle.assign(hit, seen.end());
      return out;
    }
    seen.push_back(current);
    current = step(seen.back());
  }
}

}  // namespace crdyn
