#include "crdyn/box_relation.hpp"

#include <algorithm>

#include "crdyn/errors.hpp"

namespace crdyn {

bool Cell::contains(const Scalar& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

Scalar Cell::sample() const { return is_point() ? lo : midpoint(lo, hi); }

std::string Cell::to_string() const {
  if (is_point()) return "{" + lo.to_string() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + "," + hi.to_string() + (hi_closed ? "]" : ")");
}

std::size_t CellDecomposition::locate(const Scalar& x) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].contains(x)) return i;
  }
  throw InvalidArgument("point " + x.to_string() + " lies outside the decomposition");
}

CellDecomposition decompose_by_membership(const Interval& ambient, const std::vector<Interval>& sets) {
  CellDecomposition out;
  out.breakpoints = {ambient.lo, ambient.hi};
  for (const auto& s : sets) {
    for (const Scalar* e : {&s.lo, &s.hi}) {
      if (ambient.contains(*e)) out.breakpoints.push_back(*e);
    }
  }
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()), out.breakpoints.end());

  auto pattern_at = [&](const Scalar& x) {
    std::vector<std::size_t> p;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].contains(x)) p.push_back(i);
    }
    return p;
  };
  auto push = [&](Cell piece) {
    if (!out.cells.empty() && out.cells.back().pattern == piece.pattern) {
      out.cells.back().hi = piece.hi;
      out.cells.back().hi_closed = piece.hi_closed;
    } else {
      out.cells.push_back(std::move(piece));
    }
  };

  const auto& bp = out.breakpoints;
  for (std::size_t t = 0; t < bp.size(); ++t) {
    push(Cell{bp[t], bp[t], true, true, pattern_at(bp[t])});
    if (t + 1 < bp.size()) push(Cell{bp[t], bp[t + 1], false, false, pattern_at(midpoint(bp[t], bp[t + 1]))});
  }
  return out;
}

BoxRelation::BoxRelation(Interval ambient, std::vector<Box> boxes)
    : ambient_(std::move(ambient)), boxes_(std::move(boxes)) {
  if (boxes_.empty()) throw InvalidArgument("a box relation needs at least one box");
  for (const auto& b : boxes_) {
    if (!ambient_.contains(b.domain) || !ambient_.contains(b.range)) {
      throw InvalidArgument("box " + b.domain.to_string() + " x " + b.range.to_string() +
                            " leaves the ambient interval " + ambient_.to_string());
    }
  }
}

IntervalUnion BoxRelation::singleton(const Scalar& x) const {
  if (!in_space(x)) throw InvalidArgument("point " + x.to_string() + " outside " + ambient_.to_string());
  return IntervalUnion::point(x);
}

IntervalUnion BoxRelation::image(const IntervalUnion& s) const {
  std::vector<Interval> parts;
  for (const auto& b : boxes_) {
    if (s.intersects(b.domain)) parts.push_back(b.range);
  }
  return IntervalUnion::normalize(std::move(parts));
}

IntervalUnion BoxRelation::iterate(const Scalar& x, std::size_t j) const {
  IntervalUnion current = singleton(x);
  for (std::size_t i = 1; i <= j; ++i) {
    current = image(current);
    if (current.empty()) throw EmptyImageError(i);
  }
  return current;
}

IntervalUnion BoxRelation::project(Projection which) const {
  std::vector<Interval> parts;
  for (const auto& b : boxes_) parts.push_back(which == Projection::first ? b.domain : b.range);
  return IntervalUnion::normalize(std::move(parts));
}

BoxRelation BoxRelation::inverse() const {
  std::vector<Box> swapped;
  swapped.reserve(boxes_.size());
  for (const auto& b : boxes_) swapped.push_back(Box{b.range, b.domain});
  return BoxRelation(ambient_, std::move(swapped));
}

CellDecomposition BoxRelation::cell_decomposition() const {
  std::vector<Interval> domains;
  domains.reserve(boxes_.size());
  for (const auto& b : boxes_) domains.push_back(b.domain);
  return decompose_by_membership(ambient_, domains);
}

namespace {

IntervalUnion pattern_image(const std::vector<Box>& boxes, const std::vector<std::size_t>& pattern) {
  std::vector<Interval> parts;
  for (std::size_t i : pattern) parts.push_back(boxes[i].range);
  return IntervalUnion::normalize(std::move(parts));
}

}  // namespace

bool BoxRelation::is_function() const {
  const auto decomposition = cell_decomposition();
  return std::all_of(decomposition.cells.begin(), decomposition.cells.end(), [&](const Cell& c) {
    return pattern_image(boxes_, c.pattern).is_singleton();
  });
}

BoxRelation::automaton_type BoxRelation::iterate_automaton() const {
  automaton_type out;
  out.cells = cell_decomposition().cells;
  out.sequences.reserve(out.cells.size());
  for (const auto& c : out.cells) {
    out.sequences.push_back(
        unroll_orbit(pattern_image(boxes_, c.pattern), [this](const IntervalUnion& s) { return image(s); }));
  }
  return out;
}

}  // namespace crdyn
