#include "crdyn/interval_union.hpp"

#include <algorithm>

#include "crdyn/errors.hpp"

namespace crdyn {

Interval::Interval(Scalar lo_, Scalar hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw InvalidArgument("interval with lo > hi: [" + lo.to_string() + "," + hi.to_string() + "]");
}

std::string Interval::to_string() const {
  if (is_point()) return "{" + lo.to_string() + "}";
  return "[" + lo.to_string() + "," + hi.to_string() + "]";
}

IntervalUnion IntervalUnion::normalize(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalUnion out;
  for (auto& part : parts) {
    if (!out.parts_.empty() && part.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < part.hi) out.parts_.back().hi = part.hi;
    } else {
      out.parts_.push_back(std::move(part));
    }
  }
  return out;
}

const Scalar& IntervalUnion::min() const {
  if (empty()) throw EmptySetError();
  return parts_.front().lo;
}

const Scalar& IntervalUnion::max() const {
  if (empty()) throw EmptySetError();
  return parts_.back().hi;
}

bool IntervalUnion::contains(const Scalar& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
}

bool IntervalUnion::intersects(const Interval& other) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.intersects(other); });
}

bool IntervalUnion::intersects(const IntervalUnion& other) const {
  return std::any_of(other.parts_.begin(), other.parts_.end(),
                     [&](const Interval& p) { return intersects(p); });
}

bool IntervalUnion::is_subset_of(const IntervalUnion& other) const {
  // Canonical parts of a superset are each contained in a single part.
  return std::all_of(parts_.begin(), parts_.end(), [&](const Interval& p) {
    return std::any_of(other.parts_.begin(), other.parts_.end(),
                       [&](const Interval& q) { return q.contains(p); });
  });
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const auto& p : parts_) {
    for (const auto& q : other.parts_) {
      if (!p.intersects(q)) continue;
      out.emplace_back(std::max(p.lo, q.lo), std::min(p.hi, q.hi));
    }
  }
  return normalize(std::move(out));
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return normalize(std::move(all));
}

Scalar IntervalUnion::distance_to(const Scalar& x) const {
  if (empty()) throw EmptySetError();
  Scalar best;
  bool first = true;
  for (const auto& p : parts_) {
    Scalar d;
    if (x < p.lo) {
      d = p.lo - x;
    } else if (p.hi < x) {
      d = x - p.hi;
    } else {
      return Scalar(0);
    }
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

std::string IntervalUnion::to_string() const {
  if (empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].to_string();
  }
  return out;
}

Scalar set_distance(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw EmptySetError();
  Scalar best;
  bool first = true;
  for (const auto& p : a.parts()) {
    for (const auto& q : b.parts()) {
      Scalar d(0);
      if (p.hi < q.lo) {
        d = q.lo - p.hi;
      } else if (q.hi < p.lo) {
        d = p.lo - q.hi;
      }
      if (first || d < best) best = d;
      first = false;
    }
  }
  return best;
}

namespace {

// sup_{a in A} d(a, B). On each part of A the function d(., B) is piecewise
// linear; its maxima sit at the part's endpoints or at midpoints of gaps of B.
Scalar directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
  Scalar best(0);
  auto consider = [&](const Scalar& x) {
    Scalar d = b.distance_to(x);
    if (best < d) best = d;
  };
  const auto& bp = b.parts();
  for (const auto& p : a.parts()) {
    consider(p.lo);
    consider(p.hi);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
      Scalar mid = midpoint(bp[k].hi, bp[k + 1].lo);
      if (p.contains(mid)) consider(mid);
    }
  }
  return best;
}

}  // namespace

Scalar hausdorff_distance(const IntervalUnion& a, const IntervalUnion& b) {
  if (a.empty() || b.empty()) throw EmptySetError();
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

IntervalUnion neighborhood(const Scalar& eps, const IntervalUnion& a, const Interval& ambient) {
  if (a.empty()) throw EmptySetError();
  if (eps.sign() < 0) throw InvalidArgument("negative neighbourhood radius");
  std::vector<Interval> grown;
  for (const auto& p : a.parts()) {
    Scalar lo = std::max(p.lo - eps, ambient.lo);
    Scalar hi = std::min(p.hi + eps, ambient.hi);
    if (lo <= hi) grown.emplace_back(std::move(lo), std::move(hi));
  }
  return IntervalUnion::normalize(std::move(grown));
}

}  // namespace crdyn
