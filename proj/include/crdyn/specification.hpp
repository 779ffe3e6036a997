#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crdyn/errors.hpp"
#include "crdyn/orbit.hpp"

namespace crdyn {

/// plain compares iterates with the inf-distance between sets, hausdorff
/// with the Hausdorff metric.
enum class TraceMode { plain, hausdorff };

inline std::string to_string(TraceMode m) { return m == TraceMode::plain ? "plain" : "hausdorff"; }

/// One (i, j) requirement of a tracing definition: d(F^exponent(y), F^j(x_i)).
/// `segment` is 1-based as in the tracing definitions.
struct TraceEntry {
  std::size_t segment = 0;
  std::size_t j = 0;
  std::size_t exponent = 0;
  Scalar distance;
};

struct TraceReport {
  TraceMode mode = TraceMode::plain;
  Scalar eps;
  std::vector<TraceEntry> entries;
  bool passed = true;
  /// Index of the first entry with maximal distance.
  std::size_t worst = 0;

  const TraceEntry& worst_entry() const { return entries.at(worst); }
  const TraceEntry* find(std::size_t segment, std::size_t j) const {
    for (const auto& e : entries) {
      if (e.segment == segment && e.j == j) return &e;
    }
    return nullptr;
  }
};

/// Fills in `passed` and `worst` (comparison is <= eps).
inline TraceReport finish_report(TraceMode mode, Scalar eps, std::vector<TraceEntry> entries) {
  TraceReport r{mode, std::move(eps), std::move(entries), true, 0};
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    if (r.eps < r.entries[i].distance) r.passed = false;
    if (r.entries[r.worst].distance < r.entries[i].distance) r.worst = i;
  }
  return r;
}

template <ClosedRelation R>
Scalar set_gap(const R& f, const typename R::set_type& a, const typename R::set_type& b, TraceMode mode) {
  return mode == TraceMode::plain ? f.set_distance(a, b) : f.hausdorff_distance(a, b);
}

template <class Point>
struct SegmentRequest {
  Point base{};
  std::size_t k = 0;
  std::size_t l = 0;
};

/// An n-specification: orbit segments F^[k_i, l_i](x_i) in the given order.
template <ClosedRelation R>
struct Specification {
  using point_type = typename R::point_type;

  std::vector<OrbitSegment<R>> segments;

  static Specification build(const R& f, const std::vector<SegmentRequest<point_type>>& requests) {
    if (requests.empty()) throw InvalidArgument("a specification needs at least one segment");
    Specification s;
    for (const auto& r : requests) s.segments.push_back(orbit_segment(f, r.base, r.k, r.l));
    return s;
  }

  std::vector<SegmentRequest<point_type>> requests() const {
    std::vector<SegmentRequest<point_type>> out;
    for (const auto& seg : segments) out.push_back({seg.base, seg.k, seg.l});
    return out;
  }
};

/// Initial specification F^[0, l_i](x_i) with gaps m_1, ..., m_{n-1}.
template <ClosedRelation R>
struct InitialSpecification {
  using point_type = typename R::point_type;

  std::vector<OrbitSegment<R>> segments;
  std::vector<std::size_t> gaps;

  static InitialSpecification build(const R& f, const std::vector<std::pair<point_type, std::size_t>>& bases,
                                    std::vector<std::size_t> gaps) {
    if (bases.empty()) throw InvalidArgument("an initial specification needs at least one segment");
    if (gaps.size() + 1 != bases.size()) throw SizeMismatchError(bases.size() - 1, gaps.size());
    if (std::find(gaps.begin(), gaps.end(), std::size_t{0}) != gaps.end()) {
      throw InvalidArgument("gaps must be positive");
    }
    InitialSpecification s;
    for (const auto& [x, l] : bases) s.segments.push_back(orbit_segment(f, x, 0, l));
    s.gaps = std::move(gaps);
    return s;
  }

  /// l_1 + m_1 + ... + l_{i-1} + m_{i-1} for 0-based segment index i.
  std::size_t offset(std::size_t i) const {
    std::size_t sum = 0;
    for (std::size_t t = 0; t < i; ++t) sum += segments[t].l + gaps[t];
    return sum;
  }
};

/// k_{i+1} - l_i >= N for every consecutive pair.
template <ClosedRelation R>
bool is_n_spaced(const Specification<R>& s, std::size_t n) {
  for (std::size_t i = 0; i + 1 < s.segments.size(); ++i) {
    const auto& a = s.segments[i];
    const auto& b = s.segments[i + 1];
    if (b.k < a.l || b.k - a.l < n) return false;
  }
  return true;
}

/// One required comparison: F^exponent(y) against `target`.
template <ClosedRelation R>
struct Demand {
  std::size_t segment = 0;
  std::size_t j = 0;
  std::size_t exponent = 0;
  const typename R::set_type* target = nullptr;
};

template <ClosedRelation R>
std::vector<Demand<R>> demands_of(const Specification<R>& s) {
  std::vector<Demand<R>> out;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    for (std::size_t j = seg.k; j <= seg.l; ++j) out.push_back({i + 1, j, j, &seg.at(j)});
  }
  return out;
}

template <ClosedRelation R>
std::vector<Demand<R>> demands_of(const InitialSpecification<R>& s) {
  std::vector<Demand<R>> out;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    const std::size_t shift = s.offset(i);
    for (std::size_t j = 0; j <= seg.l; ++j) out.push_back({i + 1, j, shift + j, &seg.at(j)});
  }
  return out;
}

/// Evaluates every demand at the candidate tracer y.
template <ClosedRelation R>
TraceReport evaluate_demands(const R& f, const std::vector<Demand<R>>& demands, const typename R::point_type& y,
                             const Scalar& eps, TraceMode mode) {
  std::size_t top = 0;
  for (const auto& d : demands) top = std::max(top, d.exponent);
  std::vector<typename R::set_type> iterates;
  iterates.reserve(top + 1);
  iterates.push_back(f.singleton(y));
  for (std::size_t e = 1; e <= top; ++e) {
    iterates.push_back(f.image(iterates.back()));
    if (iterates.back().empty()) throw EmptyImageError(e);
  }
  std::vector<TraceEntry> entries;
  entries.reserve(demands.size());
  for (const auto& d : demands) {
    entries.push_back({d.segment, d.j, d.exponent, set_gap(f, iterates[d.exponent], *d.target, mode)});
  }
  return finish_report(mode, eps, std::move(entries));
}

template <ClosedRelation R>
TraceReport check_trace(const R& f, const Specification<R>& s, const typename R::point_type& y, const Scalar& eps,
                        TraceMode mode) {
  return evaluate_demands(f, demands_of(s), y, eps, mode);
}

/// The exponent applied to y for entry (i, j) is l_1+m_1+...+l_{i-1}+m_{i-1}+j.
template <ClosedRelation R>
TraceReport check_initial_trace(const R& f, const InitialSpecification<R>& s, const typename R::point_type& y,
                                const Scalar& eps, TraceMode mode) {
  return evaluate_demands(f, demands_of(s), y, eps, mode);
}

/// Initial specification obtained from a spaced one by moving every segment
/// to start at z_i in F^{k_i}(x_i) and setting m_i = k_{i+1} - l_i.
template <ClosedRelation R>
struct DerivedInitial {
  InitialSpecification<R> spec;
  /// z_i, the minimum of F^{k_i}(x_i).
  std::vector<typename R::point_type> bases;
};

template <ClosedRelation R>
DerivedInitial<R> derive_initial(const R& f, const Specification<R>& s) {
  using point_type = typename R::point_type;
  std::vector<std::pair<point_type, std::size_t>> bases;
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const auto& seg = s.segments[i];
    if (i + 1 < s.segments.size()) {
      const auto& next = s.segments[i + 1];
      if (next.k <= seg.l) throw NonPositiveGapError(i + 2);
      gaps.push_back(next.k - seg.l);
    }
    bases.emplace_back(f.min_element(seg.sets.front()), seg.l - seg.k);
  }
  DerivedInitial<R> out{InitialSpecification<R>::build(f, bases, gaps), {}};
  for (const auto& b : bases) out.bases.push_back(b.first);
  return out;
}

namespace detail {

inline std::vector<std::size_t> invert_bijection(const std::vector<std::size_t>& phi, std::size_t n) {
  if (phi.size() != n) throw SizeMismatchError(n, phi.size());
  std::vector<std::size_t> inv(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (phi[x] >= n || inv[phi[x]] != n) throw InvalidArgument("conjugacy map is not a bijection");
    inv[phi[x]] = x;
  }
  return inv;
}

}  // namespace detail

/// Pulls a specification of the G-system back to the F-system along the
/// bijection phi (phi[x] is the image of x): same (k_i, l_i), bases phi^-1(y_i).
inline Specification<FiniteRelation> conjugacy_transport(const std::vector<std::size_t>& phi,
                                                         const Specification<FiniteRelation>& s,
                                                         const FiniteRelation& f) {
  const auto inv = detail::invert_bijection(phi, f.size());
  auto requests = s.requests();
  for (auto& r : requests) {
    if (r.base >= inv.size()) throw SizeMismatchError(inv.size(), r.base + 1);
    r.base = inv[r.base];
  }
  return Specification<FiniteRelation>::build(f, requests);
}

/// Initial variant: gap vector unchanged, bases mapped through phi^-1.
inline InitialSpecification<FiniteRelation> conjugacy_transport(const std::vector<std::size_t>& phi,
                                                                const InitialSpecification<FiniteRelation>& s,
                                                                const FiniteRelation& f) {
  const auto inv = detail::invert_bijection(phi, f.size());
  std::vector<std::pair<std::size_t, std::size_t>> bases;
  for (const auto& seg : s.segments) {
    if (seg.base >= inv.size()) throw SizeMismatchError(inv.size(), seg.base + 1);
    bases.emplace_back(inv[seg.base], seg.l);
  }
  return InitialSpecification<FiniteRelation>::build(f, bases, s.gaps);
}

}  // namespace crdyn
