#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "crdyn/box_relation.hpp"
#include "crdyn/errors.hpp"
#include "crdyn/finite_relation.hpp"

namespace crdyn {

/// What the set-valued machinery needs from a relation: images of sets,
/// singletons, and the two set distances of the ambient space.
template <class R>
concept ClosedRelation = requires(const R& f, const typename R::point_type& p, const typename R::set_type& s) {
  typename R::cell_type;
  { f.singleton(p) } -> std::same_as<typename R::set_type>;
  { f.image(s) } -> std::same_as<typename R::set_type>;
  { f.iterate(p, std::size_t{}) } -> std::same_as<typename R::set_type>;
  { f.full_set() } -> std::same_as<typename R::set_type>;
  { f.set_distance(s, s) } -> std::same_as<Scalar>;
  { f.hausdorff_distance(s, s) } -> std::same_as<Scalar>;
  { f.iterate_automaton() } -> std::same_as<typename R::automaton_type>;
};

static_assert(ClosedRelation<BoxRelation>);
static_assert(ClosedRelation<FiniteRelation>);

inline std::string point_label(const Scalar& x) { return x.to_string(); }
inline std::string point_label(std::size_t x) { return std::to_string(x); }
inline std::string set_label(const IntervalUnion& s) { return s.to_string(); }
inline std::string set_label(const PointSet& s) { return s.to_string(); }
inline std::string cell_label(const Cell& c) { return c.to_string(); }
inline std::string cell_label(std::size_t c) { return "{" + std::to_string(c) + "}"; }

/// F^[k,l](x): the sets F^k(x), ..., F^l(x).
template <ClosedRelation R>
struct OrbitSegment {
  using point_type = typename R::point_type;
  using set_type = typename R::set_type;

  point_type base{};
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<set_type> sets;

  const set_type& at(std::size_t j) const { return sets.at(j - k); }
};

/// Materializes F^k(x), ..., F^l(x). Throws BadRangeError if k > l and
/// EmptyImageError if some F^i(x) with i <= l is empty.
template <ClosedRelation R>
OrbitSegment<R> orbit_segment(const R& f, const typename R::point_type& x, std::size_t k, std::size_t l) {
  if (k > l) throw BadRangeError(k, l);
  OrbitSegment<R> seg{x, k, l, {}};
  seg.sets.reserve(l - k + 1);
  auto current = f.singleton(x);
  for (std::size_t i = 0;; ++i) {
    if (i >= k) seg.sets.push_back(current);
    if (i == l) break;
    current = f.image(current);
    if (current.empty()) throw EmptyImageError(i + 1);
  }
  return seg;
}

}  // namespace crdyn
