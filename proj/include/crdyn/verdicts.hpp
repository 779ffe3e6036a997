#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "crdyn/tracer_search.hpp"

namespace crdyn {

enum class CertificateTag { common_image, full_image, eventual_hausdorff, eventual_equal, trivial_fiber };

std::string to_string(CertificateTag tag);

template <ClosedRelation R>
struct CommonPoint {
  std::size_t a = 0;
  std::size_t b = 0;
  typename R::point_type point{};
};

/// max over the checked exponents of H_d(F^e(cell a), F^e(cell b)).
struct PairBound {
  std::size_t a = 0;
  std::size_t b = 0;
  Scalar worst;
};

/// Evidence for one of the sufficient conditions. Cell indices refer to
/// `cells`, which is the relation's iterate automaton at issue time.
template <ClosedRelation R>
struct Certificate {
  CertificateTag tag = CertificateTag::common_image;
  std::size_t n0 = 0;
  std::vector<typename R::cell_type> cells;
  /// F^{n0} on each cell.
  std::vector<typename R::set_type> images;

  // common-image
  std::vector<CommonPoint<R>> common_points;

  // eventual-hausdorff / eventual-equal
  std::optional<Scalar> eps;
  /// Exponents n0..window_end were compared; beyond that the automaton repeats.
  std::size_t window_end = 0;
  std::vector<PairBound> bounds;

  // trivial-fiber
  std::optional<typename R::point_type> x0;
  /// Boxes with x0 in their range whose domains cover the ambient interval.
  std::vector<std::size_t> fiber;
};

struct NotFound {
  std::string reason;
};

template <ClosedRelation R>
using CertificateSearch = std::variant<Certificate<R>, NotFound>;

template <ClosedRelation R>
bool certified(const CertificateSearch<R>& r) {
  return std::holds_alternative<Certificate<R>>(r);
}

namespace detail {

template <ClosedRelation R>
void require_left_total(const R& f) {
  if (f.project(Projection::first) != f.full_set()) {
    throw InvalidArgument("certificate requires the first projection of F to be the whole space");
  }
}

template <class Automaton>
std::size_t max_preperiod(const Automaton& a) {
  std::size_t p = 0;
  for (const auto& s : a.sequences) p = std::max(p, s.preperiod.size());
  return p;
}

template <class Automaton>
std::size_t cycle_lcm(const Automaton& a) {
  std::size_t l = 1;
  for (const auto& s : a.sequences) l = std::lcm(l, s.cycle.size());
  return l;
}

template <ClosedRelation R>
bool pairwise_intersecting(const typename R::automaton_type& a, std::size_t n) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = x + 1; y < a.size(); ++y) {
      if (!a.at(x, n).intersects(a.at(y, n))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Smallest n0 <= n0_max with F^{n0}(x) and F^{n0}(y) meeting for all x, y.
template <ClosedRelation R>
CertificateSearch<R> certify_common_image(const R& f, std::size_t n0_max) {
  detail::require_left_total(f);
  const auto automaton = f.iterate_automaton();
  for (std::size_t n0 = 1; n0 <= n0_max; ++n0) {
    if (!detail::pairwise_intersecting<R>(automaton, n0)) continue;
    Certificate<R> cert;
    cert.tag = CertificateTag::common_image;
    cert.n0 = n0;
    cert.cells = automaton.cells;
    for (std::size_t c = 0; c < automaton.size(); ++c) cert.images.push_back(automaton.at(c, n0));
    for (std::size_t a = 0; a < automaton.size(); ++a) {
      for (std::size_t b = a + 1; b < automaton.size(); ++b) {
        cert.common_points.push_back({a, b, f.min_element(cert.images[a].intersect(cert.images[b]))});
      }
    }
    return cert;
  }
  return NotFound{"some pair of images stays disjoint up to n0 = " + std::to_string(n0_max)};
}

/// Smallest n0 <= n0_max with F^{n0}(x) = X for every x.
template <ClosedRelation R>
CertificateSearch<R> certify_full_image(const R& f, std::size_t n0_max) {
  detail::require_left_total(f);
  const auto automaton = f.iterate_automaton();
  const auto full = f.full_set();
  for (std::size_t n0 = 1; n0 <= n0_max; ++n0) {
    bool all_full = true;
    for (std::size_t c = 0; c < automaton.size() && all_full; ++c) all_full = automaton.at(c, n0) == full;
    if (!all_full) continue;
    Certificate<R> cert;
    cert.tag = CertificateTag::full_image;
    cert.n0 = n0;
    cert.cells = automaton.cells;
    for (std::size_t c = 0; c < automaton.size(); ++c) cert.images.push_back(automaton.at(c, n0));
    return cert;
  }
  return NotFound{"some image differs from the whole space up to n0 = " + std::to_string(n0_max)};
}

/// Smallest n0 <= n0_max with H_d(F^{n0+j}(x), F^{n0+j}(y)) <= eps for all
/// x, y and every j >= 0. Past the longest preperiod the per-cell images
/// repeat with the lcm of the cycle lengths, so a finite window decides it.
template <ClosedRelation R>
CertificateSearch<R> certify_eventual_hausdorff(const R& f, const Scalar& eps, std::size_t n0_max) {
  detail::require_left_total(f);
  const auto automaton = f.iterate_automaton();
  const std::size_t periodic_from = detail::max_preperiod(automaton) + 1;
  const std::size_t period = detail::cycle_lcm(automaton);
  for (std::size_t n0 = 1; n0 <= n0_max; ++n0) {
    const std::size_t last = std::max(n0, periodic_from) + period - 1;
    std::vector<PairBound> bounds;
    bool ok = true;
    for (std::size_t a = 0; a < automaton.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < automaton.size() && ok; ++b) {
        PairBound bound{a, b, Scalar(0)};
        for (std::size_t e = n0; e <= last; ++e) {
          bound.worst = std::max(bound.worst, f.hausdorff_distance(automaton.at(a, e), automaton.at(b, e)));
        }
        ok = bound.worst <= eps;
        bounds.push_back(std::move(bound));
      }
    }
    if (!ok) continue;
    Certificate<R> cert;
    cert.n0 = n0;
    cert.cells = automaton.cells;
    for (std::size_t c = 0; c < automaton.size(); ++c) cert.images.push_back(automaton.at(c, n0));
    const bool equal = std::all_of(cert.images.begin(), cert.images.end(),
                                   [&](const auto& s) { return s == cert.images.front(); });
    cert.tag = equal ? CertificateTag::eventual_equal : CertificateTag::eventual_hausdorff;
    cert.eps = eps;
    cert.window_end = last;
    cert.bounds = std::move(bounds);
    return cert;
  }
  return NotFound{"some pair of images stays more than " + eps.to_string() + " apart up to n0 = " +
                  std::to_string(n0_max)};
}

/// A point x0 with X x {x0} contained in F.
CertificateSearch<BoxRelation> certify_trivial_fiber(const BoxRelation& f);
CertificateSearch<FiniteRelation> certify_trivial_fiber(const FiniteRelation& f);

bool recheck_trivial_fiber(const BoxRelation& f, const Certificate<BoxRelation>& cert);
bool recheck_trivial_fiber(const FiniteRelation& f, const Certificate<FiniteRelation>& cert);

/// Re-derives the claim from the relation: images are recomputed by plain
/// iteration at each cell's sample point rather than read off the automaton.
template <ClosedRelation R>
bool recheck(const R& f, const Certificate<R>& cert) {
  if (cert.tag == CertificateTag::trivial_fiber) return recheck_trivial_fiber(f, cert);
  if (cert.n0 == 0 || cert.cells.size() != cert.images.size()) return false;
  if (f.project(Projection::first) != f.full_set()) return false;
  if (f.iterate_automaton().cells != cert.cells) return false;
  const std::size_t n = cert.cells.size();
  auto image_at = [&](std::size_t c, std::size_t e) { return f.iterate(detail::cell_sample(f, cert.cells[c]), e); };
  for (std::size_t c = 0; c < n; ++c) {
    if (image_at(c, cert.n0) != cert.images[c]) return false;
  }
  switch (cert.tag) {
    case CertificateTag::common_image: {
      std::size_t expected = 0;
      for (const auto& cp : cert.common_points) {
        if (cp.a >= n || cp.b >= n) return false;
        if (!cert.images[cp.a].contains(cp.point) || !cert.images[cp.b].contains(cp.point)) return false;
        ++expected;
      }
      return expected == n * (n - 1) / 2;
    }
    case CertificateTag::full_image:
      return std::all_of(cert.images.begin(), cert.images.end(), [&](const auto& s) { return s == f.full_set(); });
    case CertificateTag::eventual_hausdorff:
    case CertificateTag::eventual_equal: {
      if (!cert.eps) return false;
      const auto automaton = f.iterate_automaton();
      if (cert.window_end + 1 < std::max(cert.n0, detail::max_preperiod(automaton) + 1) + detail::cycle_lcm(automaton)) {
        return false;
      }
      std::vector<std::vector<typename R::set_type>> orbit(n);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t e = cert.n0; e <= cert.window_end; ++e) orbit[c].push_back(image_at(c, e));
      }
      std::size_t checked = 0;
      for (const auto& bound : cert.bounds) {
        Scalar worst(0);
        for (std::size_t t = 0; t < orbit[bound.a].size(); ++t) {
          worst = std::max(worst, f.hausdorff_distance(orbit[bound.a][t], orbit[bound.b][t]));
        }
        if (worst != bound.worst || *cert.eps < worst) return false;
        ++checked;
      }
      const bool equal = std::all_of(cert.images.begin(), cert.images.end(),
                                     [&](const auto& s) { return s == cert.images.front(); });
      return checked == n * (n - 1) / 2 && equal == (cert.tag == CertificateTag::eventual_equal);
    }
    case CertificateTag::trivial_fiber:
      break;
  }
  return false;
}

// ---- bounded refutations ---------------------------------------------------

enum class PropertyTag { SP, HSP, ISP, HISP };

std::string to_string(PropertyTag tag);
std::optional<PropertyTag> parse_property_tag(const std::string& text);
inline TraceMode mode_of(PropertyTag t) {
  return t == PropertyTag::HSP || t == PropertyTag::HISP ? TraceMode::hausdorff : TraceMode::plain;
}
inline bool is_initial(PropertyTag t) { return t == PropertyTag::ISP || t == PropertyTag::HISP; }

template <class Point>
struct TemplateSegment {
  Point base{};
  std::size_t length = 0;
};

/// ((x_1; k_1, k_1 + len_1), (x_2; l_1 + N, l_1 + N + len_2), ...): every
/// gap is exactly N.
template <class Point>
struct SpacedTemplate {
  std::size_t first_k = 0;
  std::vector<TemplateSegment<Point>> segments;

  std::vector<SegmentRequest<Point>> instantiate(std::size_t n) const {
    std::vector<SegmentRequest<Point>> out;
    std::size_t k = first_k;
    for (const auto& s : segments) {
      out.push_back({s.base, k, k + s.length});
      k = k + s.length + n;
    }
    return out;
  }
};

/// ((x_1; l_1), ..., (x_n; l_n)) with every gap m_i equal to the parameter.
template <class Point>
struct InitialTemplate {
  std::vector<TemplateSegment<Point>> segments;

  std::vector<std::pair<Point, std::size_t>> bases() const {
    std::vector<std::pair<Point, std::size_t>> out;
    for (const auto& s : segments) out.emplace_back(s.base, s.length);
    return out;
  }
  std::vector<std::size_t> gaps(std::size_t m) const {
    return std::vector<std::size_t>(segments.empty() ? 0 : segments.size() - 1, m);
  }
};

struct ParameterRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

/// One tested value of N (spaced) or m (initial) and its per-cell tables.
template <ClosedRelation R>
struct Instantiation {
  std::size_t parameter = 0;
  /// For initial properties k = 0 and l is the segment length.
  std::vector<SegmentRequest<typename R::point_type>> requests;
  std::vector<std::size_t> gaps;
  NoTracer<R> failures;
};

template <ClosedRelation R>
struct Refutation {
  PropertyTag tag = PropertyTag::SP;
  Scalar eps;
  ParameterRange range;
  std::vector<Instantiation<R>> instances;
};

/// A tracer exists for `parameter`, so the template says nothing.
template <ClosedRelation R>
struct Inconclusive {
  PropertyTag tag = PropertyTag::SP;
  Scalar eps;
  std::size_t parameter = 0;
  std::vector<SegmentRequest<typename R::point_type>> requests;
  std::vector<std::size_t> gaps;
  TracerWitness<R> witness;
};

template <ClosedRelation R>
using RefutationSearch = std::variant<Refutation<R>, Inconclusive<R>>;

template <ClosedRelation R>
bool refuted(const RefutationSearch<R>& r) {
  return std::holds_alternative<Refutation<R>>(r);
}

template <ClosedRelation R>
RefutationSearch<R> refute_property(const R& f, PropertyTag tag, const Scalar& eps,
                                    const SpacedTemplate<typename R::point_type>& tmpl, ParameterRange range) {
  if (is_initial(tag)) throw InvalidArgument(to_string(tag) + " needs an initial template");
  if (tmpl.segments.empty()) throw InvalidArgument("empty template");
  if (range.lo == 0 || range.hi < range.lo) throw InvalidArgument("spacing range must be within 1..N");
  const auto automaton = f.iterate_automaton();
  Refutation<R> out{tag, eps, range, {}};
  for (std::size_t n = range.lo; n <= range.hi; ++n) {
    auto requests = tmpl.instantiate(n);
    const auto spec = Specification<R>::build(f, requests);
    auto result = search_tracer(f, automaton, demands_of(spec), eps, mode_of(tag));
    if (auto* w = std::get_if<TracerWitness<R>>(&result)) {
      return Inconclusive<R>{tag, eps, n, std::move(requests), {}, std::move(*w)};
    }
    out.instances.push_back({n, std::move(requests), {}, std::get<NoTracer<R>>(std::move(result))});
  }
  return out;
}

template <ClosedRelation R>
RefutationSearch<R> refute_property(const R& f, PropertyTag tag, const Scalar& eps,
                                    const InitialTemplate<typename R::point_type>& tmpl, ParameterRange range) {
  if (!is_initial(tag)) throw InvalidArgument(to_string(tag) + " needs a spaced template");
  if (tmpl.segments.empty()) throw InvalidArgument("empty template");
  if (range.lo == 0 || range.hi < range.lo) throw InvalidArgument("gap range must be within 1..m");
  const auto automaton = f.iterate_automaton();
  Refutation<R> out{tag, eps, range, {}};
  for (std::size_t m = range.lo; m <= range.hi; ++m) {
    const auto bases = tmpl.bases();
    auto gaps = tmpl.gaps(m);
    const auto spec = InitialSpecification<R>::build(f, bases, gaps);
    std::vector<SegmentRequest<typename R::point_type>> requests;
    for (const auto& [x, l] : bases) requests.push_back({x, 0, l});
    auto result = search_tracer(f, automaton, demands_of(spec), eps, mode_of(tag));
    if (auto* w = std::get_if<TracerWitness<R>>(&result)) {
      return Inconclusive<R>{tag, eps, m, std::move(requests), std::move(gaps), std::move(*w)};
    }
    out.instances.push_back({m, std::move(requests), std::move(gaps), std::get<NoTracer<R>>(std::move(result))});
  }
  return out;
}

/// Replays every per-cell table through check_trace / check_initial_trace at
/// the cell's representative and compares the distances exactly.
template <ClosedRelation R>
bool recheck(const R& f, const Refutation<R>& ref) {
  for (const auto& inst : ref.instances) {
    for (const auto& cell : inst.failures.cells) {
      TraceReport replay;
      if (is_initial(ref.tag)) {
        std::vector<std::pair<typename R::point_type, std::size_t>> bases;
        for (const auto& r : inst.requests) bases.emplace_back(r.base, r.l);
        const auto spec = InitialSpecification<R>::build(f, bases, inst.gaps);
        replay = check_initial_trace(f, spec, cell.representative, ref.eps, mode_of(ref.tag));
      } else {
        const auto spec = Specification<R>::build(f, inst.requests);
        replay = check_trace(f, spec, cell.representative, ref.eps, mode_of(ref.tag));
      }
      if (replay.entries.size() != cell.report.entries.size()) return false;
      for (std::size_t e = 0; e < replay.entries.size(); ++e) {
        const auto& a = replay.entries[e];
        const auto& b = cell.report.entries[e];
        if (a.segment != b.segment || a.j != b.j || a.exponent != b.exponent || a.distance != b.distance) return false;
        if (b.distance < cell.lower_bounds[e]) return false;
      }
    }
  }
  return true;
}

}  // namespace crdyn
