#include "crdyn/suites.hpp"

#include <functional>

#include "crdyn/random_systems.hpp"
#include "crdyn/tracer_search.hpp"

namespace crdyn {

namespace {

template <class Point, class Gen>
std::vector<SegmentRequest<Point>> random_requests(RandomSystems& rs, Gen point) {
  std::vector<SegmentRequest<Point>> out;
  std::size_t k = rs.below(4);
  const std::size_t count = 1 + rs.below(3);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t l = k + rs.below(3);
    out.push_back({point(), k, l});
    k = l + 1 + rs.below(3);
  }
  return out;
}

template <class Point, class Gen>
std::pair<std::vector<std::pair<Point, std::size_t>>, std::vector<std::size_t>> random_initial(RandomSystems& rs,
                                                                                                 Gen point) {
  std::vector<std::pair<Point, std::size_t>> bases;
  std::vector<std::size_t> gaps;
  const std::size_t count = 1 + rs.below(3);
  for (std::size_t i = 0; i < count; ++i) {
    bases.emplace_back(point(), rs.below(3));
    if (i + 1 < count) gaps.push_back(1 + rs.below(3));
  }
  return {std::move(bases), std::move(gaps)};
}

PropertyVerdict run_suite(const std::string& name, std::uint64_t seed, std::size_t count,
                          const std::function<std::string(RandomSystems&)>& instance) {
  PropertyVerdict v{name, seed, count, {}};
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = derive_seed(seed, i);
    RandomSystems rs(s);
    std::string problem;
    try {
      problem = instance(rs);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) v.failures.push_back({i, s, problem});
  }
  return v;
}

std::string compare_modes(const TraceReport& plain, const TraceReport& hausdorff) {
  for (std::size_t e = 0; e < plain.entries.size(); ++e) {
    if (hausdorff.entries[e].distance < plain.entries[e].distance) {
      return "plain distance exceeds Hausdorff distance at entry " + std::to_string(e);
    }
  }
  if (hausdorff.passed && !plain.passed) return "Hausdorff trace passed but plain trace failed";
  return {};
}

template <ClosedRelation R, class Gen>
std::string hausdorff_instance(const R& f, RandomSystems& rs, Gen point) {
  const Scalar eps = rs.unit_rational();
  const auto y = point();
  const auto spec = Specification<R>::build(f, random_requests<typename R::point_type>(rs, point));
  auto problem = compare_modes(check_trace(f, spec, y, eps, TraceMode::plain),
                               check_trace(f, spec, y, eps, TraceMode::hausdorff));
  if (!problem.empty()) return "spaced: " + problem;

  const auto [bases, gaps] = random_initial<typename R::point_type>(rs, point);
  const auto ispec = InitialSpecification<R>::build(f, bases, gaps);
  problem = compare_modes(check_initial_trace(f, ispec, y, eps, TraceMode::plain),
                          check_initial_trace(f, ispec, y, eps, TraceMode::hausdorff));
  if (!problem.empty()) return "initial: " + problem;

  const auto search = find_tracer(f, spec, eps, TraceMode::hausdorff);
  if (const auto* w = std::get_if<TracerWitness<R>>(&search)) {
    if (!check_trace(f, spec, w->y, eps, TraceMode::plain).passed) return "Hausdorff witness fails plain tracing";
  }
  return {};
}

}  // namespace

PropertyVerdict hausdorff_implies_plain(std::uint64_t seed, std::size_t count) {
  return run_suite("hausdorff-implies-plain", seed, count, [](RandomSystems& rs) {
    if (rs.coin()) {
      const auto f = rs.box_relation();
      return hausdorff_instance(f, rs, [&] { return rs.unit_rational(); });
    }
    const auto f = rs.finite_relation(6, false);
    return hausdorff_instance(f, rs, [&] { return rs.below(f.size()); });
  });
}

PropertyVerdict initial_round_trip(std::uint64_t seed, std::size_t count) {
  return run_suite("initial-round-trip", seed, count, [](RandomSystems& rs) -> std::string {
    const auto f = rs.finite_relation(6, true);
    const Scalar eps = rs.unit_rational();
    const auto spec = Specification<FiniteRelation>::build(
        f, random_requests<std::size_t>(rs, [&] { return rs.below(f.size()); }));
    const auto derived = derive_initial(f, spec);
    const auto search = find_initial_tracer(f, derived.spec, eps, TraceMode::plain);

    bool exists = false;
    for (std::size_t z = 0; z < f.size(); ++z) {
      exists = exists || check_initial_trace(f, derived.spec, z, eps, TraceMode::plain).passed;
    }
    if (exists != found(search)) return "initial tracer search disagrees with exhaustive check";
    const auto* w = std::get_if<TracerWitness<FiniteRelation>>(&search);
    if (!w) return {};

    const auto lifted = lift_tracer(f, spec, w->y);
    for (std::size_t y : lifted.members()) {
      if (!check_trace(f, spec, y, eps, TraceMode::plain).passed) {
        return "lifted point " + std::to_string(y) + " does not trace the original specification";
      }
    }
    if (!found(find_tracer(f, spec, eps, TraceMode::plain))) return "no tracer for the original specification";
    return {};
  });
}

namespace {

struct Conjugate {
  std::vector<std::size_t> phi;
  FiniteRelation g;
};

Conjugate random_conjugate(RandomSystems& rs, const FiniteRelation& f) {
  const std::size_t n = f.size();
  std::vector<std::size_t> phi(n);
  for (std::size_t i = 0; i < n; ++i) phi[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(phi[i], phi[rs.below(i + 1)]);
  std::vector<Scalar> dist(n * n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      dist[phi[x] * n + phi[y]] = f.space().distance(x, y);
      adj[phi[x]][phi[y]] = f.related(x, y);
    }
  }
  return {phi, FiniteRelation(FiniteMetricSpace(n, std::move(dist)), std::move(adj))};
}

std::string same_distances(const TraceReport& a, const TraceReport& b) {
  if (a.entries.size() != b.entries.size() || a.passed != b.passed) return "verdicts differ";
  for (std::size_t e = 0; e < a.entries.size(); ++e) {
    if (a.entries[e].distance != b.entries[e].distance) return "distance differs at entry " + std::to_string(e);
  }
  return {};
}

}  // namespace

PropertyVerdict conjugacy_invariance(std::uint64_t seed, std::size_t count) {
  return run_suite("conjugacy-invariance", seed, count, [](RandomSystems& rs) -> std::string {
    const auto f = rs.finite_relation(6, false);
    const auto [phi, g] = random_conjugate(rs, f);
    const Scalar eps = rs.unit_rational();
    const auto point = [&] { return rs.below(f.size()); };
    const auto spec_g = Specification<FiniteRelation>::build(g, random_requests<std::size_t>(rs, point));
    const auto spec_f = conjugacy_transport(phi, spec_g, f);
    const auto [bases, gaps] = random_initial<std::size_t>(rs, point);
    const auto ispec_g = InitialSpecification<FiniteRelation>::build(g, bases, gaps);
    const auto ispec_f = conjugacy_transport(phi, ispec_g, f);

    for (auto mode : {TraceMode::plain, TraceMode::hausdorff}) {
      for (std::size_t y = 0; y < f.size(); ++y) {
        auto problem = same_distances(check_trace(f, spec_f, y, eps, mode), check_trace(g, spec_g, phi[y], eps, mode));
        if (problem.empty()) {
          problem = same_distances(check_initial_trace(f, ispec_f, y, eps, mode),
                                   check_initial_trace(g, ispec_g, phi[y], eps, mode));
        }
        if (!problem.empty()) return to_string(mode) + " y=" + std::to_string(y) + ": " + problem;
      }
      if (found(find_tracer(f, spec_f, eps, mode)) != found(find_tracer(g, spec_g, eps, mode))) {
        return to_string(mode) + ": find_tracer verdicts differ";
      }
      if (found(find_initial_tracer(f, ispec_f, eps, mode)) != found(find_initial_tracer(g, ispec_g, eps, mode))) {
        return to_string(mode) + ": find_initial_tracer verdicts differ";
      }
    }
    return {};
  });
}

PropertyVerdict function_agreement(std::uint64_t seed, std::size_t count) {
  return run_suite("function-agreement", seed, count, [](RandomSystems& rs) -> std::string {
    const auto f = rs.finite_function(6);
    const std::size_t n = f.size();
    std::vector<std::size_t> map(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (f.related(x, y)) map[x] = y;
      }
    }
    auto power = [&](std::size_t x, std::size_t e) {
      for (std::size_t t = 0; t < e; ++t) x = map[x];
      return x;
    };
    const Scalar eps = rs.unit_rational();
    const auto point = [&] { return rs.below(n); };
    const auto requests = random_requests<std::size_t>(rs, point);
    const auto spec = Specification<FiniteRelation>::build(f, requests);
    const auto [bases, gaps] = random_initial<std::size_t>(rs, point);
    const auto ispec = InitialSpecification<FiniteRelation>::build(f, bases, gaps);

    bool any_spaced = false;
    bool any_initial = false;
    for (std::size_t y = 0; y < n; ++y) {
      bool spaced = true;
      for (const auto& r : requests) {
        for (std::size_t j = r.k; j <= r.l; ++j) spaced = spaced && !(eps < f.space().distance(power(y, j), power(r.base, j)));
      }
      bool initial = true;
      std::size_t offset = 0;
      for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = 0; j <= bases[i].second; ++j) {
          initial = initial && !(eps < f.space().distance(power(y, offset + j), power(bases[i].first, j)));
        }
        if (i < gaps.size()) offset += bases[i].second + gaps[i];
      }
      any_spaced = any_spaced || spaced;
      any_initial = any_initial || initial;
      for (auto mode : {TraceMode::plain, TraceMode::hausdorff}) {
        if (check_trace(f, spec, y, eps, mode).passed != spaced) {
          return to_string(mode) + " spaced verdict differs at y=" + std::to_string(y);
        }
        if (check_initial_trace(f, ispec, y, eps, mode).passed != initial) {
          return to_string(mode) + " initial verdict differs at y=" + std::to_string(y);
        }
      }
    }
    for (auto mode : {TraceMode::plain, TraceMode::hausdorff}) {
      if (found(find_tracer(f, spec, eps, mode)) != any_spaced) return "find_tracer disagrees with pointwise search";
      if (found(find_initial_tracer(f, ispec, eps, mode)) != any_initial) {
        return "find_initial_tracer disagrees with pointwise search";
      }
    }
    return {};
  });
}

std::vector<PropertyVerdict> implication_suite(std::uint64_t seed, std::size_t count) {
  return {hausdorff_implies_plain(seed, count), initial_round_trip(seed, count), conjugacy_invariance(seed, count),
          function_agreement(seed, count)};
}

PropertyVerdict metric_suite(std::uint64_t seed, std::size_t count) {
  return run_suite("distance-below-hausdorff", seed, count, [](RandomSystems& rs) -> std::string {
    const auto a = rs.interval_union();
    const auto b = rs.interval_union();
    if (hausdorff_distance(a, b) < set_distance(a, b)) return "d > H_d for " + a.to_string() + " and " + b.to_string();
    return {};
  });
}

PropertyVerdict automaton_periodicity_suite(std::uint64_t seed, std::size_t count) {
  return run_suite("automaton-periodicity", seed, count, [](RandomSystems& rs) -> std::string {
    const auto f = rs.box_relation(5);
    const std::size_t bound = std::size_t{1} << f.boxes().size();
    const auto automaton = f.iterate_automaton();
    for (std::size_t c = 0; c < automaton.size(); ++c) {
      const auto& seq = automaton.sequences[c];
      if (seq.distinct() > bound) return "cell " + automaton.cells[c].to_string() + " exceeds 2^r distinct images";
      const Scalar y = automaton.cells[c].sample();
      for (std::size_t j = 1; j <= seq.distinct() + 2; ++j) {
        if (automaton.at(c, j) != f.iterate(y, j)) {
          return "cell " + automaton.cells[c].to_string() + " disagrees with iteration at j=" + std::to_string(j);
        }
      }
    }
    return {};
  });
}

}  // namespace crdyn
