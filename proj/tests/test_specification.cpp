#include <gtest/gtest.h>

#include "crdyn/specification.hpp"
#include "crdyn/tracer_search.hpp"
#include "fixtures.hpp"

using namespace crdyn;
using fixtures::iv;
using fixtures::pt;
using fixtures::q;

namespace {

using BoxSpec = Specification<BoxRelation>;
using BoxInitial = InitialSpecification<BoxRelation>;

BoxSpec monica_spec() { return BoxSpec::build(fixtures::monica(), {{q(0), 2, 3}, {q(1), 9, 10}}); }

BoxInitial exi_initial(std::size_t gap) {
  return BoxInitial::build(fixtures::exi(), {{q(1, 4), 1}, {q(3, 4), 1}}, {gap});
}

}  // namespace

TEST(Specification, BuildAndSpacing) {
  const auto s = monica_spec();
  ASSERT_EQ(s.segments.size(), 2u);
  EXPECT_EQ(s.segments[0].at(2), IntervalUnion::point(q(0)));
  EXPECT_EQ(s.segments[1].at(9), IntervalUnion(iv(q(0), q(1))));
  EXPECT_TRUE(is_n_spaced(s, 6));
  EXPECT_FALSE(is_n_spaced(s, 7));
  EXPECT_THROW(BoxSpec::build(fixtures::monica(), {}), InvalidArgument);
  EXPECT_THROW(BoxSpec::build(fixtures::monica(), {{q(0), 3, 2}}), BadRangeError);
}

TEST(Specification, InitialValidation) {
  const auto f = fixtures::exi();
  EXPECT_THROW(BoxInitial::build(f, {{q(0), 1}, {q(1), 1}}, {}), SizeMismatchError);
  EXPECT_THROW(BoxInitial::build(f, {{q(0), 1}, {q(1), 1}}, {0}), InvalidArgument);
  EXPECT_THROW(BoxInitial::build(f, {}, {}), InvalidArgument);
  const auto s = exi_initial(4);
  EXPECT_EQ(s.offset(0), 0u);
  EXPECT_EQ(s.offset(1), 5u);
}

TEST(Specification, PlainTraceOfTheFixedPoint) {
  const auto r = check_trace(fixtures::monica(), monica_spec(), q(0), q(1, 4), TraceMode::plain);
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.entries.size(), 4u);
  for (const auto& e : r.entries) EXPECT_EQ(e.distance, q(0));
}

TEST(Specification, HausdorffTraceFails) {
  const auto r = check_trace(fixtures::monica(), monica_spec(), q(1, 4), q(1, 4), TraceMode::hausdorff);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.find(1, 2)->distance, q(0));
  EXPECT_EQ(r.find(1, 3)->distance, q(0));
  EXPECT_EQ(r.find(2, 9)->distance, q(1));
  EXPECT_EQ(r.find(2, 10)->distance, q(1));
  EXPECT_EQ(r.worst_entry().segment, 2u);
  EXPECT_EQ(r.worst_entry().j, 9u);
}

TEST(Specification, InitialTraceExponents) {
  const auto r = check_initial_trace(fixtures::exi(), exi_initial(4), q(1, 2), q(1, 4), TraceMode::hausdorff);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.find(1, 0)->exponent, 0u);
  EXPECT_EQ(r.find(2, 0)->exponent, 5u);
  EXPECT_EQ(r.find(2, 1)->exponent, 6u);
  EXPECT_EQ(r.find(1, 0)->distance, q(1, 4));
  EXPECT_EQ(r.find(1, 1)->distance, q(1));
  EXPECT_EQ(r.find(2, 0)->distance, q(3, 4));
  EXPECT_EQ(r.find(2, 1)->distance, q(1));
}

TEST(Specification, EpsilonIsInclusive) {
  const auto s = BoxInitial::build(fixtures::exi(), {{q(1, 4), 0}}, {});
  EXPECT_TRUE(check_initial_trace(fixtures::exi(), s, q(1, 2), q(1, 4), TraceMode::plain).passed);
  EXPECT_FALSE(check_initial_trace(fixtures::exi(), s, q(1, 2), q(1, 5), TraceMode::plain).passed);
}

TEST(Specification, DeriveInitial) {
  const auto f = fixtures::monica();
  const auto single = derive_initial(f, BoxSpec::build(f, {{q(1), 1, 2}}));
  EXPECT_EQ(single.bases, std::vector<Scalar>{q(0)});
  EXPECT_EQ(single.spec.segments[0].l, 1u);

  const auto two = derive_initial(f, monica_spec());
  EXPECT_EQ(two.bases, (std::vector<Scalar>{q(0), q(0)}));
  EXPECT_EQ(two.spec.gaps, std::vector<std::size_t>{6});

  try {
    derive_initial(f, BoxSpec::build(f, {{q(0), 2, 3}, {q(1), 3, 4}}));
    FAIL();
  } catch (const NonPositiveGapError& e) {
    EXPECT_EQ(e.segment(), 2u);
  }
}

TEST(Specification, LiftTracer) {
  const auto f = fixtures::monica();
  const auto s = BoxSpec::build(f, {{q(1), 1, 2}});
  EXPECT_EQ(lift_tracer(f, s, q(0)), IntervalUnion::normalize({iv(q(0), q(1, 2)), pt(q(1))}));
  EXPECT_EQ(lift_tracer(f, s, q(3, 4)), IntervalUnion::point(q(1)));
  const auto at_zero = BoxSpec::build(f, {{q(1), 0, 2}});
  EXPECT_EQ(lift_tracer(f, at_zero, q(1, 3)), IntervalUnion::point(q(1, 3)));

  const auto g = BoxRelation(iv(q(0), q(1)), {{iv(q(0), q(1)), pt(q(1))}});
  EXPECT_THROW(lift_tracer(g, BoxSpec::build(g, {{q(0), 1, 1}}), q(0)), NoPreimageError);
}

TEST(Specification, ConjugacyTransport) {
  const auto f = fixtures::golden_mean();
  const std::vector<std::size_t> swap{1, 0};
  const auto g = FiniteRelation::from_pairs(FiniteMetricSpace::discrete(2), {{1, 1}, {1, 0}, {0, 1}});
  const auto s = Specification<FiniteRelation>::build(g, {{0, 0, 1}, {1, 3, 4}});
  const auto t = conjugacy_transport(swap, s, f);
  EXPECT_EQ(t.segments[0].base, 1u);
  EXPECT_EQ(t.segments[1].base, 0u);
  EXPECT_EQ(t.segments[1].k, 3u);

  const auto si = InitialSpecification<FiniteRelation>::build(g, {{0, 1}, {0, 2}}, {3});
  const auto ti = conjugacy_transport(swap, si, f);
  EXPECT_EQ(ti.segments[0].base, 1u);
  EXPECT_EQ(ti.gaps, std::vector<std::size_t>{3});

  EXPECT_THROW(conjugacy_transport({0, 0}, s, f), InvalidArgument);
  EXPECT_THROW(conjugacy_transport({0}, s, f), SizeMismatchError);
}

TEST(TracerSearch, FixedPointTracesExactly) {
  const auto r = find_tracer(fixtures::monica(), monica_spec(), q(0), TraceMode::plain);
  ASSERT_TRUE(found(r));
  const auto& w = std::get<TracerWitness<BoxRelation>>(r);
  EXPECT_TRUE(check_trace(fixtures::monica(), monica_spec(), w.y, q(0), TraceMode::plain).passed);
}

TEST(TracerSearch, NoHausdorffTracerForMonica) {
  const auto r = find_tracer(fixtures::monica(), monica_spec(), q(1, 4), TraceMode::hausdorff);
  ASSERT_FALSE(found(r));
  const auto& cells = std::get<NoTracer<BoxRelation>>(r).cells;
  ASSERT_EQ(cells.size(), 4u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.worst(), q(1));
    EXPECT_FALSE(c.constraints_infeasible);
    EXPECT_FALSE(c.report.passed);
  }
}

TEST(TracerSearch, ExiInitialTablePerCell) {
  const auto r = find_initial_tracer(fixtures::exi(), exi_initial(4), q(1, 4), TraceMode::hausdorff);
  ASSERT_FALSE(found(r));
  const auto& cells = std::get<NoTracer<BoxRelation>>(r).cells;
  ASSERT_EQ(cells.size(), 5u);
  for (const auto& c : cells) EXPECT_EQ(c.worst(), q(1));
  // The cell {0}: F(0) = [0,1/2] and F^5(0) = [0,1].
  EXPECT_EQ(cells[0].lower_bounds[0], q(1, 4));
  EXPECT_EQ(cells[0].lower_bounds[1], q(1, 2));
  EXPECT_EQ(cells[0].lower_bounds[2], q(3, 4));
  EXPECT_EQ(cells[0].lower_bounds[3], q(1));
  // On (0,1/2) the exponent-0 entry has infimum 0 at y = 1/4.
  EXPECT_EQ(cells[1].lower_bounds[0], q(0));
}

TEST(TracerSearch, ReturnTargetAfterOneStep) {
  const auto s = BoxInitial::build(fixtures::exi(), {{q(1, 4), 1}, {q(0), 1}}, {1});
  const auto r = find_initial_tracer(fixtures::exi(), s, q(1, 4), TraceMode::hausdorff);
  ASSERT_FALSE(found(r));
  const auto& cells = std::get<NoTracer<BoxRelation>>(r).cells;
  std::vector<Scalar> entry_2_0;
  for (const auto& c : cells) entry_2_0.push_back(c.lower_bounds[2]);
  EXPECT_EQ(entry_2_0, (std::vector<Scalar>{q(1), q(1, 2), q(1), q(1), q(1)}));
}

TEST(TracerSearch, LowerBoundsHoldOnSamples) {
  const auto f = fixtures::exi();
  const auto s = exi_initial(4);
  const auto r = find_initial_tracer(f, s, q(1, 4), TraceMode::hausdorff);
  const auto& cells = std::get<NoTracer<BoxRelation>>(r).cells;
  const auto decomposition = f.cell_decomposition();
  for (long g = 0; g <= 64; ++g) {
    const Scalar y(g, 64);
    const auto& failure = cells[decomposition.locate(y)];
    const auto report = check_initial_trace(f, s, y, q(1, 4), TraceMode::hausdorff);
    for (std::size_t e = 0; e < report.entries.size(); ++e) {
      EXPECT_LE(failure.lower_bounds[e], report.entries[e].distance) << y << " entry " << e;
    }
  }
}

TEST(TracerSearch, ExponentZeroConstraintsPickAPoint) {
  const auto f = fixtures::exi();
  const auto s = BoxInitial::build(f, {{q(1, 4), 0}}, {});
  const auto r = find_initial_tracer(f, s, q(1, 8), TraceMode::plain);
  ASSERT_TRUE(found(r));
  const auto& w = std::get<TracerWitness<BoxRelation>>(r);
  EXPECT_LE(q(1, 8), w.y);
  EXPECT_LE(w.y, q(3, 8));
}

TEST(TracerSearch, FiniteLoops) {
  const auto f = FiniteRelation(FiniteMetricSpace::discrete(2), {{true, false}, {false, true}});
  const auto s = Specification<FiniteRelation>::build(f, {{0, 0, 1}, {1, 2, 3}});
  const auto r = find_tracer(f, s, q(1, 2), TraceMode::plain);
  ASSERT_FALSE(found(r));
  for (const auto& c : std::get<NoTracer<FiniteRelation>>(r).cells) EXPECT_EQ(c.worst(), q(1));
}
