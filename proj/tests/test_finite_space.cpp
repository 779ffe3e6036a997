#include <gtest/gtest.h>

#include "crdyn/errors.hpp"
#include "crdyn/finite_space.hpp"
#include "crdyn/random_systems.hpp"

using namespace crdyn;

namespace {

FiniteMetricSpace space3(long ab, long bc, long ac) {
  return FiniteMetricSpace(3, {Scalar(0), Scalar(ab), Scalar(ac), Scalar(ab), Scalar(0), Scalar(bc), Scalar(ac),
                               Scalar(bc), Scalar(0)});
}

}  // namespace

TEST(FiniteSpace, ShapeIsChecked) { EXPECT_THROW(FiniteMetricSpace(2, {Scalar(0)}), SizeMismatchError); }

TEST(FiniteSpace, ValidateMetric) {
  EXPECT_TRUE(validate_metric(space3(1, 1, 2)).ok());
  const auto tri = validate_metric(space3(1, 1, 3));
  EXPECT_EQ(tri.violation, MetricViolation::triangle);
  EXPECT_EQ(tri.where[0], 0u);
  EXPECT_EQ(tri.where[2], 2u);
  EXPECT_EQ(validate_metric(space3(0, 1, 1)).violation, MetricViolation::identity);
  auto asym = FiniteMetricSpace(2, {Scalar(0), Scalar(1), Scalar(2), Scalar(0)});
  EXPECT_EQ(validate_metric(asym).violation, MetricViolation::symmetry);
}

TEST(FiniteSpace, RandomMetricsSatisfyAxioms) {
  RandomSystems rs(99);
  for (int i = 0; i < 100; ++i) {
    const auto m = rs.metric(2 + rs.below(5));
    EXPECT_TRUE(validate_metric(m).ok()) << validate_metric(m).describe();
  }
}

TEST(FiniteSpace, SetDistances) {
  const auto s = space3(1, 2, 3);
  const PointSet a({0});
  const PointSet b({1, 2});
  EXPECT_EQ(set_distance(s, a, b), Scalar(1));
  EXPECT_EQ(hausdorff_distance(s, a, b), Scalar(3));
  EXPECT_EQ(hausdorff_distance(s, b, b), Scalar(0));
  EXPECT_EQ(neighborhood(s, Scalar(2), a), PointSet({0, 1}));
  EXPECT_THROW(set_distance(s, PointSet(), a), EmptySetError);
  EXPECT_EQ(s.diameter(), Scalar(3));
}

TEST(FiniteSpace, DistancesAgreeWithEnumeration) {
  RandomSystems rs(5);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rs.below(5);
    const auto m = rs.metric(n);
    std::vector<std::size_t> av;
    std::vector<std::size_t> bv;
    for (std::size_t x = 0; x < n; ++x) {
      if (rs.coin()) av.push_back(x);
      if (rs.coin()) bv.push_back(x);
    }
    if (av.empty()) av.push_back(0);
    if (bv.empty()) bv.push_back(n - 1);
    Scalar inf = m.distance(av[0], bv[0]);
    Scalar sup_ab(0);
    Scalar sup_ba(0);
    for (auto x : av) {
      Scalar near = m.distance(x, bv[0]);
      for (auto y : bv) {
        inf = std::min(inf, m.distance(x, y));
        near = std::min(near, m.distance(x, y));
      }
      sup_ab = std::max(sup_ab, near);
    }
    for (auto y : bv) {
      Scalar near = m.distance(y, av[0]);
      for (auto x : av) near = std::min(near, m.distance(x, y));
      sup_ba = std::max(sup_ba, near);
    }
    EXPECT_EQ(set_distance(m, PointSet(av), PointSet(bv)), inf);
    EXPECT_EQ(hausdorff_distance(m, PointSet(av), PointSet(bv)), std::max(sup_ab, sup_ba));
  }
}
