#include <gtest/gtest.h>

#include "crdyn/suites.hpp"
#include "crdyn/verdicts.hpp"
#include "fixtures.hpp"

using namespace crdyn;
using fixtures::iv;
using fixtures::pt;
using fixtures::q;

namespace {

template <class R>
const Certificate<R>& cert_of(const CertificateSearch<R>& r) {
  return std::get<Certificate<R>>(r);
}

template <class R>
const Refutation<R>& refutation_of(const RefutationSearch<R>& r) {
  return std::get<Refutation<R>>(r);
}

SpacedTemplate<Scalar> monica_template() { return {2, {{q(0), 1}, {q(1), 1}}}; }

}  // namespace

TEST(Certificates, MonicaCommonImage) {
  const auto f = fixtures::monica();
  const auto r = certify_common_image(f, 6);
  ASSERT_TRUE(certified(r));
  const auto& c = cert_of(r);
  EXPECT_EQ(c.tag, CertificateTag::common_image);
  EXPECT_EQ(c.n0, 2u);
  EXPECT_EQ(c.common_points.size(), 6u);
  EXPECT_TRUE(recheck(f, c));
  EXPECT_FALSE(certified(certify_common_image(f, 1)));
  EXPECT_FALSE(certified(certify_full_image(f, 6)));
  EXPECT_FALSE(certified(certify_eventual_hausdorff(f, q(1, 4), 6)));
  EXPECT_FALSE(certified(certify_trivial_fiber(f)));
}

TEST(Certificates, ExiImages) {
  const auto f = fixtures::exi();
  const auto full = certify_full_image(f, 6);
  ASSERT_TRUE(certified(full));
  EXPECT_EQ(cert_of(full).n0, 4u);
  EXPECT_TRUE(recheck(f, cert_of(full)));
  EXPECT_FALSE(certified(certify_full_image(f, 3)));

  const auto common = certify_common_image(f, 6);
  ASSERT_TRUE(certified(common));
  EXPECT_EQ(cert_of(common).n0, 2u);
  EXPECT_TRUE(recheck(f, cert_of(common)));
}

TEST(Certificates, ExiEventualHausdorff) {
  const auto f = fixtures::exi();
  const auto coarse = certify_eventual_hausdorff(f, q(1, 4), 6);
  ASSERT_TRUE(certified(coarse));
  EXPECT_EQ(cert_of(coarse).n0, 3u);
  EXPECT_EQ(cert_of(coarse).tag, CertificateTag::eventual_hausdorff);
  EXPECT_TRUE(recheck(f, cert_of(coarse)));

  const auto fine = certify_eventual_hausdorff(f, q(1, 8), 6);
  ASSERT_TRUE(certified(fine));
  EXPECT_EQ(cert_of(fine).n0, 4u);
  EXPECT_EQ(cert_of(fine).tag, CertificateTag::eventual_equal);
  EXPECT_TRUE(recheck(f, cert_of(fine)));
}

TEST(Certificates, ConstantRelation) {
  const auto f = fixtures::constant_one();
  const auto fiber = certify_trivial_fiber(f);
  ASSERT_TRUE(certified(fiber));
  EXPECT_EQ(cert_of(fiber).x0, q(1));
  EXPECT_EQ(cert_of(fiber).fiber, std::vector<std::size_t>{0});
  EXPECT_TRUE(recheck(f, cert_of(fiber)));

  const auto eventual = certify_eventual_hausdorff(f, q(1, 4), 6);
  ASSERT_TRUE(certified(eventual));
  EXPECT_EQ(cert_of(eventual).tag, CertificateTag::eventual_equal);
  EXPECT_EQ(cert_of(eventual).n0, 1u);
  EXPECT_FALSE(certified(certify_full_image(f, 6)));
}

TEST(Certificates, TrivialFiberInsideARange) {
  const BoxRelation f(iv(q(0), q(1)), {{iv(q(0), q(1, 2)), iv(q(0), q(1))}, {iv(q(1, 2), q(1)), iv(q(1, 2), q(1))}});
  const auto r = certify_trivial_fiber(f);
  ASSERT_TRUE(certified(r));
  EXPECT_EQ(cert_of(r).x0, q(1, 2));
  EXPECT_TRUE(recheck(f, cert_of(r)));

  auto forged = cert_of(r);
  forged.x0 = q(1, 4);
  EXPECT_FALSE(recheck(f, forged));
}

TEST(Certificates, FiniteTrivialFiber) {
  const auto r = certify_trivial_fiber(fixtures::golden_mean());
  ASSERT_TRUE(certified(r));
  EXPECT_EQ(cert_of(r).x0, 0u);
  EXPECT_TRUE(recheck(fixtures::golden_mean(), cert_of(r)));
  const FiniteRelation loops(FiniteMetricSpace::discrete(2), {{true, false}, {false, true}});
  EXPECT_FALSE(certified(certify_trivial_fiber(loops)));
  EXPECT_FALSE(certified(certify_common_image(loops, 8)));
}

TEST(Certificates, TamperedCertificatesFailRecheck) {
  const auto f = fixtures::exi();
  auto common = cert_of(certify_common_image(f, 6));
  common.common_points.pop_back();
  EXPECT_FALSE(recheck(f, common));

  auto moved = cert_of(certify_common_image(f, 6));
  moved.common_points.front().point = q(3, 4);
  EXPECT_FALSE(recheck(f, moved));

  auto early = cert_of(certify_full_image(f, 6));
  early.n0 = 3;
  EXPECT_FALSE(recheck(f, early));

  auto loose = cert_of(certify_eventual_hausdorff(f, q(1, 4), 6));
  loose.eps = q(1, 8);
  EXPECT_FALSE(recheck(f, loose));

  auto retagged = cert_of(certify_eventual_hausdorff(f, q(1, 4), 6));
  retagged.tag = CertificateTag::eventual_equal;
  EXPECT_FALSE(recheck(f, retagged));

  EXPECT_FALSE(recheck(fixtures::monica(), cert_of(certify_full_image(f, 6))));
}

TEST(Certificates, RequireTotalFirstProjection) {
  const BoxRelation f(iv(q(0), q(1)), {{iv(q(0), q(1, 2)), pt(q(0))}});
  EXPECT_THROW(certify_common_image(f, 3), InvalidArgument);
  EXPECT_THROW(certify_full_image(f, 3), InvalidArgument);
  EXPECT_THROW(certify_eventual_hausdorff(f, q(1), 3), InvalidArgument);
}

TEST(Refutations, MonicaHausdorffSpecification) {
  const auto f = fixtures::monica();
  const auto r = refute_property(f, PropertyTag::HSP, q(1, 4), monica_template(), {1, 10});
  ASSERT_TRUE(refuted(r));
  const auto& ref = refutation_of(r);
  ASSERT_EQ(ref.instances.size(), 10u);
  EXPECT_EQ(ref.instances[2].requests[1].k, 6u);
  for (const auto& inst : ref.instances) {
    for (const auto& cell : inst.failures.cells) EXPECT_EQ(cell.worst(), q(1));
  }
  EXPECT_TRUE(recheck(f, ref));

  auto forged = ref;
  forged.instances[0].failures.cells[0].report.entries[0].distance = q(1, 3);
  EXPECT_FALSE(recheck(f, forged));
}

TEST(Refutations, ConstantRelationInitialSpecification) {
  const auto f = fixtures::constant_one();
  const InitialTemplate<Scalar> tmpl{{{q(1), 1}, {q(0), 1}}};
  const auto r = refute_property(f, PropertyTag::ISP, q(1, 4), tmpl, {1, 10});
  ASSERT_TRUE(refuted(r));
  for (const auto& inst : refutation_of(r).instances) {
    ASSERT_EQ(inst.failures.cells.size(), 1u);
    const auto& cell = inst.failures.cells[0];
    EXPECT_EQ(cell.worst(), q(1));
    EXPECT_EQ(cell.failing_entry().segment, 2u);
    EXPECT_EQ(cell.failing_entry().j, 0u);
  }
  EXPECT_TRUE(recheck(f, refutation_of(r)));
}

TEST(Refutations, Ex3InitialSpecification) {
  const auto f = fixtures::monica();
  const InitialTemplate<Scalar> tmpl{{{q(0), 1}, {q(3, 4), 1}}};
  const auto r = refute_property(f, PropertyTag::ISP, q(1, 8), tmpl, {1, 10});
  ASSERT_TRUE(refuted(r));
  for (const auto& inst : refutation_of(r).instances) {
    const auto& cells = inst.failures.cells;
    ASSERT_EQ(cells.size(), 4u);
    EXPECT_EQ(cells[0].lower_bounds[2], q(3, 4));
    for (std::size_t c = 1; c < cells.size(); ++c) EXPECT_GE(cells[c].lower_bounds[0], q(1, 2));
  }
}

TEST(Refutations, InconclusiveWhenATracerExists) {
  const auto f = fixtures::monica();
  const SpacedTemplate<Scalar> tmpl{0, {{q(0), 1}, {q(0), 1}}};
  const auto r = refute_property(f, PropertyTag::SP, q(0), tmpl, {1, 4});
  ASSERT_FALSE(refuted(r));
  const auto& inc = std::get<Inconclusive<BoxRelation>>(r);
  EXPECT_EQ(inc.parameter, 1u);
  EXPECT_EQ(inc.witness.y, q(0));
}

TEST(Refutations, ArgumentChecks) {
  const auto f = fixtures::monica();
  EXPECT_THROW(refute_property(f, PropertyTag::ISP, q(1), monica_template(), {1, 2}), InvalidArgument);
  EXPECT_THROW(refute_property(f, PropertyTag::SP, q(1), monica_template(), {0, 2}), InvalidArgument);
  EXPECT_THROW(refute_property(f, PropertyTag::SP, q(1), monica_template(), {3, 2}), InvalidArgument);
  EXPECT_THROW(refute_property(f, PropertyTag::HSP, q(1), InitialTemplate<Scalar>{{{q(0), 1}}}, {1, 2}),
               InvalidArgument);
  EXPECT_EQ(parse_property_tag("HISP"), PropertyTag::HISP);
  EXPECT_EQ(parse_property_tag("hsp"), std::nullopt);
  EXPECT_EQ(to_string(PropertyTag::ISP), "ISP");
}

TEST(Suites, SmallRunsPass) {
  for (const auto& v : implication_suite(7, 10)) EXPECT_TRUE(v.passed()) << v.implication;
  EXPECT_TRUE(metric_suite(7, 100).passed());
  EXPECT_TRUE(automaton_periodicity_suite(7, 20).passed());
}

TEST(Suites, Reproducible) {
  const auto a = hausdorff_implies_plain(99, 20);
  const auto b = hausdorff_implies_plain(99, 20);
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.failures.size(), b.failures.size());
  EXPECT_EQ(a.seed, 99u);
}
