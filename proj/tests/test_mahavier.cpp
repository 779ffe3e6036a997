#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crdyn/mahavier.hpp"
#include "crdyn/random_systems.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace crdyn;
using fixtures::q;

namespace {

std::vector<std::size_t> prefix_oracle(const EPSequence& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t m = 1; m <= n; ++m) out.push_back(m <= s.preperiod().size()
                                                         ? s.preperiod()[m - 1]
                                                         : s.cycle()[(m - 1 - s.preperiod().size()) % s.cycle().size()]);
  return out;
}

EPSequence random_sequence(std::mt19937_64& rng, const FiniteRelation& f, std::size_t max_pre, std::size_t max_cycle) {
  for (;;) {
    Word pre(rng() % (max_pre + 1));
    Word cyc(1 + rng() % max_cycle);
    for (auto& s : pre) s = rng() % f.size();
    for (auto& s : cyc) s = rng() % f.size();
    EPSequence e(pre, cyc);
    if (e.admissible(f)) return e;
  }
}

}  // namespace

TEST(Words, GoldenMeanCountsMatchMatrixPowers) {
  const auto f = fixtures::golden_mean();
  for (std::size_t len = 1; len <= 10; ++len) {
    const auto words = admissible_words(f, len);
    EXPECT_EQ(words.size(), oracle::word_count(f.adjacency(), len)) << len;
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    EXPECT_TRUE(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) EXPECT_TRUE(is_admissible(f, w));
  }
  EXPECT_EQ(admissible_words(f, 10).size(), 144u);
  EXPECT_THROW(admissible_words(f, 0), InvalidArgument);
}

TEST(Words, RandomRelationsMatchMatrixPowers) {
  RandomSystems rs(5);
  for (int t = 0; t < 40; ++t) {
    const auto f = rs.finite_relation(4);
    for (std::size_t len = 1; len <= 6; ++len) EXPECT_EQ(admissible_words(f, len).size(), oracle::word_count(f.adjacency(), len));
  }
}

TEST(TransitionMatrix, MixingIndex) {
  EXPECT_EQ(mixing_index(TransitionMatrix({{true, true}, {true, false}}), 10), 2u);
  EXPECT_EQ(mixing_index(TransitionMatrix::of(fixtures::full_shift()), 10), 1u);
  EXPECT_EQ(mixing_index(TransitionMatrix({{false, true}, {true, false}}), 20), std::nullopt);
  EXPECT_EQ(mixing_index(TransitionMatrix({{true, false}, {false, true}}), 20), std::nullopt);
  EXPECT_EQ(mixing_index(TransitionMatrix({{true, true}, {true, false}}), 1), std::nullopt);
  // Wielandt's extremal matrix on 3 points needs (3-1)^2 + 1 = 5 steps.
  EXPECT_EQ(mixing_index(TransitionMatrix({{false, true, false}, {false, false, true}, {true, true, false}}), 10), 5u);
  EXPECT_THROW(TransitionMatrix({{true, true}, {true}}), SizeMismatchError);
}

TEST(TransitionMatrix, ConnectingWords) {
  const auto golden = TransitionMatrix::of(fixtures::golden_mean());
  EXPECT_EQ(connecting_word(golden, 1, 1, 1), std::nullopt);
  EXPECT_EQ(connecting_word(golden, 1, 1, 2), (Word{1, 0, 1}));
  EXPECT_EQ(connecting_word(TransitionMatrix::of(fixtures::full_shift()), 0, 1, 3), (Word{0, 0, 0, 1}));
  EXPECT_EQ(connecting_word(golden, 0, 0, 0), (Word{0}));
  EXPECT_EQ(connecting_word(golden, 0, 1, 0), std::nullopt);
  EXPECT_THROW(connecting_word(golden, 0, 2, 1), InvalidArgument);
}

TEST(TransitionMatrix, Surjectivity) {
  const auto s = check_surjectivity(fixtures::golden_mean());
  EXPECT_TRUE(s.first_full && s.second_full);
  const auto t = check_surjectivity(FiniteRelation::from_pairs(FiniteMetricSpace::discrete(2), {{0, 0}, {1, 0}}));
  EXPECT_TRUE(t.first_full);
  EXPECT_FALSE(t.second_full);
  const auto b = check_surjectivity(fixtures::constant_one());
  EXPECT_TRUE(b.first_full);
  EXPECT_FALSE(b.second_full);
}

TEST(EPSequence, ParseAndPrint) {
  const auto s = EPSequence::parse("0,1(1,0)");
  ASSERT_TRUE(s);
  EXPECT_EQ(s->preperiod(), (Word{0, 1}));
  EXPECT_EQ(s->cycle(), (Word{1, 0}));
  EXPECT_EQ(s->to_string(), "0,1(1,0)");
  EXPECT_EQ(EPSequence::parse("(0)")->to_string(), "(0)");
  EXPECT_FALSE(EPSequence::parse("0,1"));
  EXPECT_FALSE(EPSequence::parse("()"));
  EXPECT_FALSE(EPSequence::parse("0,(1)"));
  EXPECT_THROW(EPSequence({0}, {}), InvalidArgument);
  EXPECT_THROW(s->symbol(0), InvalidArgument);
}

TEST(EPSequence, CanonicalForms) {
  EXPECT_EQ(EPSequence({0, 1}, {0, 1, 0, 1}).canonical().to_string(), "(0,1)");
  EXPECT_EQ(EPSequence({1, 1}, {1}).canonical().to_string(), "(1)");
  EXPECT_EQ(EPSequence({1}, {1, 0}).canonical().to_string(), "1(1,0)");
  EXPECT_EQ(EPSequence({0, 1}, {1, 0}), EPSequence({0, 1, 1}, {0, 1}));
  EXPECT_NE(EPSequence({1}, {1, 0}), EPSequence({}, {1, 0}));
  EXPECT_EQ(EPSequence({}, {1, 0}).shift_forward(), EPSequence({}, {0, 1}));
}

TEST(EPSequence, CanonicalAgreesWithPrefixes) {
  std::mt19937_64 rng(17);
  const auto f = fixtures::full_shift();
  for (int t = 0; t < 500; ++t) {
    const auto a = random_sequence(rng, f, 6, 6);
    const auto b = random_sequence(rng, f, 6, 6);
    const auto c = a.canonical();
    const std::size_t horizon = 12 + std::lcm(a.cycle().size(), b.cycle().size());
    EXPECT_EQ(prefix_oracle(c, 40), prefix_oracle(a, 40));
    EXPECT_EQ(c.canonical().to_string(), c.to_string());
    EXPECT_LE(c.preperiod().size() + c.cycle().size(), a.preperiod().size() + a.cycle().size());
    EXPECT_EQ(a == b, prefix_oracle(a, horizon) == prefix_oracle(b, horizon));
    EXPECT_EQ(a.prefix(20), prefix_oracle(a, 20));
    const std::size_t j = rng() % 9;
    auto shifted = prefix_oracle(a, 30 + j);
    shifted.erase(shifted.begin(), shifted.begin() + static_cast<long>(j));
    EXPECT_EQ(prefix_oracle(a.shifted(j), 30), shifted);
  }
}

TEST(BiEPSequence, SymbolsShiftsAndCanonical) {
  const BiEPSequence a({0}, {0, 1}, {1}, 0);
  const BiEPSequence b({0}, {0, 0, 1}, {1}, 1);
  EXPECT_EQ(a, b);
  for (std::int64_t i = -5; i <= 5; ++i) EXPECT_EQ(a.symbol(i), i <= 0 ? 0u : 1u) << i;
  EXPECT_EQ(a.canonical().to_string(), b.canonical().to_string());
  EXPECT_EQ(a.shift(BiEPSequence::Direction::forward).shift(BiEPSequence::Direction::backward), a);
  EXPECT_EQ(a.shift(BiEPSequence::Direction::forward).symbol(0), 1u);
  EXPECT_NE(a.shift(BiEPSequence::Direction::forward), a);
  const BiEPSequence p({1, 0}, {}, {1, 0}, 0);
  EXPECT_EQ(p.shift(BiEPSequence::Direction::forward).shift(BiEPSequence::Direction::forward), p);
  EXPECT_TRUE(a.admissible(fixtures::full_shift()));
  EXPECT_FALSE(a.admissible(fixtures::golden_mean()));
  EXPECT_TRUE(BiEPSequence({0}, {}, {1, 0}, 0).admissible(fixtures::golden_mean()));
  EXPECT_FALSE(BiEPSequence({1}, {}, {1}, 0).admissible(fixtures::golden_mean()));
  EXPECT_THROW(BiEPSequence({}, {0}, {1}, 0), InvalidArgument);
}

TEST(MahavierSystem, SupMetricOnDiscreteSpace) {
  const MahavierSystem sys(fixtures::full_shift());
  EXPECT_EQ(sys.sup_metric(EPSequence::constant(0), EPSequence::constant(1)), q(1, 2));
  EXPECT_EQ(sys.sup_metric(*EPSequence::parse("1,0(1)"), EPSequence::constant(1)), q(1, 4));
  EXPECT_EQ(sys.sup_metric(*EPSequence::parse("(0,1)"), *EPSequence::parse("0(1,0)")), q(0));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_sequence(rng, sys.relation(), 8, 4);
    const auto b = random_sequence(rng, sys.relation(), 8, 4);
    EXPECT_EQ(sys.sup_metric(a, b), oracle::discrete_sup_distance(a, b, 0)) << a.to_string() << " " << b.to_string();
  }
}

TEST(MahavierSystem, MetricIsNormalized) {
  const FiniteRelation f(FiniteMetricSpace(2, {q(0), q(4), q(4), q(0)}), {{true, true}, {true, true}});
  const MahavierSystem sys(f);
  EXPECT_EQ(sys.scale(), q(1, 4));
  EXPECT_EQ(sys.normalized_space().distance(0, 1), q(1));
  EXPECT_EQ(sys.sup_metric(EPSequence::constant(0), EPSequence::constant(1)), q(1, 2));
  EXPECT_FALSE(sys.powered_by().empty());
}

TEST(MahavierSystem, TraceCheckRejectsInadmissibleInput) {
  const MahavierSystem sys(fixtures::golden_mean());
  const std::vector<MahavierSegment> spec{{EPSequence::constant(0), 0, 2}};
  EXPECT_THROW(mahavier_trace_check(sys, spec, EPSequence::constant(1), q(1, 4)), InvalidArgument);
  EXPECT_THROW(mahavier_trace_check(sys, {{EPSequence::constant(1), 0, 2}}, EPSequence::constant(0), q(1, 4)),
               InvalidArgument);
  EXPECT_THROW(mahavier_trace_check(sys, {{EPSequence::constant(0), 3, 2}}, EPSequence::constant(0), q(1, 4)),
               BadRangeError);
}

TEST(Surgery, GoldenMeanExample) {
  const MahavierSystem sys(fixtures::golden_mean());
  const std::vector<MahavierSegment> spec{{*EPSequence::parse("0,1(0)"), 0, 2}, {*EPSequence::parse("(1,0)"), 5, 7}};
  const auto y = surgery_tracer(sys, spec, q(1, 4));
  ASSERT_TRUE(y);
  EXPECT_TRUE(y->admissible(sys.relation()));
  EXPECT_TRUE(mahavier_trace_check(sys, spec, *y, q(1, 4)).passed);
  EXPECT_TRUE(oracle::traces_discrete(spec, *y, q(1, 4)));
  EXPECT_FALSE(mahavier_trace_check(sys, spec, EPSequence::constant(0), q(1, 4)).passed);
  EXPECT_EQ(surgery_tracer(sys, spec, q(0)), std::nullopt);
  EXPECT_EQ(surgery_tracer(sys, spec, q(1)), spec.front().base);
}

TEST(Surgery, AgreesWithExhaustiveSearchOnGoldenMean) {
  const auto f = fixtures::golden_mean();
  const MahavierSystem sys(f);
  std::mt19937_64 rng(11);
  int built = 0;
  for (int t = 0; t < 30; ++t) {
    const auto a = random_sequence(rng, f, 2, 2);
    const auto b = random_sequence(rng, f, 2, 2);
    const std::size_t l1 = rng() % 3;
    const std::size_t k2 = l1 + 2 + rng() % 3;
    const std::vector<MahavierSegment> spec{{a, 0, l1}, {b, k2, k2 + rng() % 2}};
    const auto y = surgery_tracer(sys, spec, q(1, 4));
    const bool exists = oracle::enumerate_sequences(f, 9, 2, [&](const EPSequence& c) {
      return oracle::traces_discrete(spec, c, q(1, 4));
    });
    EXPECT_EQ(y.has_value(), exists) << a.to_string() << " " << b.to_string();
    if (y) {
      ++built;
      EXPECT_TRUE(oracle::traces_discrete(spec, *y, q(1, 4)));
      EXPECT_TRUE(mahavier_trace_check(sys, spec, *y, q(1, 4)).passed);
    }
  }
  EXPECT_GT(built, 0);
}

TEST(Surgery, RejectsOverlappingWindows) {
  const MahavierSystem sys(fixtures::full_shift());
  const std::vector<MahavierSegment> spec{{EPSequence::constant(0), 0, 3}, {EPSequence::constant(1), 3, 4}};
  EXPECT_EQ(surgery_tracer(sys, spec, q(1, 4)), std::nullopt);
  EXPECT_FALSE(oracle::enumerate_sequences(sys.relation(), 6, 2, [&](const EPSequence& c) {
    return oracle::traces_discrete(spec, c, q(1, 4));
  }));
}

TEST(OrbitEmbedding, FollowsTheFunction) {
  const auto cycle = FiniteRelation::from_pairs(FiniteMetricSpace::discrete(3), {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(orbit_embedding(cycle, 0), EPSequence({}, {0, 1, 2}));
  const auto absorbing = FiniteRelation::from_pairs(FiniteMetricSpace::discrete(2), {{0, 1}, {1, 1}});
  EXPECT_EQ(orbit_embedding(absorbing, 0).to_string(), "0(1)");
  EXPECT_THROW(orbit_embedding(fixtures::golden_mean(), 0), InvalidArgument);
}
