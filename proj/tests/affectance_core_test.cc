#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "affsel/characterization.h"
#include "affsel/errors.h"
#include "affsel/oracle.h"
#include "affsel/predicates.h"
#include "affsel/radio_network.h"
#include "affsel/synthetic.h"
#include "test_support.h"

namespace affsel {
namespace {

using testing::MakeInstance;
using testing::NaiveSelected;

TransmitterSet Set(std::size_t n, std::initializer_list<NodeIndex> members) {
  return TransmitterSet::Of(n, members);
}

// Receiver 0 hears {0,1,2}; receivers 1 and 2 each hear only themselves.
Instance RnStarWithLeaves() {
  return EncodeRadioNetwork(3, {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 2}});
}

// Every receiver hears all three transmitters.
Instance RnStar() {
  std::vector<Link> links;
  for (NodeIndex w = 0; w < 3; ++w)
    for (NodeIndex v = 0; v < 3; ++v) links.push_back({v, w});
  return EncodeRadioNetwork(3, links);
}

TEST(TotalAffectance, EmptySetIsZero) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}}, {{1, {0, 0}, 0.4}});
  EXPECT_EQ(TotalAffectance(inst, TransmitterSet(2), {0, 0}), 0.0);
}

TEST(TotalAffectance, SelfAffectanceIsZero) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  EXPECT_EQ(TotalAffectance(inst, Set(2, {0}), {0, 0}), 0.0);
}

TEST(TotalAffectance, AddsInterferers) {
  const Instance inst =
      MakeInstance(3, {{0, 0}, {1, 1}, {2, 2}}, {{1, {0, 0}, 0.4}, {2, {0, 0}, 0.4}});
  EXPECT_DOUBLE_EQ(TotalAffectance(inst, Set(3, {1, 2}), {0, 0}), 0.8);
}

TEST(TotalAffectance, UnknownLinkThrows) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  EXPECT_THROW(TotalAffectance(inst, Set(2, {0}), {1, 0}), DomainError);
  EXPECT_THROW(IsSuccessful(inst, Set(2, {0}), {1, 0}), DomainError);
}

TEST(IsSuccessful, LoneTransmitter) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  EXPECT_TRUE(IsSuccessful(inst, Set(2, {0}), {0, 0}));
}

TEST(IsSuccessful, SumOfExactlyOneFails) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}}, {{1, {0, 0}, 1.0}});
  EXPECT_FALSE(IsSuccessful(inst, Set(2, {0, 1}), {0, 0}));
}

TEST(IsSuccessful, SenderMustTransmit) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  EXPECT_FALSE(IsSuccessful(inst, Set(2, {1}), {0, 0}));
}

TEST(IsSelected, SingleSender) {
  const Instance inst = MakeInstance(1, {{0, 0}});
  EXPECT_TRUE(IsSelected(inst, Set(1, {0}), 0));
}

TEST(IsSelected, MutualBlocking) {
  const Instance inst =
      MakeInstance(2, {{0, 0}, {1, 0}, {1, 1}}, {{0, {1, 0}, 1.0}, {1, {0, 0}, 1.0}});
  EXPECT_FALSE(IsSelected(inst, Set(2, {0, 1}), 0));
}

TEST(IsSelected, OneLinkSurvives) {
  const Instance inst =
      MakeInstance(2, {{0, 0}, {1, 0}, {1, 1}}, {{1, {0, 0}, 0.9}, {0, {1, 0}, 1.0}});
  const TransmitterSet t = Set(2, {0, 1});
  EXPECT_DOUBLE_EQ(TotalAffectance(inst, t, {0, 0}), 0.9);
  EXPECT_DOUBLE_EQ(TotalAffectance(inst, t, {1, 0}), 1.0);
  EXPECT_TRUE(IsSuccessful(inst, t, {0, 0}));
  EXPECT_FALSE(IsSuccessful(inst, t, {1, 0}));
  EXPECT_TRUE(IsSelected(inst, t, 0));
}

TEST(VerifySelective, DisjointLinks) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  const SelectivityReport r = VerifySelective(inst, Schedule(2, {Set(2, {0}), Set(2, {1})}));
  EXPECT_TRUE(r.selective());
  EXPECT_EQ(r.covered, (std::vector<NodeIndex>{0, 1}));
  EXPECT_EQ(r.first_slot[0], 1u);
  EXPECT_EQ(r.first_slot[1], 2u);
}

TEST(VerifySelective, EmptyScheduleCoversNothing) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}});
  const SelectivityReport r = VerifySelective(inst, Schedule(2));
  EXPECT_EQ(r.uncovered, (std::vector<NodeIndex>{0, 1}));
  EXPECT_FALSE(r.first_slot[0].has_value());
}

TEST(VerifySelective, RnStarCollision) {
  const Instance inst = RnStarWithLeaves();
  const SelectivityReport one = VerifySelective(inst, Schedule(3, {Set(3, {0, 1, 2})}));
  EXPECT_EQ(one.uncovered, (std::vector<NodeIndex>{0}));
  const SelectivityReport two =
      VerifySelective(inst, Schedule(3, {Set(3, {0, 1, 2}), Set(3, {0})}));
  EXPECT_TRUE(two.selective());
  EXPECT_EQ(two.first_slot[0], 2u);
}

TEST(VerifySelective, MatchesPerSlotReevaluation) {
  std::mt19937_64 gen(11);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 7;
    spec.max_degree = 3;
    const Instance inst = GenerateRandomInstance(spec, seed);
    Schedule sched(spec.n);
    for (int j = 0; j < 4; ++j) {
      TransmitterSet s(spec.n);
      for (NodeIndex v = 0; v < spec.n; ++v) s.Assign(v, gen() % 3 == 0);
      sched.Append(s);
    }
    const SelectivityReport r = VerifySelective(inst, sched);
    for (NodeIndex w = 0; w < spec.n; ++w) {
      std::optional<std::size_t> first;
      for (std::size_t j = 0; j < sched.length() && !first; ++j) {
        std::vector<bool> on(spec.n);
        for (NodeIndex v = 0; v < spec.n; ++v) on[v] = sched.slot(j).Contains(v);
        if (NaiveSelected(inst, on, w)) first = j + 1;
      }
      EXPECT_EQ(r.first_slot[w], first) << "seed " << seed << " receiver " << w;
    }
  }
}

// Maximum over nonempty F of the average link total, by enumeration.
double BruteForceAbarW(const Instance& inst, NodeIndex w) {
  const auto senders = inst.topology().Senders(w);
  std::vector<double> totals;
  for (NodeIndex v : senders) {
    double t = 0.0;
    for (NodeIndex u = 0; u < inst.size(); ++u) t += inst.Affectance(u, {v, w});
    totals.push_back(t);
  }
  double best = -1.0;
  for (std::uint32_t mask = 1; mask < (1u << totals.size()); ++mask) {
    double sum = 0.0;
    int k = 0;
    for (std::size_t j = 0; j < totals.size(); ++j) {
      if (mask >> j & 1u) {
        sum += totals[j];
        ++k;
      }
    }
    best = std::max(best, sum / k);
  }
  return best;
}

TEST(MaxAvgAffectance, PicksLargestLinkTotal) {
  const Instance inst = MakeInstance(
      3, {{0, 0}, {1, 0}, {1, 1}, {2, 2}}, {{2, {0, 0}, 0.3}, {0, {1, 0}, 0.4}, {2, {1, 0}, 0.3}});
  EXPECT_NEAR(BruteForceAbarW(inst, 0), 0.7, 1e-15);
  EXPECT_NEAR(MaxAvgAffectance(inst, 0), 0.7, 1e-15);
}

TEST(MaxAvgAffectance, ZeroMatrix) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(MaxAvgAffectance(inst, 0), 0.0);
  EXPECT_EQ(Characterize(inst).abar, 0.0);
}

TEST(MaxAvgAffectance, RnDegreeMinusOne) {
  EXPECT_EQ(MaxAvgAffectance(RnStar(), 0), 2.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = GenerateRnInstance(6, 4, seed);
    for (NodeIndex w = 0; w < 6; ++w) {
      EXPECT_EQ(MaxAvgAffectance(inst, w),
                static_cast<double>(inst.topology().Senders(w).size()) - 1.0);
    }
  }
}

TEST(MaxAvgAffectance, SingletonCollapseMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 14;
    spec.max_degree = 12;
    spec.density = 0.6;
    const Instance inst = GenerateRandomInstance(spec, seed);
    for (NodeIndex w = 0; w < spec.n; ++w) {
      const double oracle = BruteForceAbarW(inst, w);
      EXPECT_LE(std::abs(MaxAvgAffectance(inst, w) - oracle), 1e-12 * std::max(1.0, oracle));
    }
  }
}

// Ā_0 = 4 with |F_0| = 2, all other receivers quiet.
Instance AbarFourInstance() {
  std::vector<Link> links{{0, 0}, {1, 0}};
  for (NodeIndex w = 1; w < 6; ++w) links.push_back({w, w});
  std::vector<testing::Triple> entries;
  for (NodeIndex u = 2; u < 6; ++u) entries.push_back({u, {0, 0}, 1.0});
  return MakeInstance(6, links, entries);
}

TEST(Characterize, ClosedForms) {
  EXPECT_DOUBLE_EQ(BaseFromC(2.0), 1.25);
  const double d = FailureConstant(1.25);
  EXPECT_NEAR(d, 0.5 + 0.6 * std::exp(-0.2), 1e-15);
  EXPECT_NEAR(d, 0.99124, 1e-5);
  EXPECT_LT(2.5 - 1.25 * std::exp(0.2), 1.0);
  EXPECT_NEAR(2.5 - 1.25 * std::exp(0.2), 0.9732, 1e-4);
}

TEST(Characterize, PhasesForAbarFour) {
  const Instance inst = AbarFourInstance();
  const Characterization ch = Characterize(inst, 2.0);
  EXPECT_EQ(ch.abar, 4.0);
  EXPECT_DOUBLE_EQ(ch.c_min, 2.0);
  EXPECT_EQ(ch.b, 1.25);
  EXPECT_EQ(ch.phases, 11u);
  EXPECT_EQ(static_cast<std::size_t>(std::ceil(std::log(8.0) / std::log(1.25))), 10u);
  const double m = std::ceil(2.0 * std::log(6.0) / std::log(1.0 / ch.d));
  EXPECT_EQ(ch.m, static_cast<std::size_t>(m));
  EXPECT_EQ(ch.SlotBound(), 11u * ch.m);
}

TEST(Characterize, RejectsViolatedOrSmallC) {
  const Instance inst = AbarFourInstance();
  try {
    Characterize(inst, 1.9);
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_NE(std::string(e.what()).find("receiver 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Characterize(inst, 1.0), ConstraintError);
}

TEST(Characterize, TightensCMinAboveOne) {
  const Characterization quiet = Characterize(MakeInstance(2, {{0, 0}, {1, 1}}));
  EXPECT_DOUBLE_EQ(quiet.c, 1.0 + kCMargin);
  EXPECT_EQ(quiet.phases, 1u);
  const Characterization star = Characterize(RnStar());
  EXPECT_DOUBLE_EQ(star.c_min, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(star.c, 1.0 + kCMargin);
  const Characterization four = Characterize(AbarFourInstance());
  EXPECT_DOUBLE_EQ(four.c, 2.0 + kCMargin);
}

TEST(Characterize, ConstantsStayInRangeOverCGrid) {
  for (int k = 1; k <= 990; ++k) {
    const double c = 1.0 + k * 0.1;
    const double b = BaseFromC(c);
    EXPECT_GT(b, 1.0);
    EXPECT_LT(b, 1.5);
    const double d = FailureConstant(b);
    EXPECT_LT(d, 1.0) << "c=" << c;
    EXPECT_GT(d, 0.0);
    EXPECT_LT(2 * b - b * std::exp((b - 1) / b), 1.0);
  }
  EXPECT_LT(FailureConstant(BaseFromC(1.0 + 1e-6)), 1.0);
}

TEST(Characterize, MultiplicityAtLeastOne) {
  EXPECT_EQ(Multiplicity(0.9, 1), 1u);
  EXPECT_EQ(Multiplicity(0.5, 4), 4u);
}

TEST(EncodeRadioNetwork, DegreeOneIsZeroMatrix) {
  const Instance inst = EncodeRadioNetwork(3, {{0, 0}, {2, 1}, {1, 2}});
  EXPECT_EQ(inst.affectance().nonzero_count(), 0u);
  EXPECT_TRUE(IsSelected(inst, Set(3, {0, 1, 2}), 0));
}

TEST(EncodeRadioNetwork, TwoSenderSubsets) {
  const Instance inst = EncodeRadioNetwork(2, {{0, 0}, {1, 0}, {1, 1}});
  EXPECT_FALSE(IsSelected(inst, Set(2, {}), 0));
  EXPECT_TRUE(IsSelected(inst, Set(2, {0}), 0));
  EXPECT_TRUE(IsSelected(inst, Set(2, {1}), 0));
  EXPECT_FALSE(IsSelected(inst, Set(2, {0, 1}), 0));
}

// Every graph on n <= 4 nodes, every transmitter subset.
TEST(EncodeRadioNetwork, UniqueTransmitterSemanticsExhaustive) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint32_t hoods = (1u << n) - 1;
    std::vector<std::uint32_t> choice(n, 1);
    while (true) {
      std::vector<Link> links;
      for (NodeIndex w = 0; w < n; ++w)
        for (NodeIndex v = 0; v < n; ++v)
          if (choice[w] >> v & 1u) links.push_back({v, w});
      const Instance inst = EncodeRadioNetwork(n, links);
      for (std::uint32_t t = 0; t < (1u << n); ++t) {
        TransmitterSet set(n);
        for (NodeIndex v = 0; v < n; ++v) set.Assign(v, t >> v & 1u);
        for (NodeIndex w = 0; w < n; ++w) {
          ASSERT_EQ(IsSelected(inst, set, w), std::popcount(choice[w] & t) == 1);
        }
      }
      std::size_t k = 0;
      while (k < n && choice[k] == hoods) choice[k++] = 1;
      if (k == n) break;
      ++choice[k];
    }
  }
}

TEST(TotalAffectance, AdditiveOnDyadicValues) {
  std::mt19937_64 gen(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 9;
    spec.max_degree = 4;
    spec.density = 0.7;
    spec.quantum_bits = 10;
    const Instance inst = GenerateRandomInstance(spec, seed);
    for (const Link& link : inst.topology().links()) {
      TransmitterSet t1(spec.n), t2(spec.n), both(spec.n);
      for (NodeIndex u = 0; u < spec.n; ++u) {
        const auto r = gen() % 3;
        if (r == 1) t1.Insert(u);
        if (r == 2) t2.Insert(u);
        if (r != 0) both.Insert(u);
      }
      EXPECT_EQ(TotalAffectance(inst, both, link),
                TotalAffectance(inst, t1, link) + TotalAffectance(inst, t2, link));
    }
  }
}

TEST(TotalAffectance, MonotoneInTransmitterSet) {
  std::mt19937_64 gen(6);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomInstanceSpec spec;
    spec.n = 8;
    const Instance inst = GenerateRandomInstance(spec, seed);
    for (const Link& link : inst.topology().links()) {
      TransmitterSet small(spec.n), large(spec.n);
      for (NodeIndex u = 0; u < spec.n; ++u) {
        const auto r = gen() % 3;
        if (r == 1) small.Insert(u);
        if (r != 0) large.Insert(u);
      }
      EXPECT_LE(TotalAffectance(inst, small, link), TotalAffectance(inst, large, link));
    }
  }
}

TEST(BruteForceMinSelective, IsolatedLinksNeedOneSlot) {
  const auto s = BruteForceMinSelective(MakeInstance(2, {{0, 0}, {1, 1}}), 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, Schedule(2, {Set(2, {0, 1})}));
}

TEST(BruteForceMinSelective, RnStarSingleton) {
  const auto s = BruteForceMinSelective(RnStar(), 3);
  ASSERT_TRUE(s.has_value());
  ASSERT_EQ(s->length(), 1u);
  EXPECT_EQ(s->slot(0).count(), 1u);
  EXPECT_TRUE(VerifySelective(RnStar(), *s).selective());
}

TEST(BruteForceMinSelective, MutuallyBlockingReceiversNeedTwo) {
  const Instance inst = MakeInstance(2, {{0, 0}, {1, 1}}, {{1, {0, 0}, 1.0}, {0, {1, 1}, 1.0}});
  for (std::uint32_t t = 1; t < 4; ++t) {
    const TransmitterSet set = TransmitterSet::Of(
        2, t == 1 ? std::vector<NodeIndex>{0} : t == 2 ? std::vector<NodeIndex>{1}
                                                       : std::vector<NodeIndex>{0, 1});
    EXPECT_LT(VerifySelective(inst, Schedule(2, {set})).covered.size(), 2u);
  }
  EXPECT_FALSE(BruteForceMinSelective(inst, 1).has_value());
  const auto s = BruteForceMinSelective(inst, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, Schedule(2, {Set(2, {0}), Set(2, {1})}));
}

TEST(BruteForceMinSelective, RefusesLargeN) {
  EXPECT_THROW(BruteForceMinSelective(GenerateRnInstance(kBruteForceMaxN + 1, 2, 1), 2),
               BudgetError);
}

}  // namespace
}  // namespace affsel
