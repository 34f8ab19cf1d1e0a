#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "covsim/error.hpp"
#include "covsim/lts.hpp"
#include "covsim/random_systems.hpp"
#include "fixtures.hpp"

namespace covsim {
namespace {

using testing::state;

Alphabet drinks() {
  return make_alphabet({{"coin", Variance::Covariant},
                        {"coke", Variance::Contravariant},
                        {"lemonade", Variance::Contravariant}});
}

TEST(Alphabet, PartitionAndCanonicalOrder) {
  const auto a = make_alphabet({{"lemonade", Variance::Contravariant},
                                {"coin", Variance::Covariant},
                                {"coke", Variance::Contravariant}});
  EXPECT_EQ(a.names(), (std::vector<std::string>{"coin", "coke", "lemonade"}));
  EXPECT_EQ(a.names_with(Variance::Covariant), std::vector<std::string>{"coin"});
  EXPECT_EQ(a.names_with(Variance::Contravariant), (std::vector<std::string>{"coke", "lemonade"}));
  EXPECT_TRUE(a.names_with(Variance::Bivariant).empty());
  EXPECT_TRUE(a.is_covariant(*a.find("coin")));
  EXPECT_FALSE(a.is_contravariant(*a.find("coin")));
}

TEST(Alphabet, Bivariant) {
  const auto a = make_alphabet({{"a", Variance::Bivariant}});
  EXPECT_EQ(a.names_with(Variance::Bivariant), std::vector<std::string>{"a"});
  EXPECT_TRUE(a.is_covariant(0));
  EXPECT_TRUE(a.is_contravariant(0));
}

TEST(Alphabet, Errors) {
  EXPECT_THROW(make_alphabet({{"a", Variance::Covariant}, {"a", Variance::Contravariant}}),
               InvalidSystem);
  EXPECT_THROW(make_alphabet({{"", Variance::Covariant}}), InvalidSystem);
}

TEST(Lts, BuildSingleTransition) {
  const auto lts = build_lts(drinks(), {"s0", "s1"}, std::vector<NamedTransition>{{"s0", "coin", "s1"}});
  EXPECT_EQ(lts.size(), 2u);
  EXPECT_EQ(lts.transition_count(), 1u);
}

TEST(Lts, DuplicateTriplesCollapse) {
  const auto lts = build_lts(drinks(), {"s0", "s1"},
                             std::vector<NamedTransition>{{"s0", "coin", "s1"}, {"s0", "coin", "s1"}});
  EXPECT_EQ(lts.transition_count(), 1u);
}

TEST(Lts, Errors) {
  EXPECT_THROW(build_lts(drinks(), {"s0"}, std::vector<NamedTransition>{{"s0", "tea", "s0"}}),
               InvalidSystem);
  EXPECT_THROW(build_lts(drinks(), {"s0"}, std::vector<NamedTransition>{{"s0", "coin", "s9"}}),
               InvalidSystem);
  EXPECT_THROW(build_lts(drinks(), {"s0", "s0"}, std::vector<NamedTransition>{}), InvalidSystem);
  const auto lts = build_lts(drinks(), {"s0"}, std::vector<NamedTransition>{});
  EXPECT_THROW(lts.successors(1, 0), InvalidSystem);
  EXPECT_THROW(lts.successors(0, 7), InvalidSystem);
  EXPECT_THROW(lts.initials(3), InvalidSystem);
}

TEST(Lts, OnecokeIsThreeStateChain) {
  const auto file = testing::vending();
  const auto& lts = file.lts;
  const auto coin = *lts.alphabet().find("coin");
  const auto coke = *lts.alphabet().find("coke");
  const StateId s0 = state(file, "onecoke");
  ASSERT_EQ(lts.successors(s0, coin).size(), 1u);
  const StateId s1 = lts.successors(s0, coin)[0];
  ASSERT_EQ(lts.successors(s1, coke).size(), 1u);
  const StateId s2 = lts.successors(s1, coke)[0];
  EXPECT_TRUE(lts.initials(s2).empty());
  EXPECT_EQ(lts.name(s1), "onecoke_1");
  EXPECT_EQ(lts.name(s2), "onecoke_2");
  EXPECT_TRUE(lts.successors(s0, coke).empty());
}

TEST(Lts, SuccessorsReadOffCompiledFixture) {
  const auto file = testing::vending();
  const auto lemonade = *file.alphabet.find("lemonade");
  const auto succ = file.lts.successors(state(file, "cokeorlemonade_1"), lemonade);
  ASSERT_EQ(succ.size(), 1u);
  EXPECT_EQ(file.lts.name(succ[0]), "cokeorlemonade_3");

  const auto coin = *file.alphabet.find("coin");
  const auto choice = file.lts.successors(state(file, "choice_coke_lemonade"), coin);
  ASSERT_EQ(choice.size(), 2u);
  EXPECT_NE(choice[0], choice[1]);
}

TEST(Lts, Initials) {
  const auto file = testing::vending();
  const auto coin = *file.alphabet.find("coin");
  EXPECT_EQ(file.lts.initials(state(file, "onecoke")), std::vector<ActionId>{coin});
  EXPECT_EQ(file.lts.initials(state(file, "slot_machine")), std::vector<ActionId>{coin});
  EXPECT_TRUE(file.lts.initials(state(file, "0")).empty());
}

TEST(LtsProperty, InitialsMatchRawTransitions) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto alphabet = random_alphabet(seed, 1 + seed % 3);
    const auto lts = random_lts(seed, 1 + seed % 5, alphabet, 1.2);
    const auto raw = lts.transitions();
    for (StateId p = 0; p < lts.size(); ++p) {
      std::vector<ActionId> expected;
      for (const auto& t : raw)
        if (t.source == p) expected.push_back(t.action);
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      EXPECT_EQ(lts.initials(p), expected) << "seed " << seed;
      for (ActionId a = 0; a < alphabet.size(); ++a)
        for (StateId t : lts.successors(p, a)) EXPECT_LT(t, lts.size());
    }
  }
}

TEST(LtsProperty, BuildIsOrderInsensitive) {
  std::mt19937 shuffle_rng(42);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto lts = random_lts(seed, 4, random_alphabet(seed, 2), 1.5);
    std::vector<NamedTransition> named;
    for (const auto& t : lts.transitions())
      named.push_back({lts.name(t.source), lts.alphabet().name(t.action), lts.name(t.target)});
    auto states = lts.names();
    std::shuffle(named.begin(), named.end(), shuffle_rng);
    std::shuffle(states.begin(), states.end(), shuffle_rng);
    const std::vector<NamedTransition> repeats(named.begin(), named.begin() + static_cast<long>(named.size() / 2));
    named.insert(named.end(), repeats.begin(), repeats.end());
    EXPECT_EQ(build_lts(lts.alphabet(), states, named), lts) << "seed " << seed;
  }
}

TEST(Lts, DisjointUnionKeepsBothSides) {
  const auto left = random_lts(1, 3, uniform_alphabet(2, Variance::Bivariant), 1.0);
  const auto right = random_lts(2, 2, uniform_alphabet(2, Variance::Bivariant), 1.0);
  const auto u = disjoint_union(left, right);
  EXPECT_EQ(u.lts.size(), 5u);
  EXPECT_EQ(u.lts.transition_count(), left.transition_count() + right.transition_count());
  for (StateId p = 0; p < left.size(); ++p)
    for (ActionId a = 0; a < 2; ++a)
      EXPECT_EQ(u.lts.successors(u.left[p], a).size(), left.successors(p, a).size());
  EXPECT_EQ(u.lts.name(u.right[1]), "r_" + right.name(1));
}

TEST(Lts, DisjointUnionRejectsDifferentPartitions) {
  const auto left = random_lts(1, 2, uniform_alphabet(2, Variance::Covariant), 1.0);
  const auto right = random_lts(1, 2, uniform_alphabet(2, Variance::Contravariant), 1.0);
  EXPECT_THROW(disjoint_union(left, right), AlphabetMismatch);
}

TEST(Lts, RestrictToReachable) {
  const auto file = testing::vending();
  const StateId root = state(file, "onecoke");
  const auto r = restrict_to_reachable(file.lts, std::vector<StateId>{root});
  EXPECT_EQ(r.lts.names(), (std::vector<std::string>{"onecoke", "onecoke_1", "onecoke_2"}));
  EXPECT_EQ(r.lts.transition_count(), 2u);
  EXPECT_FALSE(r.map[state(file, "pluff_machine")].has_value());
}

}  // namespace
}  // namespace covsim
