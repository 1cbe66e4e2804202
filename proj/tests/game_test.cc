// Copyright 2026 The secgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secgame/game.h"

#include <random>

#include <gtest/gtest.h>

#include "secgame/errors.h"

namespace secgame {
namespace {

MultiStageGame TwoByTwo() {
  MultiStageGame g;
  g.types1 = {"t"};
  g.types2 = {"u"};
  g.prior_about1 = {1.0};
  g.prior_about2 = {1.0};
  g.stages.push_back(StageGame::Create({"s"}, {"A", "B"}, {"a", "b"}, 1, 1));
  return g;
}

MultiStageGame TwoStageChain() {
  MultiStageGame g = TwoByTwo();
  g.stages[0].SetTransition(0, 0, 0, 0);
  g.stages[0].SetTransition(0, 0, 1, 1);
  g.stages[0].SetTransition(0, 1, 0, 1);
  g.stages[0].SetTransition(0, 1, 1, 0);
  g.stages.push_back(StageGame::Create({"p", "q"}, {"A"}, {"a"}, 1, 1));
  return g;
}

TEST(ValidateGameTest, WellFormedGameHasNoViolations) {
  EXPECT_TRUE(ValidateGame(TwoByTwo()).empty());
  EXPECT_TRUE(ValidateGame(TwoStageChain()).empty());
}

TEST(ValidateGameTest, DanglingTransition) {
  MultiStageGame g = TwoStageChain();
  g.stages[0].SetTransition(0, 1, 1, 5);
  const auto v = ValidateGame(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("dangling transition"), std::string::npos);
}

TEST(ValidateGameTest, PriorNotNormalized) {
  MultiStageGame g = TwoByTwo();
  g.types2 = {"b", "g"};
  g.prior_about2 = {0.6, 0.6};
  g.stages[0] = StageGame::Create({"s"}, {"A", "B"}, {"a", "b"}, 1, 2);
  const auto v = ValidateGame(g);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("not normalized"), std::string::npos);
}

TEST(ValidateGameTest, MissingTransitionAndBadShapes) {
  MultiStageGame g = TwoStageChain();
  g.stages[0].transition.clear();
  EXPECT_FALSE(ValidateGame(g).empty());
  g = TwoByTwo();
  g.stages[0].payoffs1.pop_back();
  EXPECT_FALSE(ValidateGame(g).empty());
  g = TwoByTwo();
  g.stages[0].SetFeasible(Player::kUser, 0, 0, 0, false);
  g.stages[0].SetFeasible(Player::kUser, 0, 0, 1, false);
  EXPECT_FALSE(ValidateGame(g).empty());
  EXPECT_THROW(RequireValidGame(g), MalformedInputError);
}

TEST(TransitionTest, TotalOverAllTriples) {
  const MultiStageGame g = TwoStageChain();
  const StageGame& s = g.stages[0];
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      const int y = Transition(s, 0, a1, a2);
      EXPECT_GE(y, 0);
      EXPECT_LT(y, g.stages[1].num_states());
    }
  }
  EXPECT_THROW(Transition(s, 0, 2, 0), MalformedInputError);
  EXPECT_THROW(Transition(g.stages[1], 0, 0, 0), MalformedInputError);
}

TEST(ExpectedStagePayoffTest, KnownAdversaryRestrictEscalate) {
  // Privilege escalation stage with r3 = 3 (low type) and r4 = 6 (high).
  const double r1 = 2, r2 = 4, r3 = 3, r4 = 6;
  StageGame s = StageGame::Create({"x"}, {"Permit", "Restrict"},
                                  {"NOP", "Escalate"}, 2, 2);
  for (int t1 = 0; t1 < 2; ++t1) {
    const double r0 = t1 == 0 ? r4 : r3;  // types {H, L}
    s.SetPayoffs(0, 0, 1, t1, 0, -r2, r2);
    s.SetPayoffs(0, 1, 1, t1, 0, r0, -r0);
    s.SetPayoffs(0, 0, 1, t1, 1, r1, r1);
    s.SetPayoffs(0, 1, 1, t1, 1, -r1, -r1);
  }
  const auto restrict = FiniteDistribution::PointMass(2, 1);
  const auto escalate = FiniteDistribution::PointMass(2, 1);
  const double v = ExpectedStagePayoff(
      s, 0, {restrict, restrict}, {escalate, escalate},
      FiniteDistribution({0.5, 0.5}), FiniteDistribution::PointMass(2, 0),
      Player::kDefender, 1);
  EXPECT_DOUBLE_EQ(v, r3);
}

TEST(ExpectedStagePayoffTest, ZeroPayoffs) {
  const MultiStageGame g = TwoByTwo();
  EXPECT_EQ(ExpectedStagePayoff(g.stages[0], 0,
                                {FiniteDistribution::Uniform(2)},
                                {FiniteDistribution::Uniform(2)},
                                FiniteDistribution({1.0}),
                                FiniteDistribution({1.0}), Player::kUser,
                                std::nullopt),
            0.0);
}

TEST(ExpectedStagePayoffTest, UniformPlayOnFirstExerciseMatrix) {
  MultiStageGame g = TwoByTwo();
  StageGame& s = g.stages[0];
  s.SetPayoffs(0, 0, 0, 0, 0, 10, 10);
  s.SetPayoffs(0, 0, 1, 0, 0, 18, 4);
  s.SetPayoffs(0, 1, 0, 0, 0, 7, 19);
  s.SetPayoffs(0, 1, 1, 0, 0, 17, 17);
  const auto u = FiniteDistribution::Uniform(2);
  EXPECT_DOUBLE_EQ(ExpectedStagePayoff(s, 0, {u}, {u}, FiniteDistribution({1.0}),
                                       FiniteDistribution({1.0}),
                                       Player::kDefender, 0),
                   13.0);
}

TEST(ExpectedStagePayoffTest, DimensionMismatchThrows) {
  const MultiStageGame g = TwoByTwo();
  EXPECT_THROW(ExpectedStagePayoff(g.stages[0], 0,
                                   {FiniteDistribution::Uniform(3)},
                                   {FiniteDistribution::Uniform(2)},
                                   FiniteDistribution({1.0}),
                                   FiniteDistribution({1.0}),
                                   Player::kDefender, std::nullopt),
               MalformedInputError);
}

FiniteDistribution RandomDistribution(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  std::vector<double> w(n);
  for (double& x : w) x = u(rng);
  return FiniteDistribution::Normalized(w);
}

// Explicit four-fold sum over types and actions.
double BruteForcePayoff(const StageGame& s, const std::vector<FiniteDistribution>& s1,
                        const std::vector<FiniteDistribution>& s2,
                        const FiniteDistribution& about1,
                        const FiniteDistribution& about2, Player p) {
  double total = 0.0;
  for (int t1 = 0; t1 < 2; ++t1)
    for (int t2 = 0; t2 < 2; ++t2)
      for (int a1 = 0; a1 < 3; ++a1)
        for (int a2 = 0; a2 < 3; ++a2)
          total += about1[t1] * about2[t2] * s1[t1][a1] * s2[t2][a2] *
                   s.Payoff(p, 0, a1, a2, t1, t2);
  return total;
}

TEST(ExpectedStagePayoffTest, MatchesFourFoldSumAndIsBilinear) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pay(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    StageGame s = StageGame::Create({"x"}, {"a", "b", "c"}, {"d", "e", "f"}, 2, 2);
    for (double& v : s.payoffs1) v = pay(rng);
    for (double& v : s.payoffs2) v = pay(rng);
    std::vector<FiniteDistribution> s1 = {RandomDistribution(3, rng),
                                          RandomDistribution(3, rng)};
    std::vector<FiniteDistribution> s2 = {RandomDistribution(3, rng),
                                          RandomDistribution(3, rng)};
    const auto b1 = RandomDistribution(2, rng);
    const auto b2 = RandomDistribution(2, rng);
    for (Player p : {Player::kDefender, Player::kUser}) {
      EXPECT_NEAR(ExpectedStagePayoff(s, 0, s1, s2, b1, b2, p, std::nullopt),
                  BruteForcePayoff(s, s1, s2, b1, b2, p), 1e-12);
    }
    // Mixing two defender strategies mixes the payoff linearly.
    const auto alt = RandomDistribution(3, rng);
    std::vector<double> mix(3);
    for (int a = 0; a < 3; ++a) mix[a] = 0.3 * s1[0][a] + 0.7 * alt[a];
    auto pay_with = [&](const FiniteDistribution& d) {
      return ExpectedStagePayoff(s, 0, {d, s1[1]}, s2, b1, b2, Player::kUser,
                                 std::nullopt);
    };
    EXPECT_NEAR(pay_with(FiniteDistribution(mix)),
                0.3 * pay_with(s1[0]) + 0.7 * pay_with(alt), 1e-12);
  }
}

TEST(HistoryTreeTest, ChildrenFollowTransitions) {
  const MultiStageGame g = TwoStageChain();
  HistoryTree tree(g);
  EXPECT_EQ(tree.size(), 5);
  EXPECT_EQ(tree.NodesAtStage(1).size(), 4u);
  const int c = tree.Child(0, 1, 0);
  EXPECT_EQ(tree.node(c).state, 1);
  EXPECT_EQ(tree.History(c), (std::vector<std::pair<int, int>>{{1, 0}}));
  EXPECT_THROW(HistoryTree(g, 3), SizeLimitError);
}

TEST(StrategyProfileTest, UniformRespectsMasks) {
  MultiStageGame g = TwoByTwo();
  g.stages[0].SetFeasible(Player::kDefender, 0, 0, 1, false);
  StrategyProfile p = UniformProfile(g);
  EXPECT_TRUE(ValidateProfile(g, p).empty());
  EXPECT_DOUBLE_EQ(p.At(Player::kDefender, 0, 0, 0)[1], 0.0);
  p.defender[0][0][0] = FiniteDistribution::Uniform(2);
  EXPECT_EQ(ValidateProfile(g, p).size(), 1u);
  EXPECT_DOUBLE_EQ(ProfileDistance(p, UniformProfile(g)), 0.5);
}

}  // namespace
}  // namespace secgame
