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

#include "secgame/static_solver.h"

#include <array>
#include <random>

#include <gtest/gtest.h>

#include "secgame/errors.h"

namespace secgame {
namespace {

BimatrixGame Bimatrix(std::vector<std::vector<double>> j1,
                      std::vector<std::vector<double>> j2) {
  BimatrixGame g;
  const int m = static_cast<int>(j1.size());
  const int n = static_cast<int>(j1[0].size());
  g.payoff1.resize(m, n);
  g.payoff2.resize(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      g.payoff1(i, j) = j1[i][j];
      g.payoff2(i, j) = j2[i][j];
    }
  }
  return g;
}

// Rows A, B; columns a, b.
BimatrixGame ExerciseFirst() {
  return Bimatrix({{10, 18}, {7, 17}}, {{10, 4}, {19, 17}});
}
BimatrixGame ExerciseSecond() {
  return Bimatrix({{10, 18}, {14, 20}}, {{10, 18}, {18, 20}});
}
// Rows Permit, Restrict; columns NOP, Escalate.
BimatrixGame Baseline(double r1, double r2, double r3, double r4) {
  return Bimatrix({{0, -r1}, {0, r3}}, {{0, r2}, {0, -r4}});
}

// The exercise game as a static Bayesian game over the defender's type.
StaticBayesianGame Exercise(InformationStructure info) {
  StaticBayesianGame g;
  g.types1 = {"theta1", "theta2"};
  g.types2 = {"user"};
  g.prior_about1 = {0.5, 0.5};
  g.prior_about2 = {1.0};
  g.information = info;
  g.stage = StageGame::Create({"s"}, {"A", "B"}, {"a", "b"}, 2, 1);
  const BimatrixGame slices[2] = {ExerciseFirst(), ExerciseSecond()};
  for (int t = 0; t < 2; ++t) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int a2 = 0; a2 < 2; ++a2) {
        g.stage.SetPayoffs(0, a1, a2, t, 0, slices[t].payoff1(a1, a2),
                           slices[t].payoff2(a1, a2));
      }
    }
  }
  return g;
}

StaticBayesianGame UserTypes(double r0, double r1, double r2) {
  StaticBayesianGame g;
  g.types1 = {"defender"};
  g.types2 = {"b", "g"};
  g.prior_about1 = {1.0};
  g.prior_about2 = {0.5, 0.5};
  g.stage = StageGame::Create({"s"}, {"Permit", "Restrict"},
                              {"NOP", "Escalate"}, 1, 2);
  g.stage.SetPayoffs(0, 0, 1, 0, 0, -r2, r2);
  g.stage.SetPayoffs(0, 1, 1, 0, 0, r0, -r0);
  g.stage.SetPayoffs(0, 0, 1, 0, 1, r1, r1);
  g.stage.SetPayoffs(0, 1, 1, 0, 1, -r1, -r1);
  return g;
}

TEST(BestResponseSetTest, BaselineColumns) {
  const BimatrixGame g = Baseline(1, 1, 1, 1);
  EXPECT_EQ(BestResponseSet(g.payoff1, FiniteDistribution::PointMass(2, 1),
                            Player::kDefender),
            (std::vector<int>{1}));
  EXPECT_EQ(BestResponseSet(g.payoff1, FiniteDistribution::PointMass(2, 0),
                            Player::kDefender),
            (std::vector<int>{0, 1}));
  EXPECT_EQ(BestResponseSet(Eigen::MatrixXd::Zero(3, 2),
                            FiniteDistribution::Uniform(3), Player::kUser),
            (std::vector<int>{0, 1}));
}

TEST(PureNeTest, ExerciseMatrices) {
  EXPECT_EQ(PureNe(ExerciseFirst()),
            (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(PureNe(ExerciseSecond()),
            (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(ExerciseSecond().payoff1(1, 1), 20);
  EXPECT_EQ(ExerciseSecond().payoff2(1, 1), 20);
}

TEST(PureNeTest, BaselineUnitRewards) {
  EXPECT_EQ(PureNe(Baseline(1, 1, 1, 1)),
            (std::vector<std::pair<int, int>>{{1, 0}}));
}

TEST(MixedNeTest, MatchingPennies) {
  const auto eqs = MixedNe(Bimatrix({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}));
  ASSERT_EQ(eqs.size(), 1u);
  EXPECT_NEAR(eqs[0].defender[0][0], 0.5, 1e-12);
  EXPECT_NEAR(eqs[0].user[0][0], 0.5, 1e-12);
  EXPECT_NEAR(eqs[0].defender_value, 0.0, 1e-12);
  EXPECT_NEAR(eqs[0].user_value, 0.0, 1e-12);
}

TEST(MixedNeTest, ContainsPureEquilibria) {
  const auto eqs = MixedNe(ExerciseSecond());
  bool found = false;
  for (const auto& e : eqs) {
    found = found || (e.defender[0][1] == 1.0 && e.user[0][1] == 1.0);
  }
  EXPECT_TRUE(found);
}

TEST(MixedNeTest, BaselineEquilibriaReverify) {
  const BimatrixGame g = Baseline(1, 1, 1, 1);
  const auto eqs = MixedNe(g);
  ASSERT_FALSE(eqs.empty());
  for (const auto& e : eqs) {
    EXPECT_LE(EvaluateBimatrix(g, e.defender[0], e.user[0]).gap, 1e-8);
  }
}

TEST(MixedNeTest, SizeLimit) {
  BimatrixGame g;
  g.payoff1 = Eigen::MatrixXd::Zero(9, 2);
  g.payoff2 = g.payoff1;
  EXPECT_THROW(MixedNe(g), SizeLimitError);
}

TEST(MixedNeTest, DegenerateSystemsAreCounted) {
  SupportEnumerationStats stats;
  MixedNe(Bimatrix({{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}), &stats);
  EXPECT_GT(stats.candidates, 0);
  EXPECT_GT(stats.degenerate, 0);
}

TEST(MixedNeTest, RespectsMasks) {
  BimatrixGame g = Bimatrix({{0, 5}, {1, 0}}, {{0, 9}, {1, 0}});
  g.feasible2 = {true, false};
  for (const auto& e : MixedNe(g)) EXPECT_EQ(e.user[0][1], 0.0);
}

TEST(PureMixedContainmentTest, RandomGames) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pay(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    BimatrixGame g;
    g.payoff1.resize(m, n);
    g.payoff2.resize(m, n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        g.payoff1(i, j) = pay(rng);
        g.payoff2(i, j) = pay(rng);
      }
    }
    const auto mixed = MixedNe(g);
    for (const auto& e : mixed) EXPECT_LE(e.gap, kEquilibriumTolerance);
    for (auto [a1, a2] : PureNe(g)) {
      bool found = false;
      for (const auto& e : mixed) {
        found = found || (e.defender[0][a1] == 1.0 && e.user[0][a2] == 1.0);
      }
      // Pure equilibria on degenerate supports are found unless the square
      // system is singular, which happens only with payoff ties.
      if (!found) {
        const auto r = EvaluateBimatrix(g, FiniteDistribution::PointMass(m, a1),
                                        FiniteDistribution::PointMass(n, a2));
        EXPECT_LE(r.gap, 0.0);
      }
      EXPECT_TRUE(found) << "trial " << trial << " pure (" << a1 << "," << a2
                         << ") missing";
    }
  }
}

TEST(SolveBneTest, ExerciseUninformed) {
  const auto eqs = SolveBne(Exercise(InformationStructure::kUninformed));
  bool found = false;
  for (const auto& e : eqs) {
    if (e.defender[0][1] == 1.0 && e.user[0][1] == 1.0) {
      found = true;
      EXPECT_NEAR(e.defender_value, 18.5, 1e-9);
      EXPECT_NEAR(e.user_value, 18.5, 1e-9);
    }
  }
  EXPECT_TRUE(found);
}

// Exhaustive pure agent-form enumeration: defender picks one action per type,
// user one action.
std::vector<std::array<int, 3>> PureAgentFormOracle(const StaticBayesianGame& g) {
  std::vector<std::array<int, 3>> out;
  const StageGame& s = g.stage;
  auto u1 = [&](int t, int a1, int a2) {
    return s.Payoff(Player::kDefender, 0, a1, a2, t, 0);
  };
  auto u2 = [&](int x, int y, int a2) {
    return 0.5 * s.Payoff(Player::kUser, 0, x, a2, 0, 0) +
           0.5 * s.Payoff(Player::kUser, 0, y, a2, 1, 0);
  };
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a2 = 0; a2 < 2; ++a2) {
        const bool ok = u1(0, x, a2) >= u1(0, 1 - x, a2) &&
                        u1(1, y, a2) >= u1(1, 1 - y, a2) &&
                        u2(x, y, a2) >= u2(x, y, 1 - a2);
        if (ok) out.push_back({x, y, a2});
      }
  return out;
}

TEST(SolveBneTest, ExerciseDefenderInformed) {
  const StaticBayesianGame g = Exercise(InformationStructure::kPrivateTypes);
  const auto oracle = PureAgentFormOracle(g);
  ASSERT_EQ(oracle.size(), 1u);
  EXPECT_EQ(oracle[0], (std::array<int, 3>{0, 1, 0}));
  const auto eqs = SolveBne(g);
  ASSERT_FALSE(eqs.empty());
  const auto& e = eqs[0];
  EXPECT_EQ(e.defender[0][0], 1.0);
  EXPECT_EQ(e.defender[1][1], 1.0);
  EXPECT_EQ(e.user[0][0], 1.0);
  EXPECT_NEAR(e.defender_value, 12.0, 1e-9);
  EXPECT_NEAR(e.defender_values[0], 10.0, 1e-9);
  EXPECT_NEAR(e.defender_values[1], 14.0, 1e-9);
  EXPECT_NEAR(e.user_value, 14.0, 1e-9);
}

TEST(SolveBneTest, UserTypesUnitRewards) {
  const StaticBayesianGame g = UserTypes(1, 1, 1);
  const auto eqs = SolveBne(g);
  ASSERT_FALSE(eqs.empty());
  for (const auto& e : eqs) {
    const auto r = EvaluateBayesian(g, e.defender, e.user);
    for (double gap : r.defender_gaps) EXPECT_LE(gap, 1e-8);
    for (double gap : r.user_gaps) EXPECT_LE(gap, 1e-8);
  }
}

TEST(SolveBneTest, TypeMismatchThrows) {
  StaticBayesianGame g = UserTypes(1, 1, 1);
  g.prior_about2 = {1.0};
  EXPECT_THROW(SolveBne(g), MalformedInputError);
}

TEST(SolveBneTest, MaskedActionsCarryNoMass) {
  StaticBayesianGame g = UserTypes(1, 2, 3);
  g.stage.SetFeasible(Player::kUser, 0, 1, 1, false);
  for (const auto& e : SolveBne(g)) EXPECT_EQ(e.user[1][1], 0.0);
}

TEST(SolveBneTest, RoundTripThroughMultiStage) {
  const StaticBayesianGame g = UserTypes(1, 2, 3);
  const StaticBayesianGame back = FromMultiStage(ToMultiStage(g));
  EXPECT_EQ(back.stage.payoffs1, g.stage.payoffs1);
  EXPECT_EQ(back.types2, g.types2);
}

TEST(SolveBnePropertyTest, ExistenceOnRandomGames) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> pay(-10.0, 10.0);
  std::uniform_real_distribution<double> prob(0.05, 0.95);
  std::uniform_int_distribution<int> acts(2, 3);
  for (int trial = 0; trial < 200; ++trial) {
    StaticBayesianGame g;
    g.types1 = {"h", "l"};
    g.types2 = {"b", "g"};
    const double p = prob(rng), q = prob(rng);
    g.prior_about1 = {p, 1 - p};
    g.prior_about2 = {q, 1 - q};
    const int m1 = acts(rng), m2 = acts(rng);
    std::vector<std::string> a1(m1), a2(m2);
    for (int i = 0; i < m1; ++i) a1[i] = "r" + std::to_string(i);
    for (int i = 0; i < m2; ++i) a2[i] = "c" + std::to_string(i);
    g.stage = StageGame::Create({"s"}, a1, a2, 2, 2);
    for (double& v : g.stage.payoffs1) v = pay(rng);
    for (double& v : g.stage.payoffs2) v = pay(rng);
    const auto eqs = SolveBne(g);
    ASSERT_FALSE(eqs.empty()) << "trial " << trial;
    for (const auto& e : eqs) {
      EXPECT_LE(EvaluateBayesian(g, e.defender, e.user).gap, 1e-8);
    }
  }
}

}  // namespace
}  // namespace secgame
