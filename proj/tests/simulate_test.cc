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


#include "secgame/simulate.h"

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "secgame/errors.h"
#include "secgame/multistage.h"
#include "secgame/random.h"

namespace secgame {
namespace {

// Chain of `stages` one-action stages paying `pay` to both players.
MultiStageGame Chain(int stages, double pay) {
  MultiStageGame g;
  g.types1 = {"d"};
  g.types2 = {"u"};
  g.prior_about1 = {1.0};
  g.prior_about2 = {1.0};
  for (int k = 0; k < stages; ++k) {
    StageGame s = StageGame::Create({"x"}, {"a"}, {"b"}, 1, 1);
    s.SetPayoffs(0, 0, 0, 0, 0, pay, pay);
    if (k + 1 < stages) s.SetTransition(0, 0, 0, 0);
    g.stages.push_back(s);
  }
  return g;
}

MultiStageGame RandomGame(std::uint64_t seed) {
  Rng rng(seed);
  MultiStageGame g;
  g.types1 = {"H", "L"};
  g.types2 = {"b", "g"};
  g.prior_about1 = {0.3, 0.7};
  g.prior_about2 = {0.6, 0.4};
  for (int k = 0; k < 2; ++k) {
    StageGame s = StageGame::Create(k == 0 ? std::vector<std::string>{"s"}
                                           : std::vector<std::string>{"p", "q"},
                                    {"a0", "a1"}, {"b0", "b1"}, 2, 2);
    for (int x = 0; x < s.num_states(); ++x)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
          for (int t1 = 0; t1 < 2; ++t1)
            for (int t2 = 0; t2 < 2; ++t2)
              s.SetPayoffs(x, a1, a2, t1, t2, 10 * rng.Uniform() - 5,
                           10 * rng.Uniform() - 5);
          if (k == 0) s.SetTransition(x, a1, a2, (a1 + a2) % 2);
        }
    g.stages.push_back(s);
  }
  return g;
}

StrategyProfile RandomProfile(const MultiStageGame& g, std::uint64_t seed) {
  Rng rng(seed);
  StrategyProfile p = UniformProfile(g);
  for (Player pl : {Player::kDefender, Player::kUser})
    for (auto& stage : p.of(pl))
      for (auto& state : stage)
        for (auto& d : state)
          d = FiniteDistribution(rng.Simplex(std::vector<bool>(d.size(), true)));
  return p;
}

TEST(NoiseTest, Parse) {
  EXPECT_EQ(Noise::Parse("none").kind, Noise::Kind::kNone);
  const Noise g = Noise::Parse("gaussian:1.5");
  EXPECT_EQ(g.kind, Noise::Kind::kGaussian);
  EXPECT_EQ(g.scale, 1.5);
  EXPECT_EQ(Noise::Parse("uniform:2").kind, Noise::Kind::kUniform);
  EXPECT_EQ(Noise::Parse("uniform:2").ToString(), "uniform:2");
  EXPECT_THROW(Noise::Parse("gaussian"), ParameterError);
  EXPECT_THROW(Noise::Parse("gaussian:-1"), ParameterError);
  EXPECT_THROW(Noise::Parse("laplace:1"), ParameterError);
}

TEST(SamplePlayoutTest, SingletonChainIsForced) {
  const MultiStageGame g = Chain(3, 5.0);
  const Trajectory t = SamplePlayout(g, UniformProfile(g), 1);
  ASSERT_EQ(t.stages.size(), 3u);
  for (const auto& r : t.stages) {
    EXPECT_EQ(r.action1, 0);
    EXPECT_EQ(r.payoff1, 5.0);
    EXPECT_EQ(r.noisy1, r.payoff1);
  }
}

TEST(SamplePlayoutTest, StatesChainThroughTransitions) {
  const MultiStageGame g = RandomGame(3);
  const StrategyProfile p = RandomProfile(g, 4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Trajectory t = SamplePlayout(g, p, seed);
    EXPECT_EQ(t.stages[0].state, g.initial_state);
    EXPECT_EQ(t.stages[1].state,
              g.stages[0].NextState(0, t.stages[0].action1, t.stages[0].action2));
    EXPECT_EQ(t.terminal_state, t.stages[1].state);
  }
}

TEST(SamplePlayoutTest, DeterministicAndNoiseIsolated) {
  const MultiStageGame g = RandomGame(5);
  const StrategyProfile p = RandomProfile(g, 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Trajectory a = SamplePlayout(g, p, seed);
    const Trajectory b = SamplePlayout(g, p, seed);
    const Trajectory n = SamplePlayout(g, p, seed, Noise::Parse("gaussian:1.0"));
    EXPECT_EQ(a.type1, n.type1);
    EXPECT_EQ(a.type2, n.type2);
    for (std::size_t k = 0; k < a.stages.size(); ++k) {
      EXPECT_EQ(a.stages[k].noisy1, b.stages[k].noisy1);
      EXPECT_EQ(a.stages[k].state, n.stages[k].state);
      EXPECT_EQ(a.stages[k].action1, n.stages[k].action1);
      EXPECT_EQ(a.stages[k].action2, n.stages[k].action2);
      EXPECT_EQ(a.stages[k].payoff1, n.stages[k].payoff1);
      EXPECT_NE(n.stages[k].noisy1, n.stages[k].payoff1);
    }
  }
}

TEST(MonteCarloTest, ZeroPayoffs) {
  const MultiStageGame g = Chain(2, 0.0);
  const auto r = MonteCarloValue(g, UniformProfile(g), 100, 1);
  EXPECT_EQ(r.defender[0].count, 100);
  EXPECT_EQ(r.defender[0].mean, 0.0);
  EXPECT_EQ(r.defender[0].std_error, 0.0);
}

TEST(MonteCarloTest, ChainSumsExactly) {
  const MultiStageGame g = Chain(3, 5.0);
  const auto r = MonteCarloValue(g, UniformProfile(g), 10, 1);
  EXPECT_EQ(r.defender[0].mean, 15.0);
  EXPECT_EQ(r.user[0].mean, 15.0);
}

TEST(MonteCarloTest, RejectsEmptySample) {
  const MultiStageGame g = Chain(1, 0.0);
  EXPECT_THROW(MonteCarloValue(g, UniformProfile(g), 0, 1), ParameterError);
}

TEST(MonteCarloTest, IndependentOfThreadCount) {
  const MultiStageGame g = RandomGame(7);
  const StrategyProfile p = RandomProfile(g, 8);
  const auto a = MonteCarloValue(g, p, 20000, 9, {}, 1);
  const auto b = MonteCarloValue(g, p, 20000, 9, {}, 3);
  for (int t = 0; t < 2; ++t) {
    EXPECT_EQ(a.defender[t].mean, b.defender[t].mean);
    EXPECT_EQ(a.user[t].std_error, b.user[t].std_error);
  }
}

TEST(MonteCarloTest, NoisyMeanNearCleanMean) {
  const MultiStageGame g = RandomGame(11);
  const StrategyProfile p = RandomProfile(g, 12);
  const auto r = MonteCarloValue(g, p, 100000, 13, Noise::Parse("gaussian:1.0"));
  for (Player pl : {Player::kDefender, Player::kUser}) {
    for (const auto& c : r.of(pl)) {
      EXPECT_LE(std::abs(c.mean - c.clean_mean), 3 * c.std_error);
      EXPECT_GT(c.std_error, c.clean_std_error);
    }
  }
}

TEST(MonteCarloTest, MatchesCumulativeUtility) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const MultiStageGame g = RandomGame(20 + seed);
    const StrategyProfile p = RandomProfile(g, 30 + seed);
    const BeliefSystem b = ForwardPass(g, HistoryTree(g), p);
    const auto r = MonteCarloValue(g, p, 100000, seed);
    for (int t = 0; t < 2; ++t) {
      const auto [u1, ignored1] = CumulativeUtility(g, p, b, t, 0);
      const auto [ignored2, u2] = CumulativeUtility(g, p, b, 0, t);
      EXPECT_LE(std::abs(r.defender[t].mean - u1), 3 * r.defender[t].std_error);
      EXPECT_LE(std::abs(r.user[t].mean - u2), 3 * r.user[t].std_error);
    }
  }
}

TEST(MonteCarloTest, TypeCountsFollowPrior) {
  const MultiStageGame g = RandomGame(40);
  const auto r = MonteCarloValue(g, RandomProfile(g, 41), 100000, 42);
  EXPECT_EQ(r.defender[0].count + r.defender[1].count, 100000);
  EXPECT_NEAR(r.defender[0].count / 1e5, 0.3, 0.01);
  EXPECT_NEAR(r.user[0].count / 1e5, 0.6, 0.01);
}

}  // namespace
}  // namespace secgame
