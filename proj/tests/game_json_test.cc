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


#include "secgame/game_json.h"

#include <string>

#include "gtest/gtest.h"
#include "secgame/errors.h"
#include "secgame/multistage.h"
#include "secgame/scenarios.h"

namespace secgame {
namespace {

std::string LoadError(const Json& j) {
  try {
    GameFromJson(j);
  } catch (const MalformedInputError& e) {
    return e.what();
  }
  return "";
}

TEST(GameJsonTest, AptRoundTripsExactly) {
  const MultiStageGame g = BuildAptGame(DefaultAptParameters());
  const Json j = GameToJson(g);
  const MultiStageGame back = GameFromJson(Json::parse(j.dump()));
  EXPECT_TRUE(ValidateGame(back).empty());
  EXPECT_EQ(GameToJson(back), j);
  ASSERT_EQ(back.stages.size(), g.stages.size());
  for (std::size_t k = 0; k < g.stages.size(); ++k) {
    EXPECT_EQ(back.stages[k].payoffs1, g.stages[k].payoffs1);
    EXPECT_EQ(back.stages[k].payoffs2, g.stages[k].payoffs2);
    EXPECT_EQ(back.stages[k].transition, g.stages[k].transition);
    for (Player p : {Player::kDefender, Player::kUser})
      for (int x = 0; x < g.stages[k].num_states(); ++x)
        for (int t = 0; t < 2; ++t)
          EXPECT_EQ(back.stages[k].FeasibleActions(p, x, t),
                    g.stages[k].FeasibleActions(p, x, t));
  }
}

TEST(GameJsonTest, SchemaKeys) {
  const Json j = GameToJson(BuildAptGame(DefaultAptParameters()));
  EXPECT_EQ(j["horizon"], 2);
  EXPECT_EQ(j["initial_state"], "external");
  EXPECT_EQ(j["stages"][0]["payoffs1"].size(), 2u);
  EXPECT_EQ(j["stages"][0]["payoffs1"][0][0][0].size(), 2u);
  EXPECT_TRUE(j["stages"][0].contains("mask"));
  EXPECT_FALSE(j["stages"][2].contains("transition"));
  EXPECT_EQ(j["stages"][1]["transition"][1][0][1], "level2");
}

TEST(GameJsonTest, ErrorsNameThePath) {
  Json j = GameToJson(BuildAptGame(DefaultAptParameters()));
  Json bad = j;
  bad["stages"][1]["payoffs2"][0][1][0][1][0] = "x";
  EXPECT_NE(LoadError(bad).find("/stages/1/payoffs2/0/1/0/1/0"), std::string::npos);
  bad = j;
  bad["stages"][0]["transition"][0][0][0] = "nowhere";
  EXPECT_NE(LoadError(bad).find("unknown state"), std::string::npos);
  bad = j;
  bad["horizon"] = 3;
  EXPECT_NE(LoadError(bad).find("/horizon"), std::string::npos);
  bad = j;
  bad.erase("types");
  EXPECT_NE(LoadError(bad).find("types"), std::string::npos);
  bad = j;
  bad["stages"][2]["transition"] = j["stages"][1]["transition"];
  EXPECT_NE(LoadError(bad).find("last stage"), std::string::npos);
}

TEST(GameJsonTest, BadPriorLoadsButFailsValidation) {
  Json j = GameToJson(BuildAptGame(DefaultAptParameters()));
  j["priors"]["about_user"] = {0.6, 0.6};
  const MultiStageGame g = GameFromJson(j);
  EXPECT_FALSE(ValidateGame(g).empty());
}

TEST(GameJsonTest, ProfileAndBeliefsRoundTrip) {
  const MultiStageGame g = BuildAptGame(DefaultAptParameters());
  const HistoryTree tree(g);
  const StrategyProfile p = UniformProfile(g);
  const BeliefSystem b = ForwardPass(g, tree, p);
  const StrategyProfile p2 =
      ProfileFromJson(g, Json::parse(ProfileToJson(p).dump()));
  EXPECT_EQ(ProfileDistance(p, p2), 0.0);
  const BeliefSystem b2 =
      BeliefsFromJson(g, tree, Json::parse(BeliefsToJson(b).dump()));
  EXPECT_EQ(BeliefDistance(b, b2), 0.0);
  EXPECT_EQ(b2.user_off_path, b.user_off_path);
  EXPECT_EQ(b2.discrepancy, b.discrepancy);
}

TEST(GameJsonTest, ProfileRejectsMaskedMassAndBadShape) {
  const MultiStageGame g = BuildAptGame(DefaultAptParameters());
  Json j = ProfileToJson(UniformProfile(g));
  Json bad = j;
  // The good user may not contact an avatar at the initial stage.
  bad["user"][0][0][kGoodUser] = {0.0, 0.0, 1.0};
  EXPECT_THROW(ProfileFromJson(g, bad), MalformedInputError);
  bad = j;
  bad["defender"][1].erase(0);
  EXPECT_THROW(ProfileFromJson(g, bad), MalformedInputError);
  bad = j;
  bad["defender"][0][0][0] = {0.5, 0.6, 0.0};
  EXPECT_THROW(ProfileFromJson(g, bad), MalformedInputError);
}

TEST(GameJsonTest, BeliefsRequireTreeSize) {
  const MultiStageGame g = BuildAptGame(DefaultAptParameters());
  const HistoryTree tree(g);
  Json j = BeliefsToJson(PriorBeliefs(g, tree));
  j["user"].erase(j["user"].size() - 1);
  EXPECT_THROW(BeliefsFromJson(g, tree, j), MalformedInputError);
}

}  // namespace
}  // namespace secgame
