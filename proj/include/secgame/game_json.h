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


// JSON encodings of games, profiles and belief systems.
//
// Game schema:
//   {
//     "types":  {"defender": [labels], "user": [labels]},
//     "priors": {"about_defender": [p], "about_user": [p]},
//     "initial_state": label,
//     "horizon": K,
//     "stages": [{
//       "states": [labels], "actions1": [labels], "actions2": [labels],
//       "payoffs1": [x][a1][a2][t1][t2], "payoffs2": same shape,
//       "mask": {"defender": [x][t1][a1], "user": [x][t2][a2]},  // optional
//       "transition": [x][a1][a2] of next-stage state labels  // not on stage K
//     }]
//   }
// "about_defender" is the user's prior over defender types.
//
// Loaders throw MalformedInputError naming the offending JSON path.

#ifndef SECGAME_GAME_JSON_H_
#define SECGAME_GAME_JSON_H_

#include <string>

#include "json.hpp"
#include "secgame/game.h"

namespace secgame {

using Json = nlohmann::json;

Json GameToJson(const MultiStageGame& game);
// Does not validate; call ValidateGame on the result.
MultiStageGame GameFromJson(const Json& j);

// {"defender": [k][x][t][a], "user": [k][x][t][a]}
Json ProfileToJson(const StrategyProfile& profile);
// Checks shape against `game` and rejects invalid distributions.
StrategyProfile ProfileFromJson(const MultiStageGame& game, const Json& j);

// {"defender": [node][t][..], "user": [node][t][..], "defender_off_path",
//  "user_off_path", "aggregate": [k][x]{"defender","user"}, "discrepancy"}.
// Nodes follow HistoryTree order.
Json BeliefsToJson(const BeliefSystem& beliefs);
// Only the node tables are required; aggregates, discrepancies and off-path
// flags are left empty when absent.
BeliefSystem BeliefsFromJson(const MultiStageGame& game,
                             const HistoryTree& tree, const Json& j);

// Reads and parses a JSON file; throws MalformedInputError.
Json ReadJsonFile(const std::string& path);

}  // namespace secgame

#endif  // SECGAME_GAME_JSON_H_
