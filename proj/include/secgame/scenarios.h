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


// Builders for the built-in game instances: the one-shot privilege
// escalation games, the exercise game with two states of nature, and the
// three-stage APT game (phishing entry, privilege escalation, sensor access).

#ifndef SECGAME_SCENARIOS_H_
#define SECGAME_SCENARIOS_H_

#include <array>
#include <string>
#include <vector>

#include "secgame/game.h"
#include "secgame/static_solver.h"

namespace secgame {

// Type indices shared by the escalation and APT builders.
inline constexpr int kHighType = 0;   // θᴴ
inline constexpr int kLowType = 1;    // θᴸ
inline constexpr int kBadUser = 0;    // θᵇ
inline constexpr int kGoodUser = 1;   // θᵍ

struct AptParameters {
  // Initial stage: deployment fees, legitimate reward, attacker reward,
  // penalties by defender type, avatar reward.
  double c1_0 = 1.0, c2_0 = 2.0;
  double r1_0 = 2.0, r2_0 = 4.0, r3_0 = 3.0, r4_0 = 6.0, r5_0 = 1.0;
  // Intermediate stage (privilege escalation).
  double r1 = 2.0, r2 = 4.0, r3 = 3.0, r4 = 6.0;
  // Final stage: monitoring cost and rewards, per-state operating rewards
  // under attack (r1_k) and under regular operation (r4_k).
  double c_k = 1.0, r2_k = 2.0, r3_k = 4.0;
  std::array<double, 4> r1_k = {0.0, 1.0, 2.0, 3.0};
  std::array<double, 4> r4_k = {2.0, 4.0, 8.0, 12.0};
  // Charge c₁⁰ instead of the type-dependent fee in the (CEO, Avatar) cell
  // for an adversarial user, as that cell is printed in the source table.
  bool literal_ceo_avatar_fee = false;
};

// Violated inequalities, empty when the parameters are usable.
std::vector<std::string> ValidateAptParameters(const AptParameters& p);

// Configuration defaults, chosen to satisfy every inequality. They are not
// calibrated to any system.
AptParameters DefaultAptParameters();

// K = 2 game with 2, 3 and 4 states; throws ParameterError listing the
// violated inequalities.
MultiStageGame BuildAptGame(const AptParameters& p);

// Complete-information escalation game; throws ParameterError unless all
// rewards are positive.
BimatrixGame BuildStaticGame(double r1, double r2, double r3, double r4);

// Escalation game where only the user has a type (b or g).
StaticBayesianGame BuildStaticBayesian(double r0, double r1, double r2);

// Escalation game with defender types (H, L) and user types (b, g); the
// restrict-escalate reward is r4 against H and r3 against L.
StaticBayesianGame BuildEscalationGame(double r1, double r2, double r3,
                                       double r4);

// Exercise game: two states of nature seen (or not) by the row player,
// prior (0.5, 0.5).
StaticBayesianGame BuildExerciseQb(
    InformationStructure info = InformationStructure::kUninformed);

struct ScenarioInfo {
  std::string name;
  std::string description;
};
std::vector<ScenarioInfo> ListScenarios();

}  // namespace secgame

#endif  // SECGAME_SCENARIOS_H_
