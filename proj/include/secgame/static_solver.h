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

#ifndef SECGAME_STATIC_SOLVER_H_
#define SECGAME_STATIC_SOLVER_H_

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "secgame/distribution.h"
#include "secgame/game.h"

namespace secgame {

// Two-player one-shot game; the defender picks rows, the user columns.
struct BimatrixGame {
  Eigen::MatrixXd payoff1;
  Eigen::MatrixXd payoff2;
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  // Empty means every action is feasible.
  std::vector<bool> feasible1;
  std::vector<bool> feasible2;

  int rows() const { return static_cast<int>(payoff1.rows()); }
  int cols() const { return static_cast<int>(payoff1.cols()); }
};

// Who observes the type draw in a static Bayesian game.
enum class InformationStructure {
  // Each player observes their own type.
  kPrivateTypes,
  // Nobody observes any type; both play the prior-averaged game.
  kUninformed,
};

// One-shot game with private types. `stage` has a single state and its type
// counts match the type spaces.
struct StaticBayesianGame {
  StageGame stage;
  std::vector<std::string> types1;
  std::vector<std::string> types2;
  std::vector<double> prior_about1;
  std::vector<double> prior_about2;
  InformationStructure information = InformationStructure::kPrivateTypes;
};

// Wraps a static game as a horizon-0 multistage game.
MultiStageGame ToMultiStage(const StaticBayesianGame& game);
// Inverse of ToMultiStage; throws unless the game has horizon 0.
StaticBayesianGame FromMultiStage(const MultiStageGame& game);
// Expected payoffs over both type priors. An action is feasible if it is
// feasible for every own type.
BimatrixGame PriorAveraged(const StaticBayesianGame& game);
// The complete-information game of one type pair.
BimatrixGame TypeSlice(const StaticBayesianGame& game, int t1, int t2);

// A profile together with its per-type values and deviation gaps.
struct EquilibriumResult {
  std::vector<FiniteDistribution> defender;  // [defender type]
  std::vector<FiniteDistribution> user;      // [user type]
  std::vector<double> defender_values;       // [defender type]
  std::vector<double> user_values;           // [user type]
  double defender_value = 0.0;               // ex ante
  double user_value = 0.0;
  std::vector<double> defender_gaps;
  std::vector<double> user_gaps;
  double gap = 0.0;  // largest gain from a pure unilateral deviation
};

inline constexpr double kEquilibriumTolerance = 1e-8;

// Pure actions attaining the best expected payoff against `opponent` within
// 1e-9. `player` selects rows (defender) or columns (user) of `payoff`.
std::vector<int> BestResponseSet(const Eigen::MatrixXd& payoff,
                                 const FiniteDistribution& opponent,
                                 Player player);

// Every pure action pair from which no player gains by a pure deviation.
std::vector<std::pair<int, int>> PureNe(const BimatrixGame& game);

struct SupportEnumerationStats {
  long candidates = 0;  // square support systems examined
  long degenerate = 0;  // singular systems skipped
};

// All equilibria found by support enumeration over equal-size support pairs,
// sorted by support. Throws SizeLimitError above 8 actions per player.
std::vector<EquilibriumResult> MixedNe(const BimatrixGame& game,
                                       SupportEnumerationStats* stats = nullptr);

// Evaluates (values, gaps) of a bimatrix profile.
EquilibriumResult EvaluateBimatrix(const BimatrixGame& game,
                                   const FiniteDistribution& sigma1,
                                   const FiniteDistribution& sigma2);

// Bayesian Nash equilibria via the agent form: each (player, type) pair is an
// agent, supports are enumerated per agent, and every candidate is
// re-verified. The uninformed structure reduces to MixedNe of the
// prior-averaged game.
std::vector<EquilibriumResult> SolveBne(const StaticBayesianGame& game,
                                        SupportEnumerationStats* stats = nullptr);

// Values and per-type gaps of a per-type profile under the agent form.
// Masked actions are excluded from deviations.
EquilibriumResult EvaluateBayesian(const StaticBayesianGame& game,
                                   const std::vector<FiniteDistribution>& sigma1,
                                   const std::vector<FiniteDistribution>& sigma2);

}  // namespace secgame

#endif  // SECGAME_STATIC_SOLVER_H_
