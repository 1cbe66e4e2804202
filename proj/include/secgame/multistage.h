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


// Perfect Bayesian equilibrium of the finite-horizon game with Markov
// strategies. Each stage is solved as a bilinear program against the
// continuation values of the next stage; beliefs come from a forward Bayes
// pass over the history tree and the two passes alternate until neither the
// profile nor the beliefs move.

#ifndef SECGAME_MULTISTAGE_H_
#define SECGAME_MULTISTAGE_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "secgame/distribution.h"
#include "secgame/game.h"

namespace secgame {

// Posterior over opponent types after observing `observed`, given the
// opponent's per-type mixed strategies. When the observation has probability
// zero the prior is returned unchanged and `off_path` is set.
struct BeliefUpdateResult {
  FiniteDistribution posterior;
  bool off_path = false;
};
BeliefUpdateResult BeliefUpdate(
    const FiniteDistribution& prior,
    const std::vector<FiniteDistribution>& opponent_strategy, int observed);

// [state][own type]; empty means the game ends after this stage.
using ContinuationValues = std::vector<std::vector<double>>;

struct BilinearOptions {
  int restarts = 16;
  std::uint64_t seed = 0;
  int max_alternations = 200;
  int threads = 0;  // 0 = hardware concurrency
  // A restart whose gap is at most this counts as solved.
  double target_gap = 1e-6;
  // When no restart reaches the target, enumerate the active sets of the
  // constraints: with both supports fixed the program splits into two
  // feasibility LPs. Skipped above `max_active_sets` support pairs.
  bool active_set_fallback = true;
  long long max_active_sets = 1000000;
};

struct BilinearStageSolution {
  std::vector<FiniteDistribution> sigma1;  // [defender type]
  std::vector<FiniteDistribution> sigma2;  // [user type]
  std::vector<double> s;                   // [defender type]
  std::vector<double> w;                   // [user type]
  double objective = 0.0;
  // Best-response gap per own type; `gap` is the largest of them.
  std::vector<double> gap1;
  std::vector<double> gap2;
  double gap = 0.0;
  // Expected Q of the solved profile per own type, i.e. the stage value.
  std::vector<double> value1;
  std::vector<double> value2;
  int restart = -1;  // index of the restart that produced this point
  bool active_set = false;  // found by the fallback instead of a restart
  int alternations = 0;
  // Objective after every half step of every restart.
  std::vector<std::vector<double>> traces;
};

// The stage problem at one state: payoffs plus continuation, and the beliefs
// each type holds about the opponent.
class BilinearProblem {
 public:
  BilinearProblem(const StageGame& stage, int x, StageBeliefs beliefs,
                  const ContinuationValues& next1,
                  const ContinuationValues& next2);

  int num_types(Player p) const { return p == Player::kDefender ? n1_ : n2_; }
  int num_actions(Player p) const {
    return p == Player::kDefender ? m1_ : m2_;
  }
  bool feasible(Player p, int type, int action) const;
  // Stage payoff plus continuation for player `p`.
  double Q(Player p, int a1, int a2, int t1, int t2) const;
  const StageBeliefs& beliefs() const { return beliefs_; }
  // Weight the objective places on each type of `p`: the mean belief the
  // opponent's types hold about it.
  const std::vector<double>& weights(Player p) const {
    return p == Player::kDefender ? lambda1_ : lambda2_;
  }

  // Expected Q of each own action of (`p`, `type`) against the opponent.
  std::vector<double> ActionValues(
      Player p, int type, const std::vector<FiniteDistribution>& sigma1,
      const std::vector<FiniteDistribution>& sigma2) const;
  // Best-response gap per own type.
  std::vector<double> Gaps(Player p,
                           const std::vector<FiniteDistribution>& sigma1,
                           const std::vector<FiniteDistribution>& sigma2) const;
  // Bilinear objective; non-positive on the feasible set.
  double Objective(const std::vector<FiniteDistribution>& sigma1,
                   const std::vector<FiniteDistribution>& sigma2,
                   const std::vector<double>& s,
                   const std::vector<double>& w) const;
  // Largest violation of the no-profitable-deviation constraints.
  double ConstraintViolation(const std::vector<FiniteDistribution>& sigma1,
                             const std::vector<FiniteDistribution>& sigma2,
                             const std::vector<double>& s,
                             const std::vector<double>& w) const;
  // Tightest s (defender) or w (user): minus the best action value per type.
  std::vector<double> TightSlack(
      Player p, const std::vector<FiniteDistribution>& sigma1,
      const std::vector<FiniteDistribution>& sigma2) const;

  // Alternating LP ascent from seeded random starts. Restart 0 starts from
  // `warm` when given. Returns the lowest-index restart reaching the target
  // gap, otherwise the one with the largest objective.
  BilinearStageSolution Solve(const BilinearOptions& options,
                              const BilinearStageSolution* warm = nullptr) const;

 private:
  int m1_, m2_, n1_, n2_;
  std::vector<double> q1_, q2_;
  std::vector<char> f1_, f2_;
  StageBeliefs beliefs_;
  std::vector<double> lambda1_, lambda2_;

  std::size_t Index(int a1, int a2, int t1, int t2) const {
    return ((static_cast<std::size_t>(a1) * m2_ + a2) * n1_ + t1) * n2_ + t2;
  }
};

BilinearStageSolution StageBilinearSolve(
    const StageGame& stage, int x, const StageBeliefs& beliefs,
    const ContinuationValues& next1, const ContinuationValues& next2,
    const BilinearOptions& options, const BilinearStageSolution* warm = nullptr);

// Ṽ_i^k(x, θ_i): [stage][state][own type] per player.
struct ValueFunction {
  std::vector<std::vector<std::vector<double>>> defender;
  std::vector<std::vector<std::vector<double>>> user;
  const std::vector<std::vector<std::vector<double>>>& of(Player p) const {
    return p == Player::kDefender ? defender : user;
  }
};

struct BackwardResult {
  StrategyProfile profile;
  ValueFunction values;
  std::vector<std::vector<BilinearStageSolution>> stages;  // [stage][state]
  // Largest stage gap over all (stage, state).
  double max_gap = 0.0;
};

BackwardResult BackwardPass(const MultiStageGame& game,
                            const BeliefSystem& beliefs,
                            const BilinearOptions& options,
                            const StrategyProfile* warm = nullptr);

// [node][t1 * num_types2 + t2]: probability of reaching the node.
std::vector<std::vector<double>> ReachProbabilities(
    const MultiStageGame& game, const HistoryTree& tree,
    const StrategyProfile& profile);

BeliefSystem ForwardPass(const MultiStageGame& game, const HistoryTree& tree,
                         const StrategyProfile& profile);

struct PbneOptions {
  double tol = 1e-6;
  int max_iter = 100;
  BilinearOptions bilinear;
};

// Best-response slack of a profile under a belief system. `defender` and
// `user` are indexed by own type and measured at the root.
struct EpsilonReport {
  std::vector<double> defender;
  std::vector<double> user;
  // Same quantity maximized over every node the type reaches.
  std::vector<double> defender_subgame;
  std::vector<double> user_subgame;
  // Sup-norm gap between supplied and recomputed on-path node beliefs.
  double belief_error = 0.0;
  bool consistent = false;

  double max() const;
  double max_subgame() const;
};

inline constexpr double kConsistencyTolerance = 1e-9;

EpsilonReport VerifyEpsilon(const MultiStageGame& game,
                            const StrategyProfile& profile,
                            const BeliefSystem& beliefs);

// Expected cumulative payoff of (defender type t1, user type t2) from stage
// `from_stage` on, each averaged over the opponent's types with the supplied
// beliefs and weighted by how likely the type is to reach each history.
std::pair<double, double> CumulativeUtility(const MultiStageGame& game,
                                            const StrategyProfile& profile,
                                            const BeliefSystem& beliefs, int t1,
                                            int t2, int from_stage = 0);

struct PbneSolution {
  bool converged = false;
  int iterations = 0;
  std::vector<double> strategy_residuals;
  std::vector<double> belief_residuals;
  StrategyProfile profile;
  BeliefSystem beliefs;  // consistent with `profile`
  ValueFunction values;
  std::vector<std::vector<BilinearStageSolution>> stages;
  double max_stage_gap = 0.0;
  EpsilonReport epsilon;
};

// Copy of `game` whose stage-k states are the stage-k histories, so that
// every state determines its history. Throws SizeLimitError like HistoryTree.
MultiStageGame ExpandHistories(const MultiStageGame& game);

PbneSolution SolvePbne(const MultiStageGame& game,
                       const PbneOptions& options = {});

}  // namespace secgame

#endif  // SECGAME_MULTISTAGE_H_
