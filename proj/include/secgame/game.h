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

#ifndef SECGAME_GAME_H_
#define SECGAME_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secgame/distribution.h"

namespace secgame {

// Player 1 is the defender (row player), player 2 the user (column player).
enum class Player { kDefender = 0, kUser = 1 };

inline Player Opponent(Player p) {
  return p == Player::kDefender ? Player::kUser : Player::kDefender;
}
inline int PlayerNumber(Player p) { return p == Player::kDefender ? 1 : 2; }

// One stage of a multistage game.
//
// States, actions and types are indices; the label vectors give their names
// at the boundary. Payoffs are dense and indexed [x][a1][a2][t1][t2]. The
// feasibility masks are indexed [x][own type][own action]; an empty mask
// means every action is feasible. Infeasible actions stand in for payoffs of
// minus infinity and never receive probability.
//
// `transition` maps [x][a1][a2] to a state index of the next stage. It is
// empty for the final stage.
struct StageGame {
  std::vector<std::string> states;
  std::vector<std::string> actions1;
  std::vector<std::string> actions2;
  int num_types1 = 1;
  int num_types2 = 1;
  std::vector<double> payoffs1;
  std::vector<double> payoffs2;
  std::vector<char> feasible1;
  std::vector<char> feasible2;
  std::vector<int> transition;

  // Zero payoffs, everything feasible, no transition.
  static StageGame Create(std::vector<std::string> states,
                          std::vector<std::string> actions1,
                          std::vector<std::string> actions2, int num_types1,
                          int num_types2);

  int num_states() const { return static_cast<int>(states.size()); }
  int num_actions1() const { return static_cast<int>(actions1.size()); }
  int num_actions2() const { return static_cast<int>(actions2.size()); }
  int num_actions(Player p) const {
    return p == Player::kDefender ? num_actions1() : num_actions2();
  }
  int num_types(Player p) const {
    return p == Player::kDefender ? num_types1 : num_types2;
  }
  bool has_transition() const { return !transition.empty(); }

  std::size_t PayoffIndex(int x, int a1, int a2, int t1, int t2) const {
    return (((static_cast<std::size_t>(x) * num_actions1() + a1) *
                 num_actions2() + a2) * num_types1 + t1) * num_types2 + t2;
  }
  // Unchecked accessors for inner loops.
  double Payoff(Player p, int x, int a1, int a2, int t1, int t2) const {
    const auto& v = p == Player::kDefender ? payoffs1 : payoffs2;
    return v[PayoffIndex(x, a1, a2, t1, t2)];
  }
  bool Feasible(Player p, int x, int type, int action) const {
    const auto& m = p == Player::kDefender ? feasible1 : feasible2;
    if (m.empty()) return true;
    return m[(static_cast<std::size_t>(x) * num_types(p) + type) *
                 num_actions(p) + action] != 0;
  }
  int NextState(int x, int a1, int a2) const {
    return transition[(static_cast<std::size_t>(x) * num_actions1() + a1) *
                          num_actions2() + a2];
  }

  void SetPayoffs(int x, int a1, int a2, int t1, int t2, double j1, double j2);
  // Materializes the masks if they are empty.
  void SetFeasible(Player p, int x, int type, int action, bool feasible);
  void SetTransition(int x, int a1, int a2, int next);

  // Feasibility pattern of one (state, type) as a bool vector.
  std::vector<bool> FeasibleActions(Player p, int x, int type) const;
};

// Checked transition lookup; throws MalformedInputError on out-of-range input
// or when the stage has no transition.
int Transition(const StageGame& stage, int x, int a1, int a2);

// Finite-horizon game with two-sided private types.
//
// `prior_about1` is the user's prior over defender types and `prior_about2`
// the defender's prior over user types. They are raw vectors so that
// malformed games can be represented and reported by ValidateGame.
struct MultiStageGame {
  std::vector<std::string> types1;
  std::vector<std::string> types2;
  std::vector<double> prior_about1;
  std::vector<double> prior_about2;
  int initial_state = 0;
  std::vector<StageGame> stages;

  int horizon() const { return static_cast<int>(stages.size()) - 1; }
  int num_types(Player p) const {
    return static_cast<int>(p == Player::kDefender ? types1.size()
                                                   : types2.size());
  }
  // Prior over `p`'s types as held by the opponent. Throws when invalid.
  FiniteDistribution PriorAbout(Player p) const;
};

// Every invariant violation of `game`; empty iff the game is well formed.
std::vector<std::string> ValidateGame(const MultiStageGame& game);
// Throws MalformedInputError listing the violations, if any.
void RequireValidGame(const MultiStageGame& game);

// Markov behavioral strategies indexed [stage][state][own type].
struct StrategyProfile {
  using Table = std::vector<std::vector<std::vector<FiniteDistribution>>>;
  Table defender;
  Table user;

  const Table& of(Player p) const {
    return p == Player::kDefender ? defender : user;
  }
  Table& of(Player p) { return p == Player::kDefender ? defender : user; }
  const FiniteDistribution& At(Player p, int k, int x, int type) const {
    return of(p)[k][x][type];
  }
};

// Uniform over the feasible actions everywhere.
StrategyProfile UniformProfile(const MultiStageGame& game);
// Shape, validity and mask violations of `profile` for `game`.
std::vector<std::string> ValidateProfile(const MultiStageGame& game,
                                         const StrategyProfile& profile);
// Sup-norm distance between two profiles of the same shape.
double ProfileDistance(const StrategyProfile& a, const StrategyProfile& b);

// Beliefs consumed by one stage: `defender[t1]` is the defender's belief over
// user types when her own type is t1, `user[t2]` the user's belief over
// defender types.
struct StageBeliefs {
  std::vector<FiniteDistribution> defender;
  std::vector<FiniteDistribution> user;

  // Own-type independent beliefs: `about1` is held by the user over defender
  // types, `about2` by the defender over user types.
  static StageBeliefs Common(const FiniteDistribution& about1,
                             const FiniteDistribution& about2);
  const std::vector<FiniteDistribution>& of(Player p) const {
    return p == Player::kDefender ? defender : user;
  }
};

struct HistoryNode {
  int stage = 0;
  int state = 0;
  int parent = -1;
  int action1 = -1;  // action pair leading into this node
  int action2 = -1;
  int first_child = -1;
};

// Tree of action histories rooted at the initial state. Children of a node at
// stage k < K are stored contiguously in (a1, a2) row-major order.
class HistoryTree {
 public:
  HistoryTree(const MultiStageGame& game, std::size_t max_nodes = 1u << 20);

  int size() const { return static_cast<int>(nodes_.size()); }
  const HistoryNode& node(int i) const { return nodes_[i]; }
  const std::vector<int>& NodesAtStage(int k) const { return by_stage_[k]; }
  int Child(int node, int a1, int a2) const;
  std::vector<std::pair<int, int>> History(int node) const;

 private:
  std::vector<HistoryNode> nodes_;
  std::vector<std::vector<int>> by_stage_;
  std::vector<int> num_actions2_;
};

// History-indexed beliefs plus their per-(stage, state) aggregate.
struct BeliefSystem {
  using NodeTable = std::vector<std::vector<FiniteDistribution>>;
  // [node][own type] -> belief over opponent types.
  NodeTable defender;
  NodeTable user;
  // [node]: a zero-probability observation occurred on the path to the node,
  // so the belief was carried forward instead of updated.
  std::vector<char> defender_off_path;
  std::vector<char> user_off_path;
  // [stage][state]
  std::vector<std::vector<StageBeliefs>> aggregate;
  // [stage][state]: largest sup-norm gap between a reachable node belief and
  // the aggregate it was folded into.
  std::vector<std::vector<double>> discrepancy;

  const NodeTable& of(Player p) const {
    return p == Player::kDefender ? defender : user;
  }
  const std::vector<char>& off_path(Player p) const {
    return p == Player::kDefender ? defender_off_path : user_off_path;
  }
};

// Priors at every node and every aggregate.
BeliefSystem PriorBeliefs(const MultiStageGame& game, const HistoryTree& tree);
// Sup-norm distance over node beliefs and aggregates.
double BeliefDistance(const BeliefSystem& a, const BeliefSystem& b);

// Expected stage payoff of `player` at state x.
//
// The opponent's type is averaged under the evaluating player's belief
// (`about2` for the defender, `about1` for the user). With `own_type` set the
// own type is fixed; otherwise it is averaged under the opponent's belief
// about it.
double ExpectedStagePayoff(const StageGame& stage, int x,
                           const std::vector<FiniteDistribution>& sigma1,
                           const std::vector<FiniteDistribution>& sigma2,
                           const FiniteDistribution& about1,
                           const FiniteDistribution& about2, Player player,
                           std::optional<int> own_type);

}  // namespace secgame

#endif  // SECGAME_GAME_H_
