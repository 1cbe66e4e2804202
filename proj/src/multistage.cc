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


#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "secgame/errors.h"
#include "secgame/lp.h"
#include "secgame/multistage.h"
#include "secgame/random.h"

namespace secgame {

BeliefUpdateResult BeliefUpdate(
    const FiniteDistribution& prior,
    const std::vector<FiniteDistribution>& opponent_strategy, int observed) {
  if (static_cast<int>(opponent_strategy.size()) != prior.size()) {
    throw MalformedInputError("strategy count does not match the belief size");
  }
  std::vector<double> post(prior.size(), 0.0);
  double total = 0.0;
  for (int t = 0; t < prior.size(); ++t) {
    const auto& s = opponent_strategy[t];
    if (observed < 0 || observed >= s.size()) {
      throw ParameterError("observed action out of range");
    }
    post[t] = prior[t] * s[observed];
    total += post[t];
  }
  if (total <= 0.0) return {prior, true};
  for (double& v : post) v /= total;
  return {FiniteDistribution(std::move(post)), false};
}

namespace {

// Probability that own type `t` of `p` assigns to reaching each node:
// the reach probability averaged over the opponent's prior.
std::vector<double> TypeReach(const MultiStageGame& game,
                              const std::vector<std::vector<double>>& reach,
                              Player p, int t) {
  const FiniteDistribution prior = game.PriorAbout(Opponent(p));
  const int n2 = game.num_types(Player::kUser);
  std::vector<double> out(reach.size(), 0.0);
  for (std::size_t n = 0; n < reach.size(); ++n) {
    for (int to = 0; to < prior.size(); ++to) {
      const int idx = p == Player::kDefender ? t * n2 + to : to * n2 + t;
      out[n] += prior[to] * reach[n][idx];
    }
  }
  return out;
}

void CheckBeliefShape(const MultiStageGame& game, const HistoryTree& tree,
                      const BeliefSystem& beliefs) {
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& table = beliefs.of(p);
    if (static_cast<int>(table.size()) != tree.size()) {
      throw MalformedInputError("belief table does not match the history tree");
    }
    for (const auto& row : table) {
      if (static_cast<int>(row.size()) != game.num_types(p)) {
        throw MalformedInputError("belief table has the wrong type count");
      }
      for (const auto& d : row) {
        if (d.size() != game.num_types(Opponent(p))) {
          throw MalformedInputError("belief has the wrong support size");
        }
      }
    }
  }
}

// Backward induction over the tree for own type `t` of `p`, with the node
// beliefs held fixed. `achieved` follows the profile, `best` best-responds.
struct NodeValues {
  std::vector<double> achieved;
  std::vector<double> best;
};

NodeValues EvaluateTree(const MultiStageGame& game, const HistoryTree& tree,
                        const StrategyProfile& profile,
                        const BeliefSystem& beliefs, Player p, int t) {
  const Player o = Opponent(p);
  const int horizon = game.horizon();
  NodeValues v;
  v.achieved.assign(tree.size(), 0.0);
  v.best.assign(tree.size(), 0.0);
  for (int n = tree.size() - 1; n >= 0; --n) {
    const HistoryNode& node = tree.node(n);
    const int k = node.stage, x = node.state;
    const StageGame& stage = game.stages[k];
    const FiniteDistribution& belief = beliefs.of(p)[n][t];
    const auto& own = profile.At(p, k, x, t);
    double best = -kInfinity;
    double achieved = 0.0;
    for (int a = 0; a < stage.num_actions(p); ++a) {
      const bool feasible = stage.Feasible(p, x, t, a);
      if (!feasible && own[a] == 0.0) continue;
      double with_best = 0.0, with_profile = 0.0;
      for (int to = 0; to < belief.size(); ++to) {
        if (belief[to] == 0.0) continue;
        const auto& opp = profile.At(o, k, x, to);
        double vb = 0.0, vp = 0.0;
        for (int ao = 0; ao < stage.num_actions(o); ++ao) {
          if (opp[ao] == 0.0) continue;
          const int a1 = p == Player::kDefender ? a : ao;
          const int a2 = p == Player::kDefender ? ao : a;
          const int t1 = p == Player::kDefender ? t : to;
          const int t2 = p == Player::kDefender ? to : t;
          const double j = stage.Payoff(p, x, a1, a2, t1, t2);
          double cb = 0.0, cp = 0.0;
          if (k < horizon) {
            const int c = tree.Child(n, a1, a2);
            cb = v.best[c];
            cp = v.achieved[c];
          }
          vb += opp[ao] * (j + cb);
          vp += opp[ao] * (j + cp);
        }
        with_best += belief[to] * vb;
        with_profile += belief[to] * vp;
      }
      if (feasible) best = std::max(best, with_best);
      achieved += own[a] * with_profile;
    }
    v.best[n] = best;
    v.achieved[n] = achieved;
  }
  return v;
}

}  // namespace

std::vector<std::vector<double>> ReachProbabilities(
    const MultiStageGame& game, const HistoryTree& tree,
    const StrategyProfile& profile) {
  const int n1 = game.num_types(Player::kDefender);
  const int n2 = game.num_types(Player::kUser);
  std::vector<std::vector<double>> reach(tree.size(),
                                         std::vector<double>(n1 * n2, 0.0));
  std::fill(reach[0].begin(), reach[0].end(), 1.0);
  for (int n = 1; n < tree.size(); ++n) {
    const HistoryNode& node = tree.node(n);
    const HistoryNode& parent = tree.node(node.parent);
    const int k = parent.stage, x = parent.state;
    for (int t1 = 0; t1 < n1; ++t1) {
      const double p1 = profile.defender[k][x][t1][node.action1];
      for (int t2 = 0; t2 < n2; ++t2) {
        reach[n][t1 * n2 + t2] = reach[node.parent][t1 * n2 + t2] * p1 *
                                 profile.user[k][x][t2][node.action2];
      }
    }
  }
  return reach;
}

BeliefSystem ForwardPass(const MultiStageGame& game, const HistoryTree& tree,
                         const StrategyProfile& profile) {
  {
    const auto problems = ValidateProfile(game, profile);
    if (!problems.empty()) throw MalformedInputError(problems.front());
  }
  BeliefSystem b = PriorBeliefs(game, tree);
  for (int n = 1; n < tree.size(); ++n) {
    const HistoryNode& node = tree.node(n);
    const HistoryNode& parent = tree.node(node.parent);
    const int k = parent.stage, x = parent.state;
    for (Player p : {Player::kDefender, Player::kUser}) {
      const Player o = Opponent(p);
      const int observed =
          o == Player::kDefender ? node.action1 : node.action2;
      const auto& opp = profile.of(o)[k][x];
      auto& table = p == Player::kDefender ? b.defender : b.user;
      auto& flags =
          p == Player::kDefender ? b.defender_off_path : b.user_off_path;
      bool off = flags[node.parent] != 0;
      for (int t = 0; t < game.num_types(p); ++t) {
        auto update = BeliefUpdate(table[node.parent][t], opp, observed);
        table[n][t] = std::move(update.posterior);
        off = off || update.off_path;
      }
      flags[n] = off;
    }
  }

  const auto reach = ReachProbabilities(game, tree, profile);
  for (int k = 0; k <= game.horizon(); ++k) {
    const int num_states = game.stages[k].num_states();
    std::vector<std::vector<int>> at_state(num_states);
    for (int n : tree.NodesAtStage(k)) at_state[tree.node(n).state].push_back(n);
    for (Player p : {Player::kDefender, Player::kUser}) {
      const int no = game.num_types(Opponent(p));
      for (int t = 0; t < game.num_types(p); ++t) {
        const auto weight = TypeReach(game, reach, p, t);
        for (int x = 0; x < num_states; ++x) {
          const auto& nodes = at_state[x];
          if (nodes.empty()) continue;  // keeps the prior
          double total = 0.0;
          for (int n : nodes) total += weight[n];
          std::vector<double> agg(no, 0.0);
          for (int n : nodes) {
            const double w = total > 0.0 ? weight[n] / total : 1.0 / nodes.size();
            for (int to = 0; to < no; ++to) agg[to] += w * b.of(p)[n][t][to];
          }
          FiniteDistribution dist = FiniteDistribution::Normalized(agg);
          for (int n : nodes) {
            if (weight[n] <= 0.0) continue;
            b.discrepancy[k][x] = std::max(b.discrepancy[k][x],
                                           b.of(p)[n][t].MaxAbsDiff(dist));
          }
          auto& slot = p == Player::kDefender ? b.aggregate[k][x].defender
                                              : b.aggregate[k][x].user;
          slot[t] = std::move(dist);
        }
      }
    }
  }
  return b;
}

BackwardResult BackwardPass(const MultiStageGame& game,
                            const BeliefSystem& beliefs,
                            const BilinearOptions& options,
                            const StrategyProfile* warm) {
  RequireValidGame(game);
  const int horizon = game.horizon();
  if (static_cast<int>(beliefs.aggregate.size()) != horizon + 1) {
    throw MalformedInputError("aggregate beliefs do not match the horizon");
  }
  BackwardResult out;
  out.profile.defender.resize(horizon + 1);
  out.profile.user.resize(horizon + 1);
  out.values.defender.resize(horizon + 1);
  out.values.user.resize(horizon + 1);
  out.stages.resize(horizon + 1);
  for (int k = horizon; k >= 0; --k) {
    const StageGame& stage = game.stages[k];
    if (static_cast<int>(beliefs.aggregate[k].size()) != stage.num_states()) {
      throw MalformedInputError("aggregate beliefs do not match the states");
    }
    static const ContinuationValues kNone;
    const ContinuationValues& next1 =
        k < horizon ? out.values.defender[k + 1] : kNone;
    const ContinuationValues& next2 =
        k < horizon ? out.values.user[k + 1] : kNone;
    for (int x = 0; x < stage.num_states(); ++x) {
      BilinearOptions local = options;
      local.seed = DeriveSeed(options.seed,
                              (static_cast<std::uint64_t>(k) << 32) |
                                  static_cast<std::uint32_t>(x));
      BilinearStageSolution start;
      const BilinearStageSolution* warm_stage = nullptr;
      if (warm != nullptr) {
        start.sigma1 = warm->defender[k][x];
        start.sigma2 = warm->user[k][x];
        warm_stage = &start;
      }
      BilinearStageSolution sol = StageBilinearSolve(
          stage, x, beliefs.aggregate[k][x], next1, next2, local, warm_stage);
      out.profile.defender[k].push_back(sol.sigma1);
      out.profile.user[k].push_back(sol.sigma2);
      out.values.defender[k].push_back(sol.value1);
      out.values.user[k].push_back(sol.value2);
      out.max_gap = std::max(out.max_gap, sol.gap);
      out.stages[k].push_back(std::move(sol));
    }
  }
  return out;
}

double EpsilonReport::max() const {
  double m = 0.0;
  for (double v : defender) m = std::max(m, v);
  for (double v : user) m = std::max(m, v);
  return m;
}

double EpsilonReport::max_subgame() const {
  double m = 0.0;
  for (double v : defender_subgame) m = std::max(m, v);
  for (double v : user_subgame) m = std::max(m, v);
  return m;
}

EpsilonReport VerifyEpsilon(const MultiStageGame& game,
                            const StrategyProfile& profile,
                            const BeliefSystem& beliefs) {
  const HistoryTree tree(game);
  CheckBeliefShape(game, tree, beliefs);
  const BeliefSystem recomputed = ForwardPass(game, tree, profile);
  const auto reach = ReachProbabilities(game, tree, profile);
  EpsilonReport report;
  for (Player p : {Player::kDefender, Player::kUser}) {
    auto& root = p == Player::kDefender ? report.defender : report.user;
    auto& sub = p == Player::kDefender ? report.defender_subgame
                                       : report.user_subgame;
    for (int t = 0; t < game.num_types(p); ++t) {
      const auto weight = TypeReach(game, reach, p, t);
      for (int n = 0; n < tree.size(); ++n) {
        if (weight[n] <= 0.0) continue;
        report.belief_error =
            std::max(report.belief_error,
                     beliefs.of(p)[n][t].MaxAbsDiff(recomputed.of(p)[n][t]));
      }
      const NodeValues v = EvaluateTree(game, tree, profile, beliefs, p, t);
      root.push_back(std::max(0.0, v.best[0] - v.achieved[0]));
      double worst = 0.0;
      for (int n = 0; n < tree.size(); ++n) {
        if (weight[n] > 0.0) worst = std::max(worst, v.best[n] - v.achieved[n]);
      }
      sub.push_back(worst);
    }
  }
  report.consistent = report.belief_error <= kConsistencyTolerance;
  return report;
}

std::pair<double, double> CumulativeUtility(const MultiStageGame& game,
                                            const StrategyProfile& profile,
                                            const BeliefSystem& beliefs, int t1,
                                            int t2, int from_stage) {
  if (t1 < 0 || t1 >= game.num_types(Player::kDefender) || t2 < 0 ||
      t2 >= game.num_types(Player::kUser)) {
    throw ParameterError("type out of range");
  }
  if (from_stage < 0 || from_stage > game.horizon()) {
    throw ParameterError("stage out of range");
  }
  const HistoryTree tree(game);
  CheckBeliefShape(game, tree, beliefs);
  const auto reach = ReachProbabilities(game, tree, profile);
  auto one = [&](Player p, int t) {
    const NodeValues v = EvaluateTree(game, tree, profile, beliefs, p, t);
    const auto weight = TypeReach(game, reach, p, t);
    const auto& nodes = tree.NodesAtStage(from_stage);
    double total = 0.0;
    for (int n : nodes) total += weight[n];
    double value = 0.0;
    for (int n : nodes) {
      const double w = total > 0.0 ? weight[n] / total : 1.0 / nodes.size();
      value += w * v.achieved[n];
    }
    return value;
  };
  return {one(Player::kDefender, t1), one(Player::kUser, t2)};
}

MultiStageGame ExpandHistories(const MultiStageGame& game) {
  const HistoryTree tree(game);
  std::vector<int> position(tree.size());
  for (int k = 0; k <= game.horizon(); ++k) {
    const auto& nodes = tree.NodesAtStage(k);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      position[nodes[i]] = i;
    }
  }
  MultiStageGame out = game;
  out.initial_state = 0;
  for (int k = 0; k <= game.horizon(); ++k) {
    const StageGame& s = game.stages[k];
    const auto& nodes = tree.NodesAtStage(k);
    std::vector<std::string> names;
    for (int n : nodes) {
      names.push_back("h" + std::to_string(n) + ":" +
                      s.states[tree.node(n).state]);
    }
    StageGame e = StageGame::Create(names, s.actions1, s.actions2, s.num_types1,
                                    s.num_types2);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      const int x = tree.node(nodes[i]).state;
      for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
        for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
          for (int t1 = 0; t1 < s.num_types1; ++t1) {
            for (int t2 = 0; t2 < s.num_types2; ++t2) {
              e.SetPayoffs(i, a1, a2, t1, t2,
                           s.Payoff(Player::kDefender, x, a1, a2, t1, t2),
                           s.Payoff(Player::kUser, x, a1, a2, t1, t2));
            }
          }
          if (k < game.horizon()) {
            e.SetTransition(i, a1, a2, position[tree.Child(nodes[i], a1, a2)]);
          }
        }
      }
      for (Player p : {Player::kDefender, Player::kUser}) {
        for (int t = 0; t < s.num_types(p); ++t) {
          for (int a = 0; a < s.num_actions(p); ++a) {
            if (!s.Feasible(p, x, t, a)) e.SetFeasible(p, i, t, a, false);
          }
        }
      }
    }
    out.stages[k] = std::move(e);
  }
  return out;
}

PbneSolution SolvePbne(const MultiStageGame& game, const PbneOptions& options) {
  RequireValidGame(game);
  if (!(options.tol > 0.0)) throw ParameterError("tol must be positive");
  if (options.max_iter < 1) throw ParameterError("max_iter must be positive");
  const HistoryTree tree(game);
  PbneSolution sol;
  BeliefSystem beliefs = PriorBeliefs(game, tree);
  bool have_previous = false;
  for (int it = 1; it <= options.max_iter; ++it) {
    BackwardResult back = BackwardPass(game, beliefs, options.bilinear,
                                       have_previous ? &sol.profile : nullptr);
    BeliefSystem next = ForwardPass(game, tree, back.profile);
    const double sres =
        have_previous ? ProfileDistance(back.profile, sol.profile) : 0.0;
    const double bres = BeliefDistance(next, beliefs);
    sol.strategy_residuals.push_back(sres);
    sol.belief_residuals.push_back(bres);
    sol.iterations = it;
    sol.profile = std::move(back.profile);
    sol.values = std::move(back.values);
    sol.stages = std::move(back.stages);
    sol.max_stage_gap = back.max_gap;
    beliefs = std::move(next);
    have_previous = true;
    if (sres <= options.tol && bres <= options.tol) {
      sol.converged = true;
      break;
    }
  }
  sol.beliefs = std::move(beliefs);
  sol.epsilon = VerifyEpsilon(game, sol.profile, sol.beliefs);
  return sol;
}

}  // namespace secgame
