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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "secgame/errors.h"

namespace secgame {
namespace {

std::string StageTag(int k) { return "stage " + std::to_string(k) + ": "; }

void CheckLabels(const std::vector<std::string>& labels, const std::string& what,
                 std::vector<std::string>* out) {
  if (labels.empty()) {
    out->push_back(what + " is empty");
    return;
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) out->push_back(what + " has duplicate labels");
}

void CheckPrior(const std::vector<double>& prior, int expected_size,
                const std::string& name, std::vector<std::string>* out) {
  if (static_cast<int>(prior.size()) != expected_size) {
    out->push_back(name + " has " + std::to_string(prior.size()) +
                   " weights but the type space has " +
                   std::to_string(expected_size));
    return;
  }
  double total = 0.0;
  for (double w : prior) {
    if (!std::isfinite(w) || w < 0.0) {
      out->push_back(name + " has a negative or non-finite weight");
      return;
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    std::ostringstream os;
    os << name << " not normalized (weights sum to " << total << ")";
    out->push_back(os.str());
  }
}

void CheckStage(const MultiStageGame& game, int k,
                std::vector<std::string>* out) {
  const StageGame& s = game.stages[k];
  const std::string tag = StageTag(k);
  CheckLabels(s.states, tag + "state space", out);
  CheckLabels(s.actions1, tag + "defender action space", out);
  CheckLabels(s.actions2, tag + "user action space", out);
  if (s.num_types1 != game.num_types(Player::kDefender) ||
      s.num_types2 != game.num_types(Player::kUser)) {
    out->push_back(tag + "type counts do not match the game's type spaces");
    return;
  }
  if (s.states.empty() || s.actions1.empty() || s.actions2.empty()) return;

  const std::size_t cells = static_cast<std::size_t>(s.num_states()) *
                            s.num_actions1() * s.num_actions2() *
                            s.num_types1 * s.num_types2;
  bool payoff_shape_ok = true;
  for (const auto* p : {&s.payoffs1, &s.payoffs2}) {
    if (p->size() != cells) {
      out->push_back(tag + "payoff tensor has " + std::to_string(p->size()) +
                     " entries, expected " + std::to_string(cells));
      payoff_shape_ok = false;
    }
  }
  if (payoff_shape_ok) {
    for (const auto* p : {&s.payoffs1, &s.payoffs2}) {
      if (std::any_of(p->begin(), p->end(),
                      [](double v) { return !std::isfinite(v); })) {
        out->push_back(tag + "payoff tensor has non-finite entries");
      }
    }
  }

  for (Player pl : {Player::kDefender, Player::kUser}) {
    const auto& mask = pl == Player::kDefender ? s.feasible1 : s.feasible2;
    const std::size_t expect = static_cast<std::size_t>(s.num_states()) *
                               s.num_types(pl) * s.num_actions(pl);
    if (!mask.empty() && mask.size() != expect) {
      out->push_back(tag + "player " + std::to_string(PlayerNumber(pl)) +
                     " mask has wrong size");
      continue;
    }
    for (int x = 0; x < s.num_states(); ++x) {
      for (int t = 0; t < s.num_types(pl); ++t) {
        bool any = false;
        for (int a = 0; a < s.num_actions(pl); ++a) {
          any = any || s.Feasible(pl, x, t, a);
        }
        if (!any) {
          out->push_back(tag + "player " + std::to_string(PlayerNumber(pl)) +
                         " has no feasible action in state " + s.states[x] +
                         " for type " + std::to_string(t));
        }
      }
    }
  }

  if (k < game.horizon()) {
    const StageGame& next = game.stages[k + 1];
    const std::size_t triples = static_cast<std::size_t>(s.num_states()) *
                                s.num_actions1() * s.num_actions2();
    if (s.transition.size() != triples) {
      out->push_back(tag + "transition is not total (" +
                     std::to_string(s.transition.size()) + " of " +
                     std::to_string(triples) + " entries)");
      return;
    }
    for (int x = 0; x < s.num_states(); ++x) {
      for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
        for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
          const int y = s.NextState(x, a1, a2);
          if (y < 0 || y >= next.num_states()) {
            std::ostringstream os;
            os << tag << "dangling transition from (" << s.states[x] << ", "
               << s.actions1[a1] << ", " << s.actions2[a2] << ") to state "
               << y << " outside stage " << k + 1;
            out->push_back(os.str());
          }
        }
      }
    }
  }
}

}  // namespace

StageGame StageGame::Create(std::vector<std::string> states,
                            std::vector<std::string> actions1,
                            std::vector<std::string> actions2, int num_types1,
                            int num_types2) {
  StageGame s;
  s.states = std::move(states);
  s.actions1 = std::move(actions1);
  s.actions2 = std::move(actions2);
  s.num_types1 = num_types1;
  s.num_types2 = num_types2;
  const std::size_t cells = static_cast<std::size_t>(s.num_states()) *
                            s.num_actions1() * s.num_actions2() * num_types1 *
                            num_types2;
  s.payoffs1.assign(cells, 0.0);
  s.payoffs2.assign(cells, 0.0);
  return s;
}

void StageGame::SetPayoffs(int x, int a1, int a2, int t1, int t2, double j1,
                           double j2) {
  const std::size_t i = PayoffIndex(x, a1, a2, t1, t2);
  payoffs1.at(i) = j1;
  payoffs2.at(i) = j2;
}

void StageGame::SetFeasible(Player p, int x, int type, int action,
                            bool feasible) {
  auto& m = p == Player::kDefender ? feasible1 : feasible2;
  if (m.empty()) {
    m.assign(static_cast<std::size_t>(num_states()) * num_types(p) *
                 num_actions(p),
             1);
  }
  m.at((static_cast<std::size_t>(x) * num_types(p) + type) * num_actions(p) +
       action) = feasible ? 1 : 0;
}

void StageGame::SetTransition(int x, int a1, int a2, int next) {
  if (transition.empty()) {
    transition.assign(
        static_cast<std::size_t>(num_states()) * num_actions1() * num_actions2(),
        -1);
  }
  transition.at((static_cast<std::size_t>(x) * num_actions1() + a1) *
                    num_actions2() + a2) = next;
}

std::vector<bool> StageGame::FeasibleActions(Player p, int x, int type) const {
  std::vector<bool> out(num_actions(p));
  for (int a = 0; a < num_actions(p); ++a) out[a] = Feasible(p, x, type, a);
  return out;
}

int Transition(const StageGame& stage, int x, int a1, int a2) {
  if (!stage.has_transition()) {
    throw MalformedInputError("stage has no transition (final stage)");
  }
  if (x < 0 || x >= stage.num_states() || a1 < 0 ||
      a1 >= stage.num_actions1() || a2 < 0 || a2 >= stage.num_actions2()) {
    throw MalformedInputError("transition index out of range");
  }
  return stage.NextState(x, a1, a2);
}

FiniteDistribution MultiStageGame::PriorAbout(Player p) const {
  return FiniteDistribution(p == Player::kDefender ? prior_about1
                                                   : prior_about2);
}

std::vector<std::string> ValidateGame(const MultiStageGame& game) {
  std::vector<std::string> out;
  CheckLabels(game.types1, "defender type space", &out);
  CheckLabels(game.types2, "user type space", &out);
  CheckPrior(game.prior_about1, game.num_types(Player::kDefender),
             "prior over defender types", &out);
  CheckPrior(game.prior_about2, game.num_types(Player::kUser),
             "prior over user types", &out);
  if (game.stages.empty()) {
    out.push_back("game has no stages");
    return out;
  }
  for (int k = 0; k <= game.horizon(); ++k) CheckStage(game, k, &out);
  if (game.initial_state < 0 ||
      game.initial_state >= game.stages[0].num_states()) {
    out.push_back("initial state is not in the stage-0 state space");
  }
  return out;
}

void RequireValidGame(const MultiStageGame& game) {
  const auto violations = ValidateGame(game);
  if (violations.empty()) return;
  std::string msg = "invalid game:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw MalformedInputError(msg);
}

StrategyProfile UniformProfile(const MultiStageGame& game) {
  StrategyProfile profile;
  for (Player p : {Player::kDefender, Player::kUser}) {
    auto& table = profile.of(p);
    table.resize(game.stages.size());
    for (int k = 0; k <= game.horizon(); ++k) {
      const StageGame& s = game.stages[k];
      table[k].resize(s.num_states());
      for (int x = 0; x < s.num_states(); ++x) {
        for (int t = 0; t < game.num_types(p); ++t) {
          table[k][x].push_back(
              FiniteDistribution::UniformOver(s.FeasibleActions(p, x, t)));
        }
      }
    }
  }
  return profile;
}

std::vector<std::string> ValidateProfile(const MultiStageGame& game,
                                         const StrategyProfile& profile) {
  std::vector<std::string> out;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const std::string who = "player " + std::to_string(PlayerNumber(p));
    const auto& table = profile.of(p);
    if (table.size() != game.stages.size()) {
      out.push_back(who + " strategy has wrong number of stages");
      continue;
    }
    for (int k = 0; k <= game.horizon(); ++k) {
      const StageGame& s = game.stages[k];
      if (static_cast<int>(table[k].size()) != s.num_states()) {
        out.push_back(who + " " + StageTag(k) + "wrong number of states");
        continue;
      }
      for (int x = 0; x < s.num_states(); ++x) {
        if (static_cast<int>(table[k][x].size()) != game.num_types(p)) {
          out.push_back(who + " " + StageTag(k) + "wrong number of types");
          continue;
        }
        for (int t = 0; t < game.num_types(p); ++t) {
          const FiniteDistribution& d = table[k][x][t];
          if (d.size() != s.num_actions(p)) {
            out.push_back(who + " " + StageTag(k) + "state " + s.states[x] +
                          " type " + std::to_string(t) +
                          ": distribution size does not match actions");
            continue;
          }
          if (auto problem = CheckDistribution(d.weights())) {
            out.push_back(who + " " + StageTag(k) + *problem);
          }
          for (int a = 0; a < d.size(); ++a) {
            if (d[a] > 0.0 && !s.Feasible(p, x, t, a)) {
              out.push_back(who + " " + StageTag(k) + "state " + s.states[x] +
                            " type " + std::to_string(t) +
                            ": positive mass on masked action " +
                            (p == Player::kDefender ? s.actions1[a]
                                                    : s.actions2[a]));
            }
          }
        }
      }
    }
  }
  return out;
}

double ProfileDistance(const StrategyProfile& a, const StrategyProfile& b) {
  double d = 0.0;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& ta = a.of(p);
    const auto& tb = b.of(p);
    if (ta.size() != tb.size()) throw MalformedInputError("profile shape mismatch");
    for (std::size_t k = 0; k < ta.size(); ++k) {
      if (ta[k].size() != tb[k].size()) {
        throw MalformedInputError("profile shape mismatch");
      }
      for (std::size_t x = 0; x < ta[k].size(); ++x) {
        if (ta[k][x].size() != tb[k][x].size()) {
          throw MalformedInputError("profile shape mismatch");
        }
        for (std::size_t t = 0; t < ta[k][x].size(); ++t) {
          d = std::max(d, ta[k][x][t].MaxAbsDiff(tb[k][x][t]));
        }
      }
    }
  }
  return d;
}

StageBeliefs StageBeliefs::Common(const FiniteDistribution& about1,
                                  const FiniteDistribution& about2) {
  StageBeliefs b;
  b.defender.assign(about1.size(), about2);
  b.user.assign(about2.size(), about1);
  return b;
}

HistoryTree::HistoryTree(const MultiStageGame& game, std::size_t max_nodes) {
  RequireValidGame(game);
  const int horizon = game.horizon();
  by_stage_.resize(horizon + 1);
  num_actions2_.resize(horizon + 1);
  for (int k = 0; k <= horizon; ++k) {
    num_actions2_[k] = game.stages[k].num_actions2();
  }
  nodes_.push_back(HistoryNode{0, game.initial_state, -1, -1, -1, -1});
  by_stage_[0].push_back(0);
  for (int k = 0; k < horizon; ++k) {
    const StageGame& s = game.stages[k];
    const std::size_t fanout =
        static_cast<std::size_t>(s.num_actions1()) * s.num_actions2();
    if (nodes_.size() + by_stage_[k].size() * fanout > max_nodes) {
      throw SizeLimitError("history tree exceeds " + std::to_string(max_nodes) +
                           " nodes");
    }
    for (int parent : by_stage_[k]) {
      nodes_[parent].first_child = static_cast<int>(nodes_.size());
      const int x = nodes_[parent].state;
      for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
        for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
          const int id = static_cast<int>(nodes_.size());
          nodes_.push_back(
              HistoryNode{k + 1, s.NextState(x, a1, a2), parent, a1, a2, -1});
          by_stage_[k + 1].push_back(id);
        }
      }
    }
  }
}

int HistoryTree::Child(int node, int a1, int a2) const {
  const HistoryNode& n = nodes_[node];
  if (n.first_child < 0) throw MalformedInputError("node has no children");
  return n.first_child + a1 * num_actions2_[n.stage] + a2;
}

std::vector<std::pair<int, int>> HistoryTree::History(int node) const {
  std::vector<std::pair<int, int>> h;
  for (int i = node; nodes_[i].parent >= 0; i = nodes_[i].parent) {
    h.emplace_back(nodes_[i].action1, nodes_[i].action2);
  }
  std::reverse(h.begin(), h.end());
  return h;
}

BeliefSystem PriorBeliefs(const MultiStageGame& game, const HistoryTree& tree) {
  const FiniteDistribution about1 = game.PriorAbout(Player::kDefender);
  const FiniteDistribution about2 = game.PriorAbout(Player::kUser);
  BeliefSystem b;
  b.defender.assign(tree.size(),
                    std::vector<FiniteDistribution>(about1.size(), about2));
  b.user.assign(tree.size(),
                std::vector<FiniteDistribution>(about2.size(), about1));
  b.defender_off_path.assign(tree.size(), 0);
  b.user_off_path.assign(tree.size(), 0);
  b.aggregate.resize(game.stages.size());
  b.discrepancy.resize(game.stages.size());
  for (int k = 0; k <= game.horizon(); ++k) {
    b.aggregate[k].assign(game.stages[k].num_states(),
                          StageBeliefs::Common(about1, about2));
    b.discrepancy[k].assign(game.stages[k].num_states(), 0.0);
  }
  return b;
}

double BeliefDistance(const BeliefSystem& a, const BeliefSystem& b) {
  double d = 0.0;
  auto table = [&d](const BeliefSystem::NodeTable& x,
                    const BeliefSystem::NodeTable& y) {
    if (x.size() != y.size()) throw MalformedInputError("belief shape mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].size() != y[i].size()) {
        throw MalformedInputError("belief shape mismatch");
      }
      for (std::size_t t = 0; t < x[i].size(); ++t) {
        d = std::max(d, x[i][t].MaxAbsDiff(y[i][t]));
      }
    }
  };
  table(a.defender, b.defender);
  table(a.user, b.user);
  if (a.aggregate.size() != b.aggregate.size()) {
    throw MalformedInputError("belief shape mismatch");
  }
  for (std::size_t k = 0; k < a.aggregate.size(); ++k) {
    if (a.aggregate[k].size() != b.aggregate[k].size()) {
      throw MalformedInputError("belief shape mismatch");
    }
    for (std::size_t x = 0; x < a.aggregate[k].size(); ++x) {
      table({a.aggregate[k][x].defender}, {b.aggregate[k][x].defender});
      table({a.aggregate[k][x].user}, {b.aggregate[k][x].user});
    }
  }
  return d;
}

double ExpectedStagePayoff(const StageGame& stage, int x,
                           const std::vector<FiniteDistribution>& sigma1,
                           const std::vector<FiniteDistribution>& sigma2,
                           const FiniteDistribution& about1,
                           const FiniteDistribution& about2, Player player,
                           std::optional<int> own_type) {
  if (x < 0 || x >= stage.num_states()) {
    throw MalformedInputError("state index out of range");
  }
  if (static_cast<int>(sigma1.size()) != stage.num_types1 ||
      static_cast<int>(sigma2.size()) != stage.num_types2 ||
      about1.size() != stage.num_types1 || about2.size() != stage.num_types2) {
    throw MalformedInputError("type dimension mismatch");
  }
  for (const auto& s : sigma1) {
    if (s.size() != stage.num_actions1()) {
      throw MalformedInputError("defender strategy size mismatch");
    }
  }
  for (const auto& s : sigma2) {
    if (s.size() != stage.num_actions2()) {
      throw MalformedInputError("user strategy size mismatch");
    }
  }
  const int own_count = stage.num_types(player);
  if (own_type && (*own_type < 0 || *own_type >= own_count)) {
    throw MalformedInputError("own type out of range");
  }
  const FiniteDistribution& own_weights =
      player == Player::kDefender ? about1 : about2;
  const FiniteDistribution& opp_weights =
      player == Player::kDefender ? about2 : about1;

  double total = 0.0;
  for (int own = 0; own < own_count; ++own) {
    double w_own = own_type ? (own == *own_type ? 1.0 : 0.0) : own_weights[own];
    if (w_own == 0.0) continue;
    for (int opp = 0; opp < stage.num_types(Opponent(player)); ++opp) {
      const double w = w_own * opp_weights[opp];
      if (w == 0.0) continue;
      const int t1 = player == Player::kDefender ? own : opp;
      const int t2 = player == Player::kDefender ? opp : own;
      double cell = 0.0;
      for (int a1 = 0; a1 < stage.num_actions1(); ++a1) {
        const double p1 = sigma1[t1][a1];
        if (p1 == 0.0) continue;
        for (int a2 = 0; a2 < stage.num_actions2(); ++a2) {
          cell += p1 * sigma2[t2][a2] * stage.Payoff(player, x, a1, a2, t1, t2);
        }
      }
      total += w * cell;
    }
  }
  return total;
}

}  // namespace secgame
