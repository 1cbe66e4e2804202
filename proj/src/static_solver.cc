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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>

#include "secgame/errors.h"

namespace secgame {
namespace {

constexpr int kMaxBimatrixActions = 8;
constexpr long kMaxSupportPairs = 20'000'000;
constexpr double kTieTolerance = 1e-9;
constexpr double kNegativeTolerance = 1e-12;

// Flat agent-form view of a one-shot game with types. Payoffs are indexed
// [a1][a2][t1][t2] like a single-state StageGame.
struct AgentForm {
  int m1 = 0, m2 = 0, n1 = 1, n2 = 1;
  std::vector<double> payoff1, payoff2;
  std::vector<double> belief1;  // defender's belief over user types
  std::vector<double> belief2;  // user's belief over defender types
  std::vector<std::vector<bool>> feasible1;  // [t1][a1]
  std::vector<std::vector<bool>> feasible2;  // [t2][a2]

  double J(Player p, int a1, int a2, int t1, int t2) const {
    const std::size_t i = (((static_cast<std::size_t>(a1) * m2 + a2) * n1 + t1) *
                           n2) + t2;
    return p == Player::kDefender ? payoff1[i] : payoff2[i];
  }
};

AgentForm FromStage(const StageGame& stage, std::vector<double> belief1,
                    std::vector<double> belief2) {
  AgentForm f;
  f.m1 = stage.num_actions1();
  f.m2 = stage.num_actions2();
  f.n1 = stage.num_types1;
  f.n2 = stage.num_types2;
  const std::size_t cells =
      static_cast<std::size_t>(f.m1) * f.m2 * f.n1 * f.n2;
  f.payoff1.assign(stage.payoffs1.begin(), stage.payoffs1.begin() + cells);
  f.payoff2.assign(stage.payoffs2.begin(), stage.payoffs2.begin() + cells);
  f.belief1 = std::move(belief1);
  f.belief2 = std::move(belief2);
  for (int t = 0; t < f.n1; ++t) {
    f.feasible1.push_back(stage.FeasibleActions(Player::kDefender, 0, t));
  }
  for (int t = 0; t < f.n2; ++t) {
    f.feasible2.push_back(stage.FeasibleActions(Player::kUser, 0, t));
  }
  return f;
}

AgentForm FromBimatrix(const BimatrixGame& g) {
  AgentForm f;
  f.m1 = g.rows();
  f.m2 = g.cols();
  f.payoff1.resize(static_cast<std::size_t>(f.m1) * f.m2);
  f.payoff2.resize(f.payoff1.size());
  for (int i = 0; i < f.m1; ++i) {
    for (int j = 0; j < f.m2; ++j) {
      f.payoff1[i * f.m2 + j] = g.payoff1(i, j);
      f.payoff2[i * f.m2 + j] = g.payoff2(i, j);
    }
  }
  f.belief1 = {1.0};
  f.belief2 = {1.0};
  f.feasible1 = {g.feasible1.empty() ? std::vector<bool>(f.m1, true)
                                     : g.feasible1};
  f.feasible2 = {g.feasible2.empty() ? std::vector<bool>(f.m2, true)
                                     : g.feasible2};
  return f;
}

// Expected payoff of each pure action of agent (p, type) against the
// opponent's per-type strategies.
std::vector<double> ActionValues(const AgentForm& f, Player p, int type,
                                 const std::vector<FiniteDistribution>& sigma1,
                                 const std::vector<FiniteDistribution>& sigma2) {
  const bool def = p == Player::kDefender;
  std::vector<double> u(def ? f.m1 : f.m2, 0.0);
  const int opp_types = def ? f.n2 : f.n1;
  for (int o = 0; o < opp_types; ++o) {
    const double w = def ? f.belief1[o] : f.belief2[o];
    if (w == 0.0) continue;
    const int t1 = def ? type : o;
    const int t2 = def ? o : type;
    for (int a1 = 0; a1 < f.m1; ++a1) {
      for (int a2 = 0; a2 < f.m2; ++a2) {
        const double opp_prob = def ? sigma2[t2][a2] : sigma1[t1][a1];
        if (opp_prob == 0.0) continue;
        u[def ? a1 : a2] += w * opp_prob * f.J(p, a1, a2, t1, t2);
      }
    }
  }
  return u;
}

EquilibriumResult Evaluate(const AgentForm& f,
                           const std::vector<FiniteDistribution>& sigma1,
                           const std::vector<FiniteDistribution>& sigma2) {
  EquilibriumResult r;
  r.defender = sigma1;
  r.user = sigma2;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const bool def = p == Player::kDefender;
    const int types = def ? f.n1 : f.n2;
    auto& values = def ? r.defender_values : r.user_values;
    auto& gaps = def ? r.defender_gaps : r.user_gaps;
    double ex_ante = 0.0;
    for (int t = 0; t < types; ++t) {
      const auto u = ActionValues(f, p, t, sigma1, sigma2);
      const FiniteDistribution& own = def ? sigma1[t] : sigma2[t];
      const auto& feasible = def ? f.feasible1[t] : f.feasible2[t];
      double value = 0.0;
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < u.size(); ++a) {
        value += own[a] * u[a];
        if (feasible[a]) best = std::max(best, u[a]);
      }
      values.push_back(value);
      gaps.push_back(std::max(0.0, best - value));
      ex_ante += (def ? f.belief2[t] : f.belief1[t]) * value;
      r.gap = std::max(r.gap, gaps.back());
    }
    (def ? r.defender_value : r.user_value) = ex_ante;
  }
  return r;
}

// Non-empty subsets of the feasible actions, as sorted index lists, ordered
// by size and then lexicographically.
std::vector<std::vector<int>> Supports(const std::vector<bool>& feasible) {
  std::vector<int> actions;
  for (std::size_t a = 0; a < feasible.size(); ++a) {
    if (feasible[a]) actions.push_back(static_cast<int>(a));
  }
  std::vector<std::vector<int>> out;
  const std::uint32_t limit = 1u << actions.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      if (mask & (1u << i)) s.push_back(actions[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// A choice of support per agent of one player.
using SupportTuple = std::vector<std::vector<int>>;

void BuildTuples(const std::vector<std::vector<std::vector<int>>>& per_agent,
                 std::size_t agent, SupportTuple* current,
                 std::map<int, std::vector<SupportTuple>>* by_extra, int extra) {
  if (agent == per_agent.size()) {
    (*by_extra)[extra].push_back(*current);
    return;
  }
  for (const auto& s : per_agent[agent]) {
    current->push_back(s);
    BuildTuples(per_agent, agent + 1, current, by_extra,
                extra + static_cast<int>(s.size()) - 1);
    current->pop_back();
  }
}

// Solves the indifference system that makes every agent of `indifferent`
// player indifferent over its support, for the opponent's strategies on the
// opponent supports. Returns false when singular or infeasible.
bool SolveIndifference(const AgentForm& f, Player indifferent,
                       const SupportTuple& own, const SupportTuple& opp,
                       std::vector<FiniteDistribution>* opp_strategy,
                       SupportEnumerationStats* stats) {
  const bool def = indifferent == Player::kDefender;
  const int own_types = def ? f.n1 : f.n2;
  const int opp_types = def ? f.n2 : f.n1;
  const int opp_actions = def ? f.m2 : f.m1;
  std::vector<int> offset(opp_types + 1, 0);
  for (int o = 0; o < opp_types; ++o) {
    offset[o + 1] = offset[o] + static_cast<int>(opp[o].size());
  }
  const int n = offset[opp_types] + own_types;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  int row = 0;
  for (int t = 0; t < own_types; ++t) {
    for (int a : own[t]) {
      for (int o = 0; o < opp_types; ++o) {
        const double w = def ? f.belief1[o] : f.belief2[o];
        for (std::size_t k = 0; k < opp[o].size(); ++k) {
          const int b_act = opp[o][k];
          const double payoff = def ? f.J(indifferent, a, b_act, t, o)
                                    : f.J(indifferent, b_act, a, o, t);
          A(row, offset[o] + static_cast<int>(k)) = w * payoff;
        }
      }
      A(row, offset[opp_types] + t) = -1.0;
      ++row;
    }
  }
  for (int o = 0; o < opp_types; ++o) {
    for (int k = offset[o]; k < offset[o + 1]; ++k) A(row, k) = 1.0;
    b(row) = 1.0;
    ++row;
  }
  if (row != n) return false;
  if (stats) ++stats->candidates;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible()) {
    if (stats) ++stats->degenerate;
    return false;
  }
  const Eigen::VectorXd x = lu.solve(b);
  if ((A * x - b).lpNorm<Eigen::Infinity>() > 1e-9) {
    if (stats) ++stats->degenerate;
    return false;
  }
  opp_strategy->clear();
  for (int o = 0; o < opp_types; ++o) {
    std::vector<double> w(opp_actions, 0.0);
    for (std::size_t k = 0; k < opp[o].size(); ++k) {
      const double p = x(offset[o] + static_cast<int>(k));
      if (p < -kNegativeTolerance) return false;
      w[opp[o][k]] = std::max(p, 0.0);
    }
    opp_strategy->push_back(FiniteDistribution::Normalized(std::move(w)));
  }
  return true;
}

std::vector<std::vector<int>> SupportKey(const EquilibriumResult& r) {
  std::vector<std::vector<int>> key;
  for (const auto& d : r.defender) key.push_back(d.Support());
  for (const auto& d : r.user) key.push_back(d.Support());
  return key;
}

bool SameProfile(const EquilibriumResult& a, const EquilibriumResult& b) {
  for (std::size_t t = 0; t < a.defender.size(); ++t) {
    if (a.defender[t].MaxAbsDiff(b.defender[t]) > 1e-9) return false;
  }
  for (std::size_t t = 0; t < a.user.size(); ++t) {
    if (a.user[t].MaxAbsDiff(b.user[t]) > 1e-9) return false;
  }
  return true;
}

std::vector<EquilibriumResult> EnumerateSupports(const AgentForm& f,
                                                 SupportEnumerationStats* stats) {
  std::vector<std::vector<std::vector<int>>> per1, per2;
  for (int t = 0; t < f.n1; ++t) per1.push_back(Supports(f.feasible1[t]));
  for (int t = 0; t < f.n2; ++t) per2.push_back(Supports(f.feasible2[t]));
  std::map<int, std::vector<SupportTuple>> tuples1, tuples2;
  SupportTuple scratch;
  BuildTuples(per1, 0, &scratch, &tuples1, 0);
  BuildTuples(per2, 0, &scratch, &tuples2, 0);
  long pairs = 0;
  for (const auto& [extra, list] : tuples1) {
    auto it = tuples2.find(extra);
    if (it != tuples2.end()) {
      pairs += static_cast<long>(list.size()) * static_cast<long>(it->second.size());
    }
  }
  if (pairs > kMaxSupportPairs) {
    throw SizeLimitError("support enumeration needs " + std::to_string(pairs) +
                         " support pairs");
  }

  std::vector<EquilibriumResult> found;
  for (const auto& [extra, list1] : tuples1) {
    auto it = tuples2.find(extra);
    if (it == tuples2.end()) continue;
    for (const auto& s1 : list1) {
      for (const auto& s2 : it->second) {
        std::vector<FiniteDistribution> sigma1, sigma2;
        // Defender indifference pins the user's mix and vice versa.
        if (!SolveIndifference(f, Player::kDefender, s1, s2, &sigma2, stats)) {
          continue;
        }
        if (!SolveIndifference(f, Player::kUser, s2, s1, &sigma1, stats)) {
          continue;
        }
        EquilibriumResult r = Evaluate(f, sigma1, sigma2);
        if (r.gap > kEquilibriumTolerance) continue;
        bool duplicate = false;
        for (const auto& g : found) duplicate = duplicate || SameProfile(g, r);
        if (!duplicate) found.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const EquilibriumResult& a, const EquilibriumResult& b) {
                     return SupportKey(a) < SupportKey(b);
                   });
  return found;
}

void CheckStatic(const StaticBayesianGame& g) {
  RequireValidGame(ToMultiStage(g));
}

}  // namespace

MultiStageGame ToMultiStage(const StaticBayesianGame& game) {
  MultiStageGame m;
  m.types1 = game.types1;
  m.types2 = game.types2;
  m.prior_about1 = game.prior_about1;
  m.prior_about2 = game.prior_about2;
  m.initial_state = 0;
  m.stages = {game.stage};
  m.stages[0].transition.clear();
  return m;
}

StaticBayesianGame FromMultiStage(const MultiStageGame& game) {
  RequireValidGame(game);
  if (game.horizon() != 0) {
    throw MalformedInputError("static solvers need a horizon-0 game");
  }
  const StageGame& s = game.stages[0];
  StaticBayesianGame out;
  out.types1 = game.types1;
  out.types2 = game.types2;
  out.prior_about1 = game.prior_about1;
  out.prior_about2 = game.prior_about2;
  out.stage = StageGame::Create({s.states[game.initial_state]}, s.actions1,
                                s.actions2, s.num_types1, s.num_types2);
  const int x = game.initial_state;
  for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
    for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
      for (int t1 = 0; t1 < s.num_types1; ++t1) {
        for (int t2 = 0; t2 < s.num_types2; ++t2) {
          out.stage.SetPayoffs(0, a1, a2, t1, t2,
                               s.Payoff(Player::kDefender, x, a1, a2, t1, t2),
                               s.Payoff(Player::kUser, x, a1, a2, t1, t2));
        }
      }
    }
  }
  for (Player p : {Player::kDefender, Player::kUser}) {
    for (int t = 0; t < s.num_types(p); ++t) {
      for (int a = 0; a < s.num_actions(p); ++a) {
        if (!s.Feasible(p, x, t, a)) out.stage.SetFeasible(p, 0, t, a, false);
      }
    }
  }
  return out;
}

BimatrixGame PriorAveraged(const StaticBayesianGame& game) {
  CheckStatic(game);
  const StageGame& s = game.stage;
  BimatrixGame g;
  g.actions1 = s.actions1;
  g.actions2 = s.actions2;
  g.payoff1 = Eigen::MatrixXd::Zero(s.num_actions1(), s.num_actions2());
  g.payoff2 = g.payoff1;
  for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
    for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
      for (int t1 = 0; t1 < s.num_types1; ++t1) {
        for (int t2 = 0; t2 < s.num_types2; ++t2) {
          const double w = game.prior_about1[t1] * game.prior_about2[t2];
          g.payoff1(a1, a2) += w * s.Payoff(Player::kDefender, 0, a1, a2, t1, t2);
          g.payoff2(a1, a2) += w * s.Payoff(Player::kUser, 0, a1, a2, t1, t2);
        }
      }
    }
  }
  g.feasible1.assign(s.num_actions1(), true);
  g.feasible2.assign(s.num_actions2(), true);
  for (int t = 0; t < s.num_types1; ++t) {
    for (int a = 0; a < s.num_actions1(); ++a) {
      if (!s.Feasible(Player::kDefender, 0, t, a)) g.feasible1[a] = false;
    }
  }
  for (int t = 0; t < s.num_types2; ++t) {
    for (int a = 0; a < s.num_actions2(); ++a) {
      if (!s.Feasible(Player::kUser, 0, t, a)) g.feasible2[a] = false;
    }
  }
  return g;
}

BimatrixGame TypeSlice(const StaticBayesianGame& game, int t1, int t2) {
  CheckStatic(game);
  const StageGame& s = game.stage;
  if (t1 < 0 || t1 >= s.num_types1 || t2 < 0 || t2 >= s.num_types2) {
    throw MalformedInputError("type index out of range");
  }
  BimatrixGame g;
  g.actions1 = s.actions1;
  g.actions2 = s.actions2;
  g.payoff1.resize(s.num_actions1(), s.num_actions2());
  g.payoff2.resize(s.num_actions1(), s.num_actions2());
  for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
    for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
      g.payoff1(a1, a2) = s.Payoff(Player::kDefender, 0, a1, a2, t1, t2);
      g.payoff2(a1, a2) = s.Payoff(Player::kUser, 0, a1, a2, t1, t2);
    }
  }
  g.feasible1 = s.FeasibleActions(Player::kDefender, 0, t1);
  g.feasible2 = s.FeasibleActions(Player::kUser, 0, t2);
  return g;
}

std::vector<int> BestResponseSet(const Eigen::MatrixXd& payoff,
                                 const FiniteDistribution& opponent,
                                 Player player) {
  const bool def = player == Player::kDefender;
  const int own = static_cast<int>(def ? payoff.rows() : payoff.cols());
  const int opp = static_cast<int>(def ? payoff.cols() : payoff.rows());
  if (opponent.size() != opp) {
    throw MalformedInputError("opponent strategy size mismatch");
  }
  std::vector<double> u(own, 0.0);
  for (int a = 0; a < own; ++a) {
    for (int b = 0; b < opp; ++b) {
      u[a] += opponent[b] * (def ? payoff(a, b) : payoff(b, a));
    }
  }
  const double best = *std::max_element(u.begin(), u.end());
  std::vector<int> out;
  for (int a = 0; a < own; ++a) {
    if (u[a] >= best - kTieTolerance) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<int, int>> PureNe(const BimatrixGame& game) {
  const int m1 = game.rows();
  const int m2 = game.cols();
  auto ok1 = [&](int a) { return game.feasible1.empty() || game.feasible1[a]; };
  auto ok2 = [&](int a) { return game.feasible2.empty() || game.feasible2[a]; };
  std::vector<std::pair<int, int>> out;
  for (int a1 = 0; a1 < m1; ++a1) {
    if (!ok1(a1)) continue;
    for (int a2 = 0; a2 < m2; ++a2) {
      if (!ok2(a2)) continue;
      bool stable = true;
      for (int d = 0; d < m1 && stable; ++d) {
        stable = !ok1(d) || game.payoff1(d, a2) <= game.payoff1(a1, a2);
      }
      for (int d = 0; d < m2 && stable; ++d) {
        stable = !ok2(d) || game.payoff2(a1, d) <= game.payoff2(a1, a2);
      }
      if (stable) out.emplace_back(a1, a2);
    }
  }
  return out;
}

std::vector<EquilibriumResult> MixedNe(const BimatrixGame& game,
                                       SupportEnumerationStats* stats) {
  if (game.payoff1.rows() != game.payoff2.rows() ||
      game.payoff1.cols() != game.payoff2.cols()) {
    throw MalformedInputError("payoff matrices differ in shape");
  }
  if (game.rows() > kMaxBimatrixActions || game.cols() > kMaxBimatrixActions) {
    throw SizeLimitError("support enumeration is limited to 8 actions per player");
  }
  return EnumerateSupports(FromBimatrix(game), stats);
}

EquilibriumResult EvaluateBimatrix(const BimatrixGame& game,
                                   const FiniteDistribution& sigma1,
                                   const FiniteDistribution& sigma2) {
  if (sigma1.size() != game.rows() || sigma2.size() != game.cols()) {
    throw MalformedInputError("strategy size mismatch");
  }
  return Evaluate(FromBimatrix(game), {sigma1}, {sigma2});
}

EquilibriumResult EvaluateBayesian(const StaticBayesianGame& game,
                                   const std::vector<FiniteDistribution>& sigma1,
                                   const std::vector<FiniteDistribution>& sigma2) {
  CheckStatic(game);
  const StageGame& s = game.stage;
  if (static_cast<int>(sigma1.size()) != s.num_types1 ||
      static_cast<int>(sigma2.size()) != s.num_types2) {
    throw MalformedInputError("profile needs one strategy per type");
  }
  for (const auto& d : sigma1) {
    if (d.size() != s.num_actions1()) throw MalformedInputError("strategy size");
  }
  for (const auto& d : sigma2) {
    if (d.size() != s.num_actions2()) throw MalformedInputError("strategy size");
  }
  return Evaluate(FromStage(s, game.prior_about2, game.prior_about1), sigma1,
                  sigma2);
}

std::vector<EquilibriumResult> SolveBne(const StaticBayesianGame& game,
                                        SupportEnumerationStats* stats) {
  CheckStatic(game);
  if (game.information == InformationStructure::kUninformed) {
    const BimatrixGame avg = PriorAveraged(game);
    std::vector<EquilibriumResult> out;
    for (const auto& eq : MixedNe(avg, stats)) {
      std::vector<FiniteDistribution> s1(game.stage.num_types1, eq.defender[0]);
      std::vector<FiniteDistribution> s2(game.stage.num_types2, eq.user[0]);
      EquilibriumResult r = EvaluateBayesian(game, s1, s2);
      // Without type information only the averaged deviations are available.
      std::fill(r.defender_gaps.begin(), r.defender_gaps.end(),
                eq.defender_gaps[0]);
      std::fill(r.user_gaps.begin(), r.user_gaps.end(), eq.user_gaps[0]);
      r.gap = eq.gap;
      r.defender_value = eq.defender_value;
      r.user_value = eq.user_value;
      out.push_back(std::move(r));
    }
    return out;
  }
  return EnumerateSupports(
      FromStage(game.stage, game.prior_about2, game.prior_about1), stats);
}

}  // namespace secgame
