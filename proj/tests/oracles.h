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


// Brute-force reference computations shared by unit and acceptance tests.
// They deliberately avoid the library's solver internals.

#ifndef SECGAME_TESTS_ORACLES_H_
#define SECGAME_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "secgame/game.h"
#include "secgame/signaling.h"

namespace secgame::oracle {

// Largest gain any (player, type) agent gets from a pure deviation in a
// one-state Bayesian stage game. about1 is the user's belief over defender
// types, about2 the defender's belief over user types.
inline double AgentFormGap(const StageGame& s, int x,
                           const std::vector<double>& about1,
                           const std::vector<double>& about2,
                           const std::vector<FiniteDistribution>& sigma1,
                           const std::vector<FiniteDistribution>& sigma2) {
  const int m1 = s.num_actions1(), m2 = s.num_actions2();
  double gap = 0.0;
  for (int t1 = 0; t1 < s.num_types1; ++t1) {
    std::vector<double> u(m1, 0.0);
    for (int a1 = 0; a1 < m1; ++a1)
      for (int t2 = 0; t2 < s.num_types2; ++t2)
        for (int a2 = 0; a2 < m2; ++a2)
          u[a1] += about2[t2] * sigma2[t2][a2] *
                   s.Payoff(Player::kDefender, x, a1, a2, t1, t2);
    double achieved = 0.0, best = -1e300;
    for (int a1 = 0; a1 < m1; ++a1) {
      achieved += sigma1[t1][a1] * u[a1];
      if (s.Feasible(Player::kDefender, x, t1, a1)) best = std::max(best, u[a1]);
    }
    gap = std::max(gap, best - achieved);
  }
  for (int t2 = 0; t2 < s.num_types2; ++t2) {
    std::vector<double> u(m2, 0.0);
    for (int a2 = 0; a2 < m2; ++a2)
      for (int t1 = 0; t1 < s.num_types1; ++t1)
        for (int a1 = 0; a1 < m1; ++a1)
          u[a2] += about1[t1] * sigma1[t1][a1] *
                   s.Payoff(Player::kUser, x, a1, a2, t1, t2);
    double achieved = 0.0, best = -1e300;
    for (int a2 = 0; a2 < m2; ++a2) {
      achieved += sigma2[t2][a2] * u[a2];
      if (s.Feasible(Player::kUser, x, t2, a2)) best = std::max(best, u[a2]);
    }
    gap = std::max(gap, best - achieved);
  }
  return gap;
}

// Violation of receiver optimality at every message, sender optimality per
// type, and Bayes consistency on path. Zero for an exact PBNE.
struct SignalingViolation {
  double receiver = 0.0;
  double sender = 0.0;
  double bayes = 0.0;
  bool masks = true;
};

inline SignalingViolation CheckSignaling(const SignalingGame& g,
                                         const SignalingPbne& eq) {
  SignalingViolation v;
  const int T = g.num_types(), M = g.num_messages(), A = g.num_actions();
  for (int m = 0; m < M; ++m) {
    double marginal = 0.0;
    for (int t = 0; t < T; ++t) marginal += g.prior[t] * eq.sender[t][m];
    if (marginal > 0.0) {
      for (int t = 0; t < T; ++t) {
        const double bayes = g.prior[t] * eq.sender[t][m] / marginal;
        v.bayes = std::max(v.bayes, std::abs(bayes - eq.belief[m][t]));
      }
    }
    double best = -1e300, achieved = 0.0;
    for (int a = 0; a < A; ++a) {
      double u = 0.0;
      for (int t = 0; t < T; ++t) u += eq.belief[m][t] * g.Receiver(a, m, t);
      best = std::max(best, u);
      achieved += eq.receiver[m][a] * u;
    }
    v.receiver = std::max(v.receiver, best - achieved);
  }
  for (int t = 0; t < T; ++t) {
    double best = -1e300, achieved = 0.0;
    for (int m = 0; m < M; ++m) {
      double u = 0.0;
      for (int a = 0; a < A; ++a) u += eq.receiver[m][a] * g.Sender(a, m, t);
      if (g.Allowed(t, m)) best = std::max(best, u);
      if (!g.Allowed(t, m) && eq.sender[t][m] > 0.0) v.masks = false;
      achieved += eq.sender[t][m] * u;
    }
    v.sender = std::max(v.sender, best - achieved);
  }
  return v;
}

// Classification by the textbook definitions applied to a pure map.
inline SenderClass ClassifyPureMap(const std::vector<int>& message_of_type) {
  bool constant = true, injective = true;
  for (std::size_t i = 0; i < message_of_type.size(); ++i) {
    for (std::size_t j = i + 1; j < message_of_type.size(); ++j) {
      if (message_of_type[i] != message_of_type[j]) constant = false;
      if (message_of_type[i] == message_of_type[j]) injective = false;
    }
  }
  if (constant) return SenderClass::kPooling;
  if (injective) return SenderClass::kSeparating;
  return SenderClass::kSemiSeparating;
}

// Expected total payoff of own type `t` of `p` under `profile`, enumerating
// every type of the opponent and every action path.
inline double PathValue(const MultiStageGame& g, const StrategyProfile& profile,
                        Player p, int t) {
  const Player o = Opponent(p);
  const auto& prior =
      p == Player::kDefender ? g.prior_about2 : g.prior_about1;
  double total = 0.0;
  std::function<double(int, int, int)> rec = [&](int k, int x, int to) {
    const StageGame& s = g.stages[k];
    const int t1 = p == Player::kDefender ? t : to;
    const int t2 = p == Player::kDefender ? to : t;
    double v = 0.0;
    for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
      const double p1 = profile.defender[k][x][t1][a1];
      if (p1 == 0.0) continue;
      for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
        const double p2 = profile.user[k][x][t2][a2];
        if (p2 == 0.0) continue;
        double u = s.Payoff(p, x, a1, a2, t1, t2);
        if (k < g.horizon()) u += rec(k + 1, s.NextState(x, a1, a2), to);
        v += p1 * p2 * u;
      }
    }
    return v;
  };
  for (int to = 0; to < g.num_types(o); ++to) {
    total += prior[to] * rec(0, g.initial_state, to);
  }
  return total;
}

// Value of an exact history-dependent best response of own type `t` of `p`
// against the opponent's part of `profile`. Beliefs are carried as
// unnormalized joint weights, so no belief system is involved.
inline double BestResponseValue(const MultiStageGame& g,
                                const StrategyProfile& profile, Player p,
                                int t) {
  const Player o = Opponent(p);
  std::function<double(int, int, const std::vector<double>&)> rec =
      [&](int k, int x, const std::vector<double>& weight) {
        const StageGame& s = g.stages[k];
        double best = -1e300;
        for (int a = 0; a < s.num_actions(p); ++a) {
          if (!s.Feasible(p, x, t, a)) continue;
          double v = 0.0;
          for (int ao = 0; ao < s.num_actions(o); ++ao) {
            std::vector<double> next(weight.size(), 0.0);
            double mass = 0.0;
            for (int to = 0; to < static_cast<int>(weight.size()); ++to) {
              const double q = weight[to] * profile.At(o, k, x, to)[ao];
              if (q == 0.0) continue;
              next[to] = q;
              mass += q;
              const int a1 = p == Player::kDefender ? a : ao;
              const int a2 = p == Player::kDefender ? ao : a;
              const int t1 = p == Player::kDefender ? t : to;
              const int t2 = p == Player::kDefender ? to : t;
              v += q * s.Payoff(p, x, a1, a2, t1, t2);
            }
            if (mass > 0.0 && k < g.horizon()) {
              const int a1 = p == Player::kDefender ? a : ao;
              const int a2 = p == Player::kDefender ? ao : a;
              v += rec(k + 1, s.NextState(x, a1, a2), next);
            }
          }
          best = std::max(best, v);
        }
        return best;
      };
  return rec(0, g.initial_state,
             p == Player::kDefender ? g.prior_about2 : g.prior_about1);
}

// Posterior of own type `t` of `p` over opponent types given that state `x`
// is reached at stage `k`. Empty when the state is unreachable for `t`.
inline std::vector<double> StatePosterior(const MultiStageGame& g,
                                          const StrategyProfile& profile,
                                          Player p, int t, int k, int x) {
  const Player o = Opponent(p);
  const auto& prior =
      p == Player::kDefender ? g.prior_about2 : g.prior_about1;
  std::vector<double> mass(g.num_types(o), 0.0);
  std::function<void(int, int, int, double)> rec = [&](int j, int y, int to,
                                                        double pr) {
    if (j == k) {
      if (y == x) mass[to] += pr;
      return;
    }
    const StageGame& s = g.stages[j];
    const int t1 = p == Player::kDefender ? t : to;
    const int t2 = p == Player::kDefender ? to : t;
    for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
      for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
        const double q = pr * profile.defender[j][y][t1][a1] *
                         profile.user[j][y][t2][a2];
        if (q > 0.0) rec(j + 1, s.NextState(y, a1, a2), to, q);
      }
    }
  };
  for (int to = 0; to < g.num_types(o); ++to) {
    rec(0, g.initial_state, to, prior[to]);
  }
  double total = 0.0;
  for (double v : mass) total += v;
  if (total <= 0.0) return {};
  for (double& v : mass) v /= total;
  return mass;
}

}  // namespace secgame::oracle

#endif  // SECGAME_TESTS_ORACLES_H_
