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


#include "secgame/signaling.h"

#include <cmath>
#include <functional>
#include <limits>

#include "secgame/errors.h"
#include "secgame/lp.h"

namespace secgame {
namespace {

constexpr double kTie = 1e-9;
constexpr double kMinSupportMass = 1e-9;
constexpr long kMaxSenderMaps = 10'000;
constexpr int kMaxMixedDimension = 3;

void RequireValid(const SignalingGame& g) {
  const auto v = ValidateSignalingGame(g);
  if (v.empty()) return;
  std::string msg = "invalid signaling game:";
  for (const auto& s : v) msg += "\n  " + s;
  throw MalformedInputError(msg);
}

std::vector<double> ActionValues(const SignalingGame& g,
                                 const FiniteDistribution& belief, int m) {
  std::vector<double> u(g.num_actions(), 0.0);
  for (int a = 0; a < g.num_actions(); ++a) {
    for (int t = 0; t < g.num_types(); ++t) u[a] += belief[t] * g.Receiver(a, m, t);
  }
  return u;
}

double SenderValue(const SignalingGame& g,
                   const std::vector<FiniteDistribution>& receiver, int m,
                   int t) {
  double v = 0.0;
  for (int a = 0; a < g.num_actions(); ++a) v += receiver[m][a] * g.Sender(a, m, t);
  return v;
}

// Off-path candidates: the prior first, then the grid.
std::vector<FiniteDistribution> OffPathCandidates(const SignalingGame& g,
                                                  int resolution) {
  std::vector<FiniteDistribution> out = {FiniteDistribution(g.prior)};
  for (auto& p : SimplexGrid(g.num_types(), resolution)) out.push_back(std::move(p));
  return out;
}

// For one off-path message: each pure action that is a best response to some
// candidate, with the candidates supporting it.
struct OffPathOption {
  int action;
  std::vector<FiniteDistribution> support;
};

std::vector<OffPathOption> OffPathOptions(
    const SignalingGame& g, int m, const std::vector<FiniteDistribution>& cands) {
  std::vector<OffPathOption> out;
  for (int a = 0; a < g.num_actions(); ++a) {
    OffPathOption o{a, {}};
    for (const auto& b : cands) {
      const auto br = ReceiverBestResponse(g, b, m);
      if (std::find(br.begin(), br.end(), a) != br.end()) o.support.push_back(b);
    }
    if (!o.support.empty()) out.push_back(std::move(o));
  }
  return out;
}

// Fills values, gap, classification and off-path beliefs of a candidate.
SignalingPbne Finish(const SignalingGame& g,
                     std::vector<FiniteDistribution> sender,
                     std::vector<FiniteDistribution> receiver,
                     const std::vector<const OffPathOption*>& off_choice) {
  SignalingPbne eq;
  const FiniteDistribution prior(g.prior);
  eq.sender = std::move(sender);
  eq.receiver = std::move(receiver);
  eq.on_path.assign(g.num_messages(), 0);
  eq.supporting_beliefs.resize(g.num_messages());
  for (int m = 0; m < g.num_messages(); ++m) {
    if (auto post = PosteriorFromSender(prior, eq.sender, m)) {
      eq.on_path[m] = 1;
      eq.belief.push_back(*post);
    } else {
      eq.supporting_beliefs[m] = off_choice[m]->support;
      eq.belief.push_back(off_choice[m]->support.front());
    }
  }
  eq.classification = Classify(eq.sender);
  eq.sender_values.assign(g.num_types(), 0.0);
  for (int t = 0; t < g.num_types(); ++t) {
    for (int m = 0; m < g.num_messages(); ++m) {
      eq.sender_values[t] += eq.sender[t][m] * SenderValue(g, eq.receiver, m, t);
    }
  }
  for (int t = 0; t < g.num_types(); ++t) {
    for (int m = 0; m < g.num_messages(); ++m) {
      const double pm = prior[t] * eq.sender[t][m];
      if (pm == 0.0) continue;
      for (int a = 0; a < g.num_actions(); ++a) {
        eq.receiver_value += pm * eq.receiver[m][a] * g.Receiver(a, m, t);
      }
    }
  }
  eq.gap = VerifySignaling(g, eq).gap();
  return eq;
}

bool SameEquilibrium(const SignalingPbne& a, const SignalingPbne& b) {
  for (std::size_t i = 0; i < a.sender.size(); ++i) {
    if (a.sender[i].MaxAbsDiff(b.sender[i]) > 1e-9) return false;
  }
  for (std::size_t i = 0; i < a.receiver.size(); ++i) {
    if (a.receiver[i].MaxAbsDiff(b.receiver[i]) > 1e-9) return false;
  }
  return true;
}

// Iterates the cartesian product of option lists.
void ForEachChoice(const std::vector<int>& sizes,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(sizes.size(), 0);
  for (int s : sizes) {
    if (s == 0) return;
  }
  while (true) {
    fn(idx);
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
    if (i == idx.size()) return;
  }
}

std::vector<std::vector<int>> NonEmptySubsets(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  const unsigned limit = 1u << items.size();
  for (unsigned mask = 1; mask < limit; ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask & (1u << i)) s.push_back(items[i]);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Sender mix with the given supports that keeps each on-path receiver
// support optimal. Maximizes the smallest support probability.
std::optional<std::vector<FiniteDistribution>> SenderMix(
    const SignalingGame& g, const std::vector<std::vector<int>>& sender_support,
    const std::vector<std::vector<int>>& receiver_support) {
  const int T = g.num_types();
  const int M = g.num_messages();
  std::vector<std::vector<int>> var(T, std::vector<int>(M, -1));
  int n = 0;
  for (int t = 0; t < T; ++t) {
    for (int m : sender_support[t]) var[t][m] = n++;
  }
  const int tv = n++;
  LinearProgram lp(n);
  lp.objective[tv] = 1.0;
  lp.upper[tv] = 1.0;
  for (int t = 0; t < T; ++t) {
    std::vector<double> row(n, 0.0);
    for (int m : sender_support[t]) {
      row[var[t][m]] = 1.0;
      std::vector<double> lb(n, 0.0);
      lb[tv] = 1.0;
      lb[var[t][m]] = -1.0;
      lp.AddLessEqual(std::move(lb), 0.0);
    }
    lp.AddEqual(std::move(row), 1.0);
  }
  // Receiver optimality, scaled by the message probability.
  for (int m = 0; m < M; ++m) {
    const auto& rs = receiver_support[m];
    if (rs.empty()) continue;
    const int ref = rs.front();
    for (int a = 0; a < g.num_actions(); ++a) {
      if (a == ref) continue;
      std::vector<double> row(n, 0.0);
      for (int t = 0; t < T; ++t) {
        if (var[t][m] < 0) continue;
        row[var[t][m]] = g.prior[t] * (g.Receiver(a, m, t) - g.Receiver(ref, m, t));
      }
      const bool in_support = std::find(rs.begin(), rs.end(), a) != rs.end();
      if (in_support) {
        lp.AddEqual(std::move(row), 0.0);
      } else {
        lp.AddLessEqual(std::move(row), 0.0);
      }
    }
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal || sol.z[tv] <= kMinSupportMass) {
    return std::nullopt;
  }
  std::vector<FiniteDistribution> out;
  for (int t = 0; t < T; ++t) {
    std::vector<double> w(M, 0.0);
    for (int m : sender_support[t]) w[m] = std::max(0.0, sol.z[var[t][m]]);
    out.push_back(FiniteDistribution::Normalized(std::move(w)));
  }
  return out;
}

// Receiver mix on on-path messages that keeps every sender type indifferent
// over its support and unwilling to deviate. Off-path messages use the fixed
// pure `off_action`.
std::optional<std::vector<FiniteDistribution>> ReceiverMix(
    const SignalingGame& g, const std::vector<std::vector<int>>& sender_support,
    const std::vector<std::vector<int>>& receiver_support,
    const std::vector<int>& off_action) {
  const int T = g.num_types();
  const int M = g.num_messages();
  const int A = g.num_actions();
  std::vector<std::vector<int>> var(M, std::vector<int>(A, -1));
  int n = 0;
  for (int m = 0; m < M; ++m) {
    for (int a : receiver_support[m]) var[m][a] = n++;
  }
  const int v0 = n;
  n += T;
  const int tv = n++;
  LinearProgram lp(n);
  lp.objective[tv] = 1.0;
  lp.upper[tv] = 1.0;
  for (int t = 0; t < T; ++t) lp.SetFree(v0 + t);
  for (int m = 0; m < M; ++m) {
    if (receiver_support[m].empty()) continue;
    std::vector<double> row(n, 0.0);
    for (int a : receiver_support[m]) {
      row[var[m][a]] = 1.0;
      std::vector<double> lb(n, 0.0);
      lb[tv] = 1.0;
      lb[var[m][a]] = -1.0;
      lp.AddLessEqual(std::move(lb), 0.0);
    }
    lp.AddEqual(std::move(row), 1.0);
  }
  for (int t = 0; t < T; ++t) {
    for (int m = 0; m < M; ++m) {
      if (!g.Allowed(t, m)) continue;
      // payoff(t, m) - v_t, linear in the receiver mix.
      std::vector<double> row(n, 0.0);
      double constant = 0.0;
      if (receiver_support[m].empty()) {
        constant = g.Sender(off_action[m], m, t);
      } else {
        for (int a : receiver_support[m]) row[var[m][a]] = g.Sender(a, m, t);
      }
      row[v0 + t] = -1.0;
      const auto& ss = sender_support[t];
      if (std::find(ss.begin(), ss.end(), m) != ss.end()) {
        lp.AddEqual(std::move(row), -constant);
      } else {
        lp.AddLessEqual(std::move(row), -constant);
      }
    }
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal || sol.z[tv] <= kMinSupportMass) {
    return std::nullopt;
  }
  std::vector<FiniteDistribution> out;
  for (int m = 0; m < M; ++m) {
    if (receiver_support[m].empty()) {
      out.push_back(FiniteDistribution::PointMass(A, off_action[m]));
      continue;
    }
    std::vector<double> w(A, 0.0);
    for (int a : receiver_support[m]) w[a] = std::max(0.0, sol.z[var[m][a]]);
    out.push_back(FiniteDistribution::Normalized(std::move(w)));
  }
  return out;
}

}  // namespace

SignalingGame SignalingGame::Create(std::vector<std::string> types,
                                    std::vector<std::string> messages,
                                    std::vector<std::string> actions,
                                    std::vector<double> prior) {
  SignalingGame g;
  g.types = std::move(types);
  g.messages = std::move(messages);
  g.actions = std::move(actions);
  g.prior = std::move(prior);
  const std::size_t cells = g.types.size() * g.messages.size() * g.actions.size();
  g.receiver_payoff.assign(cells, 0.0);
  g.sender_payoff.assign(cells, 0.0);
  return g;
}

void SignalingGame::SetPayoffs(int a, int m, int t, double receiver,
                               double sender) {
  receiver_payoff.at(Index(a, m, t)) = receiver;
  sender_payoff.at(Index(a, m, t)) = sender;
}

void SignalingGame::SetAllowed(int t, int m, bool allowed) {
  if (feasible.empty()) feasible.assign(types.size() * messages.size(), 1);
  feasible.at(static_cast<std::size_t>(t) * num_messages() + m) = allowed ? 1 : 0;
}

std::vector<std::string> ValidateSignalingGame(const SignalingGame& g) {
  std::vector<std::string> out;
  if (g.types.empty()) out.push_back("sender type space is empty");
  if (g.messages.empty()) out.push_back("message space is empty");
  if (g.actions.empty()) out.push_back("receiver action space is empty");
  if (!out.empty()) return out;
  if (static_cast<int>(g.prior.size()) != g.num_types()) {
    out.push_back("prior size does not match the sender type space");
  } else if (auto problem = CheckDistribution(g.prior)) {
    out.push_back("prior not normalized or negative: " + *problem);
  }
  const std::size_t cells =
      g.types.size() * g.messages.size() * g.actions.size();
  if (g.receiver_payoff.size() != cells || g.sender_payoff.size() != cells) {
    out.push_back("payoff tensor has the wrong size");
  } else {
    for (const auto* v : {&g.receiver_payoff, &g.sender_payoff}) {
      for (double x : *v) {
        if (!std::isfinite(x)) {
          out.push_back("payoff tensor has non-finite entries");
          break;
        }
      }
    }
  }
  if (!g.feasible.empty() && g.feasible.size() != g.types.size() * g.messages.size()) {
    out.push_back("message mask has the wrong size");
    return out;
  }
  for (int t = 0; t < g.num_types(); ++t) {
    bool any = false;
    for (int m = 0; m < g.num_messages(); ++m) any = any || g.Allowed(t, m);
    if (!any) out.push_back("type " + g.types[t] + " has no allowed message");
  }
  return out;
}

SignalingGame SignalingFromStatic(const StaticBayesianGame& game) {
  RequireValidGame(ToMultiStage(game));
  const StageGame& s = game.stage;
  if (s.num_types1 != 1) {
    throw MalformedInputError(
        "signaling form needs a single defender type; the user is the sender");
  }
  SignalingGame g = SignalingGame::Create(game.types2, s.actions2, s.actions1,
                                          game.prior_about2);
  for (int a = 0; a < s.num_actions1(); ++a) {
    for (int m = 0; m < s.num_actions2(); ++m) {
      for (int t = 0; t < s.num_types2; ++t) {
        g.SetPayoffs(a, m, t, s.Payoff(Player::kDefender, 0, a, m, 0, t),
                     s.Payoff(Player::kUser, 0, a, m, 0, t));
      }
    }
  }
  for (int t = 0; t < s.num_types2; ++t) {
    for (int m = 0; m < s.num_actions2(); ++m) {
      if (!s.Feasible(Player::kUser, 0, t, m)) g.SetAllowed(t, m, false);
    }
  }
  return g;
}

std::string SenderClassName(SenderClass c) {
  switch (c) {
    case SenderClass::kPooling:
      return "pooling";
    case SenderClass::kSeparating:
      return "separating";
    case SenderClass::kSemiSeparating:
      return "semi-separating";
  }
  return "unknown";
}

std::optional<FiniteDistribution> PosteriorFromSender(
    const FiniteDistribution& prior,
    const std::vector<FiniteDistribution>& sender, int message) {
  if (static_cast<int>(sender.size()) != prior.size()) {
    throw MalformedInputError("sender strategy needs one entry per type");
  }
  std::vector<double> joint(prior.size());
  double total = 0.0;
  for (int t = 0; t < prior.size(); ++t) {
    joint[t] = prior[t] * sender[t][message];
    total += joint[t];
  }
  if (total <= 0.0) return std::nullopt;
  for (double& j : joint) j /= total;
  return FiniteDistribution::Normalized(std::move(joint));
}

std::vector<int> ReceiverBestResponse(const SignalingGame& game,
                                      const FiniteDistribution& belief,
                                      int message) {
  if (belief.size() != game.num_types()) {
    throw MalformedInputError("belief size does not match the type space");
  }
  const auto u = ActionValues(game, belief, message);
  const double best = *std::max_element(u.begin(), u.end());
  std::vector<int> out;
  for (int a = 0; a < game.num_actions(); ++a) {
    if (u[a] >= best - kTie) out.push_back(a);
  }
  return out;
}

std::vector<FiniteDistribution> SimplexGrid(int n, int resolution) {
  if (n < 1 || resolution < 2) {
    throw ParameterError("simplex grid needs n >= 1 and resolution >= 2");
  }
  const int steps = resolution - 1;
  std::vector<FiniteDistribution> out;
  std::vector<int> c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      c[i] = left;
      std::vector<double> w(n);
      for (int j = 0; j < n; ++j) w[j] = static_cast<double>(c[j]) / steps;
      out.push_back(FiniteDistribution::Normalized(std::move(w)));
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, steps);
  return out;
}

SenderClass Classify(const std::vector<FiniteDistribution>& sender) {
  if (sender.empty()) throw MalformedInputError("empty sender strategy");
  bool pooling = true;
  for (std::size_t t = 1; t < sender.size(); ++t) {
    pooling = pooling && sender[t].MaxAbsDiff(sender[0]) <= kTie;
  }
  if (pooling) return SenderClass::kPooling;
  for (std::size_t t = 0; t < sender.size(); ++t) {
    for (std::size_t u = t + 1; u < sender.size(); ++u) {
      for (int m = 0; m < sender[t].size(); ++m) {
        if (sender[t][m] > 0.0 && sender[u][m] > 0.0) {
          return SenderClass::kSemiSeparating;
        }
      }
    }
  }
  return SenderClass::kSeparating;
}

SignalingCheck VerifySignaling(const SignalingGame& g, const SignalingPbne& eq) {
  RequireValid(g);
  const int T = g.num_types(), M = g.num_messages(), A = g.num_actions();
  if (static_cast<int>(eq.sender.size()) != T ||
      static_cast<int>(eq.receiver.size()) != M ||
      static_cast<int>(eq.belief.size()) != M ||
      static_cast<int>(eq.on_path.size()) != M) {
    throw MalformedInputError("profile dimensions do not match the game");
  }
  for (const auto& s : eq.sender) {
    if (s.size() != M) throw MalformedInputError("sender strategy size");
  }
  for (int m = 0; m < M; ++m) {
    if (eq.receiver[m].size() != A || eq.belief[m].size() != T) {
      throw MalformedInputError("receiver strategy or belief size");
    }
  }
  SignalingCheck check;
  const FiniteDistribution prior(g.prior);
  for (int m = 0; m < M; ++m) {
    const auto post = PosteriorFromSender(prior, eq.sender, m);
    if (post.has_value() != (eq.on_path[m] != 0)) check.on_path_flags_ok = false;
    if (post) check.belief_error = std::max(check.belief_error, post->MaxAbsDiff(eq.belief[m]));
    // Receiver optimality under the stored belief, on and off path.
    std::vector<double> u(A, 0.0);
    for (int a = 0; a < A; ++a) {
      for (int t = 0; t < T; ++t) u[a] += eq.belief[m][t] * g.Receiver(a, m, t);
    }
    double achieved = 0.0;
    for (int a = 0; a < A; ++a) achieved += eq.receiver[m][a] * u[a];
    const double best = *std::max_element(u.begin(), u.end());
    check.receiver_gap = std::max(check.receiver_gap, best - achieved);
  }
  for (int t = 0; t < T; ++t) {
    std::vector<double> u(M, 0.0);
    double achieved = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int m = 0; m < M; ++m) {
      for (int a = 0; a < A; ++a) u[m] += eq.receiver[m][a] * g.Sender(a, m, t);
      achieved += eq.sender[t][m] * u[m];
      if (g.Allowed(t, m)) {
        best = std::max(best, u[m]);
      } else if (eq.sender[t][m] > 0.0) {
        check.masks_ok = false;
      }
    }
    check.sender_gap = std::max(check.sender_gap, best - achieved);
  }
  return check;
}

std::vector<SignalingPbne> SolvePurePbne(const SignalingGame& g,
                                         int off_path_grid) {
  RequireValid(g);
  const int T = g.num_types(), M = g.num_messages(), A = g.num_actions();
  std::vector<std::vector<int>> allowed(T);
  double maps = 1.0;
  for (int t = 0; t < T; ++t) {
    for (int m = 0; m < M; ++m) {
      if (g.Allowed(t, m)) allowed[t].push_back(m);
    }
    maps *= static_cast<double>(M);
  }
  if (maps > kMaxSenderMaps) {
    throw SizeLimitError("pure sender enumeration exceeds 1e4 strategies");
  }
  const auto candidates = OffPathCandidates(g, off_path_grid);
  std::vector<std::vector<OffPathOption>> off_options(M);
  for (int m = 0; m < M; ++m) off_options[m] = OffPathOptions(g, m, candidates);
  const FiniteDistribution prior(g.prior);

  std::vector<SignalingPbne> out;
  std::vector<int> sizes(T);
  for (int t = 0; t < T; ++t) sizes[t] = static_cast<int>(allowed[t].size());
  ForEachChoice(sizes, [&](const std::vector<int>& pick) {
    std::vector<FiniteDistribution> sender;
    for (int t = 0; t < T; ++t) {
      sender.push_back(FiniteDistribution::PointMass(M, allowed[t][pick[t]]));
    }
    // Per message: the receiver's pure options.
    std::vector<std::vector<int>> options(M);
    std::vector<char> on(M, 0);
    for (int m = 0; m < M; ++m) {
      if (auto post = PosteriorFromSender(prior, sender, m)) {
        on[m] = 1;
        options[m] = ReceiverBestResponse(g, *post, m);
      } else {
        for (const auto& o : off_options[m]) options[m].push_back(o.action);
      }
    }
    std::vector<int> osizes(M);
    for (int m = 0; m < M; ++m) osizes[m] = static_cast<int>(options[m].size());
    ForEachChoice(osizes, [&](const std::vector<int>& rpick) {
      std::vector<int> response(M);
      for (int m = 0; m < M; ++m) response[m] = options[m][rpick[m]];
      for (int t = 0; t < T; ++t) {
        const int sent = allowed[t][pick[t]];
        const double v = g.Sender(response[sent], sent, t);
        for (int m : allowed[t]) {
          if (g.Sender(response[m], m, t) > v + kTie) return;
        }
      }
      std::vector<FiniteDistribution> receiver;
      std::vector<const OffPathOption*> off_choice(M, nullptr);
      for (int m = 0; m < M; ++m) {
        receiver.push_back(FiniteDistribution::PointMass(A, response[m]));
        if (!on[m]) {
          for (const auto& o : off_options[m]) {
            if (o.action == response[m]) off_choice[m] = &o;
          }
        }
      }
      out.push_back(Finish(g, sender, std::move(receiver), off_choice));
    });
  });
  return out;
}

std::vector<SignalingPbne> SolveMixedPbne(const SignalingGame& g,
                                          int off_path_grid) {
  RequireValid(g);
  const int T = g.num_types(), M = g.num_messages(), A = g.num_actions();
  if (T > kMaxMixedDimension || M > kMaxMixedDimension ||
      A > kMaxMixedDimension) {
    throw SizeLimitError(
        "mixed signaling enumeration is limited to 3 types, messages and "
        "actions");
  }
  const auto candidates = OffPathCandidates(g, off_path_grid);
  std::vector<std::vector<OffPathOption>> off_options(M);
  for (int m = 0; m < M; ++m) off_options[m] = OffPathOptions(g, m, candidates);
  std::vector<int> all_actions(A);
  for (int a = 0; a < A; ++a) all_actions[a] = a;
  const auto action_subsets = NonEmptySubsets(all_actions);

  std::vector<std::vector<std::vector<int>>> sender_subsets(T);
  std::vector<int> ssizes(T);
  for (int t = 0; t < T; ++t) {
    std::vector<int> allowed;
    for (int m = 0; m < M; ++m) {
      if (g.Allowed(t, m)) allowed.push_back(m);
    }
    sender_subsets[t] = NonEmptySubsets(allowed);
    ssizes[t] = static_cast<int>(sender_subsets[t].size());
  }

  std::vector<SignalingPbne> out;
  ForEachChoice(ssizes, [&](const std::vector<int>& spick) {
    std::vector<std::vector<int>> ssupport(T);
    std::vector<char> on(M, 0);
    for (int t = 0; t < T; ++t) {
      ssupport[t] = sender_subsets[t][spick[t]];
      for (int m : ssupport[t]) on[m] = 1;
    }
    // Receiver supports on path, pure grid-supported options off path.
    std::vector<int> rsizes(M);
    for (int m = 0; m < M; ++m) {
      rsizes[m] = on[m] ? static_cast<int>(action_subsets.size())
                        : static_cast<int>(off_options[m].size());
    }
    ForEachChoice(rsizes, [&](const std::vector<int>& rpick) {
      std::vector<std::vector<int>> rsupport(M);
      std::vector<int> off_action(M, -1);
      std::vector<const OffPathOption*> off_choice(M, nullptr);
      for (int m = 0; m < M; ++m) {
        if (on[m]) {
          rsupport[m] = action_subsets[rpick[m]];
        } else {
          off_choice[m] = &off_options[m][rpick[m]];
          off_action[m] = off_choice[m]->action;
        }
      }
      auto sender = SenderMix(g, ssupport, rsupport);
      if (!sender) return;
      auto receiver = ReceiverMix(g, ssupport, rsupport, off_action);
      if (!receiver) return;
      SignalingPbne eq = Finish(g, std::move(*sender), std::move(*receiver),
                                off_choice);
      if (!VerifySignaling(g, eq).Passes()) return;
      for (const auto& e : out) {
        if (SameEquilibrium(e, eq)) return;
      }
      out.push_back(std::move(eq));
    });
  });
  return out;
}

}  // namespace secgame
