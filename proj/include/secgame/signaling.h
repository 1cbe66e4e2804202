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


#ifndef SECGAME_SIGNALING_H_
#define SECGAME_SIGNALING_H_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "secgame/distribution.h"
#include "secgame/static_solver.h"

namespace secgame {

// Sender-receiver game. Nature draws the sender's (user's) type, the sender
// picks a message, and the receiver (defender) picks an action after seeing
// only the message.
struct SignalingGame {
  std::vector<std::string> types;     // sender types
  std::vector<std::string> messages;  // sender actions
  std::vector<std::string> actions;   // receiver actions
  std::vector<double> prior;          // receiver's prior over sender types
  // [action][message][type]
  std::vector<double> receiver_payoff;
  std::vector<double> sender_payoff;
  // [type][message]; empty means every message is allowed.
  std::vector<char> feasible;

  static SignalingGame Create(std::vector<std::string> types,
                              std::vector<std::string> messages,
                              std::vector<std::string> actions,
                              std::vector<double> prior);

  int num_types() const { return static_cast<int>(types.size()); }
  int num_messages() const { return static_cast<int>(messages.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  std::size_t Index(int a, int m, int t) const {
    return (static_cast<std::size_t>(a) * num_messages() + m) * num_types() + t;
  }
  double Receiver(int a, int m, int t) const {
    return receiver_payoff[Index(a, m, t)];
  }
  double Sender(int a, int m, int t) const {
    return sender_payoff[Index(a, m, t)];
  }
  bool Allowed(int t, int m) const {
    return feasible.empty() ||
           feasible[static_cast<std::size_t>(t) * num_messages() + m] != 0;
  }
  void SetPayoffs(int a, int m, int t, double receiver, double sender);
  void SetAllowed(int t, int m, bool allowed);
};

std::vector<std::string> ValidateSignalingGame(const SignalingGame& game);

// Reads a static game with a single defender type as a signaling game: the
// user's action is the message and the defender moves second.
SignalingGame SignalingFromStatic(const StaticBayesianGame& game);

enum class SenderClass { kPooling, kSeparating, kSemiSeparating };
std::string SenderClassName(SenderClass c);

struct SignalingPbne {
  std::vector<FiniteDistribution> receiver;  // [message] over actions
  std::vector<FiniteDistribution> sender;    // [type] over messages
  std::vector<FiniteDistribution> belief;    // [message] over types
  std::vector<char> on_path;                 // [message]
  // [message]: off-path candidate beliefs under which the receiver's choice
  // is a best response. Empty for on-path messages.
  std::vector<std::vector<FiniteDistribution>> supporting_beliefs;
  SenderClass classification = SenderClass::kPooling;
  std::vector<double> sender_values;  // [type]
  double receiver_value = 0.0;        // ex ante
  double gap = 0.0;
};

// Bayes posterior over types after `message`; nullopt when the message has
// zero probability under `sender`.
std::optional<FiniteDistribution> PosteriorFromSender(
    const FiniteDistribution& prior,
    const std::vector<FiniteDistribution>& sender, int message);

// Receiver actions maximizing expected payoff under `belief`, ties within
// 1e-9 all reported, in increasing index order.
std::vector<int> ReceiverBestResponse(const SignalingGame& game,
                                      const FiniteDistribution& belief,
                                      int message);

// Points of the simplex over `n` types whose coordinates are multiples of
// 1/(resolution-1), in lexicographic order.
std::vector<FiniteDistribution> SimplexGrid(int n, int resolution);

inline constexpr int kDefaultOffPathGrid = 11;

// All pure-strategy PBNE. Off-path beliefs are searched over the prior and a
// simplex grid; the prior is preferred when it supports the receiver's
// choice. Throws SizeLimitError above 1e4 sender maps.
std::vector<SignalingPbne> SolvePurePbne(const SignalingGame& game,
                                         int off_path_grid = kDefaultOffPathGrid);

// Mixed PBNE by support enumeration over sender types and on-path receiver
// information sets. Off-path receiver choices are pure and grid-supported.
// Throws SizeLimitError above 3 types, messages or actions.
std::vector<SignalingPbne> SolveMixedPbne(const SignalingGame& game,
                                          int off_path_grid = kDefaultOffPathGrid);

// Pooling if every type uses the same distribution, separating if supports
// are pairwise disjoint, semi-separating otherwise.
SenderClass Classify(const std::vector<FiniteDistribution>& sender);

struct SignalingCheck {
  double receiver_gap = 0.0;   // worst receiver regret at any message
  double sender_gap = 0.0;     // worst sender regret over types
  double belief_error = 0.0;   // on-path distance from the Bayes posterior
  bool on_path_flags_ok = true;
  bool masks_ok = true;

  double gap() const { return std::max(receiver_gap, sender_gap); }
  bool Passes(double tol = 1e-8) const {
    return gap() <= tol && belief_error <= 1e-9 && on_path_flags_ok && masks_ok;
  }
};

// Recomputes every optimality and consistency condition from scratch.
SignalingCheck VerifySignaling(const SignalingGame& game,
                               const SignalingPbne& eq);

}  // namespace secgame

#endif  // SECGAME_SIGNALING_H_
