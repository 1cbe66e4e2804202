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


// Monte Carlo play-outs of a multistage game under a Markov profile, with
// optional zero-mean additive noise on the recorded stage payoffs.

#ifndef SECGAME_SIMULATE_H_
#define SECGAME_SIMULATE_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "secgame/game.h"

namespace secgame {

struct Noise {
  enum class Kind { kNone, kGaussian, kUniform };
  Kind kind = Kind::kNone;
  double scale = 0.0;  // standard deviation, or half-width for uniform

  // "none", "gaussian:<sigma>" or "uniform:<a>". Throws ParameterError.
  static Noise Parse(const std::string& text);
  std::string ToString() const;
};

struct StageRecord {
  int state = 0;
  int action1 = 0;
  int action2 = 0;
  double payoff1 = 0.0;  // noiseless
  double payoff2 = 0.0;
  double noisy1 = 0.0;
  double noisy2 = 0.0;
};

struct Trajectory {
  int type1 = 0;
  int type2 = 0;
  std::vector<StageRecord> stages;
  int terminal_state = 0;  // state of the last stage played
};

// Types come from the priors and actions from the profile. Actions and
// noise use separate streams, so the noise setting never changes the path.
Trajectory SamplePlayout(const MultiStageGame& game,
                         const StrategyProfile& profile, std::uint64_t seed,
                         const Noise& noise = {});

struct MonteCarloCell {
  long long count = 0;
  double mean = 0.0;  // cumulative noisy payoff
  double std_error = 0.0;
  double clean_mean = 0.0;  // cumulative noiseless payoff
  double clean_std_error = 0.0;
};

struct MonteCarloResult {
  long long samples = 0;
  // [own type], conditioned on the sampled own type.
  std::vector<MonteCarloCell> defender;
  std::vector<MonteCarloCell> user;
  const std::vector<MonteCarloCell>& of(Player p) const {
    return p == Player::kDefender ? defender : user;
  }
};

// Trajectory i is seeded with DeriveSeed(seed, i), so the result does not
// depend on `threads`.
MonteCarloResult MonteCarloValue(const MultiStageGame& game,
                                 const StrategyProfile& profile, long long n,
                                 std::uint64_t seed, const Noise& noise = {},
                                 int threads = 0);

}  // namespace secgame

#endif  // SECGAME_SIMULATE_H_
