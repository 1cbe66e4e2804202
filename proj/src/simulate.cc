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


#include "secgame/simulate.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "secgame/errors.h"
#include "secgame/parallel.h"
#include "secgame/random.h"

namespace secgame {

Noise Noise::Parse(const std::string& text) {
  Noise n;
  if (text == "none") return n;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (colon == std::string::npos || (kind != "gaussian" && kind != "uniform")) {
    throw ParameterError("noise must be none, gaussian:<sigma> or uniform:<a>");
  }
  const std::string value = text.substr(colon + 1);
  char* end = nullptr;
  n.scale = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0' || !std::isfinite(n.scale) ||
      n.scale < 0.0) {
    throw ParameterError("noise scale must be a non-negative number");
  }
  n.kind = kind == "gaussian" ? Kind::kGaussian : Kind::kUniform;
  return n;
}

std::string Noise::ToString() const {
  if (kind == Kind::kNone) return "none";
  std::ostringstream out;
  out << (kind == Kind::kGaussian ? "gaussian:" : "uniform:") << scale;
  return out.str();
}

namespace {

constexpr std::uint64_t kNoiseStream = 0x6e6f697365ULL;

double Draw(const Noise& noise, Rng& rng) {
  switch (noise.kind) {
    case Noise::Kind::kNone:
      return 0.0;
    case Noise::Kind::kGaussian:
      return noise.scale * rng.Gaussian();
    case Noise::Kind::kUniform:
      return noise.scale * (2.0 * rng.Uniform() - 1.0);
  }
  return 0.0;
}

}  // namespace

Trajectory SamplePlayout(const MultiStageGame& game,
                         const StrategyProfile& profile, std::uint64_t seed,
                         const Noise& noise) {
  Rng rng(seed);
  Rng noise_rng(SplitMix64(seed ^ kNoiseStream));
  Trajectory tr;
  tr.type1 = rng.Categorical(game.prior_about1);
  tr.type2 = rng.Categorical(game.prior_about2);
  int x = game.initial_state;
  for (int k = 0; k <= game.horizon(); ++k) {
    const StageGame& s = game.stages[k];
    StageRecord r;
    r.state = x;
    r.action1 = rng.Categorical(profile.defender[k][x][tr.type1].weights());
    r.action2 = rng.Categorical(profile.user[k][x][tr.type2].weights());
    r.payoff1 = s.Payoff(Player::kDefender, x, r.action1, r.action2, tr.type1,
                         tr.type2);
    r.payoff2 =
        s.Payoff(Player::kUser, x, r.action1, r.action2, tr.type1, tr.type2);
    r.noisy1 = r.payoff1 + Draw(noise, noise_rng);
    r.noisy2 = r.payoff2 + Draw(noise, noise_rng);
    tr.stages.push_back(r);
    tr.terminal_state = x;
    if (k < game.horizon()) x = s.NextState(x, r.action1, r.action2);
  }
  return tr;
}

MonteCarloResult MonteCarloValue(const MultiStageGame& game,
                                 const StrategyProfile& profile, long long n,
                                 std::uint64_t seed, const Noise& noise,
                                 int threads) {
  if (n < 1) throw ParameterError("sample count must be at least 1");
  {
    const auto problems = ValidateProfile(game, profile);
    if (!problems.empty()) throw MalformedInputError(problems.front());
  }
  struct Totals {
    int t1, t2;
    double noisy1, noisy2, clean1, clean2;
  };
  std::vector<Totals> totals(n);
  constexpr int kChunk = 4096;
  const int chunks = static_cast<int>((n + kChunk - 1) / kChunk);
  ParallelFor(chunks, threads, [&](int c) {
    const long long end = std::min<long long>(n, (c + 1LL) * kChunk);
    for (long long i = c * static_cast<long long>(kChunk); i < end; ++i) {
      const Trajectory tr = SamplePlayout(
          game, profile, DeriveSeed(seed, static_cast<std::uint64_t>(i)), noise);
      Totals t{tr.type1, tr.type2, 0, 0, 0, 0};
      for (const auto& r : tr.stages) {
        t.noisy1 += r.noisy1;
        t.noisy2 += r.noisy2;
        t.clean1 += r.payoff1;
        t.clean2 += r.payoff2;
      }
      totals[i] = t;
    }
  });

  MonteCarloResult out;
  out.samples = n;
  out.defender.resize(game.num_types(Player::kDefender));
  out.user.resize(game.num_types(Player::kUser));
  // Two passes in index order keep the sums independent of scheduling.
  struct Acc {
    double sum = 0, clean = 0;
  };
  std::vector<Acc> acc1(out.defender.size()), acc2(out.user.size());
  for (const auto& t : totals) {
    ++out.defender[t.t1].count;
    acc1[t.t1].sum += t.noisy1;
    acc1[t.t1].clean += t.clean1;
    ++out.user[t.t2].count;
    acc2[t.t2].sum += t.noisy2;
    acc2[t.t2].clean += t.clean2;
  }
  auto finish_means = [](std::vector<MonteCarloCell>& cells,
                         const std::vector<Acc>& acc) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].count == 0) continue;
      cells[i].mean = acc[i].sum / cells[i].count;
      cells[i].clean_mean = acc[i].clean / cells[i].count;
    }
  };
  finish_means(out.defender, acc1);
  finish_means(out.user, acc2);
  std::vector<Acc> var1(out.defender.size()), var2(out.user.size());
  for (const auto& t : totals) {
    const auto& c1 = out.defender[t.t1];
    var1[t.t1].sum += (t.noisy1 - c1.mean) * (t.noisy1 - c1.mean);
    var1[t.t1].clean += (t.clean1 - c1.clean_mean) * (t.clean1 - c1.clean_mean);
    const auto& c2 = out.user[t.t2];
    var2[t.t2].sum += (t.noisy2 - c2.mean) * (t.noisy2 - c2.mean);
    var2[t.t2].clean += (t.clean2 - c2.clean_mean) * (t.clean2 - c2.clean_mean);
  }
  auto finish_errors = [](std::vector<MonteCarloCell>& cells,
                          const std::vector<Acc>& var) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const long long m = cells[i].count;
      if (m < 2) continue;
      cells[i].std_error = std::sqrt(var[i].sum / (m - 1) / m);
      cells[i].clean_std_error = std::sqrt(var[i].clean / (m - 1) / m);
    }
  };
  finish_errors(out.defender, var1);
  finish_errors(out.user, var2);
  return out;
}

}  // namespace secgame
