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


#ifndef SECGAME_RANDOM_H_
#define SECGAME_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace secgame {

// One step of the splitmix64 sequence; used to derive independent seeds.
inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for stream `index` of a run seeded with `seed`.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(SplitMix64(seed) ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

// std::mt19937_64 is specified bit-exactly by the standard, but the standard
// distributions are not, so the draws below are spelled out by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1].
  double UniformPositive() { return 1.0 - Uniform(); }

  double Gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(UniformPositive()));
    const double phi = 2.0 * M_PI * Uniform();
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  // Index drawn from non-negative `weights` summing to about one.
  int Categorical(const std::vector<double>& weights) {
    const double u = Uniform();
    double acc = 0.0;
    int last = -1;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      last = i;
      if (u < acc) return i;
    }
    return last;
  }

  // Uniform point on the simplex restricted to `support`.
  std::vector<double> Simplex(const std::vector<bool>& support) {
    std::vector<double> w(support.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (!support[i]) continue;
      w[i] = -std::log(UniformPositive());
      total += w[i];
    }
    for (double& x : w) x /= total;
    return w;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace secgame

#endif  // SECGAME_RANDOM_H_
