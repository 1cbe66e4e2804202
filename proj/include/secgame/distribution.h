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

#ifndef SECGAME_DISTRIBUTION_H_
#define SECGAME_DISTRIBUTION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace secgame {

// Absolute tolerance on the total mass of a probability vector.
inline constexpr double kDistributionTolerance = 1e-9;

// Returns a description of the first problem with `weights` as a probability
// vector, or nullopt when it is valid.
std::optional<std::string> CheckDistribution(std::span<const double> weights,
                                             double tol = kDistributionTolerance);

// A probability vector over an indexed finite set (actions, types).
//
// Construction validates non-negativity and normalization; tiny negative
// round-off (above -tol) is clipped to zero. A default-constructed
// distribution is empty and only serves as a placeholder in containers.
class FiniteDistribution {
 public:
  FiniteDistribution() = default;
  explicit FiniteDistribution(std::vector<double> weights);

  static FiniteDistribution Uniform(int n);
  static FiniteDistribution PointMass(int n, int index);
  // Uniform over the indices where `support` is true.
  static FiniteDistribution UniformOver(const std::vector<bool>& support);
  // Normalizes arbitrary non-negative weights. Throws if they sum to zero.
  static FiniteDistribution Normalized(std::vector<double> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  bool empty() const { return weights_.empty(); }
  double operator[](int i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }

  // Indices with probability above `tol`.
  std::vector<int> Support(double tol = 1e-12) const;
  // Sup-norm distance; sizes must agree.
  double MaxAbsDiff(const FiniteDistribution& other) const;

 private:
  std::vector<double> weights_;
};

}  // namespace secgame

#endif  // SECGAME_DISTRIBUTION_H_
