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

#include "secgame/distribution.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "secgame/errors.h"

namespace secgame {

std::optional<std::string> CheckDistribution(std::span<const double> weights,
                                             double tol) {
  if (weights.empty()) return "empty probability vector";
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      std::ostringstream os;
      os << "weight " << i << " is not finite";
      return os.str();
    }
    if (weights[i] < -tol) {
      std::ostringstream os;
      os << "weight " << i << " is negative (" << weights[i] << ")";
      return os.str();
    }
    total += weights[i];
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total << ", not 1";
    return os.str();
  }
  return std::nullopt;
}

FiniteDistribution::FiniteDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (auto problem = CheckDistribution(weights_)) {
    throw MalformedInputError("invalid distribution: " + *problem);
  }
  for (double& w : weights_) w = std::max(w, 0.0);
}

FiniteDistribution FiniteDistribution::Uniform(int n) {
  if (n <= 0) throw MalformedInputError("uniform distribution over empty set");
  return FiniteDistribution(std::vector<double>(n, 1.0 / n));
}

FiniteDistribution FiniteDistribution::PointMass(int n, int index) {
  if (index < 0 || index >= n) {
    throw MalformedInputError("point mass index out of range");
  }
  std::vector<double> w(n, 0.0);
  w[index] = 1.0;
  return FiniteDistribution(std::move(w));
}

FiniteDistribution FiniteDistribution::UniformOver(
    const std::vector<bool>& support) {
  std::vector<double> w(support.size(), 0.0);
  for (std::size_t i = 0; i < support.size(); ++i) w[i] = support[i] ? 1.0 : 0.0;
  return Normalized(std::move(w));
}

FiniteDistribution FiniteDistribution::Normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double& w : weights) {
    if (w < 0.0) w = 0.0;
    total += w;
  }
  if (!(total > 0.0)) {
    throw MalformedInputError("cannot normalize weights with zero total mass");
  }
  for (double& w : weights) w /= total;
  return FiniteDistribution(std::move(weights));
}

std::vector<int> FiniteDistribution::Support(double tol) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (weights_[i] > tol) out.push_back(i);
  }
  return out;
}

double FiniteDistribution::MaxAbsDiff(const FiniteDistribution& other) const {
  if (other.size() != size()) {
    throw MalformedInputError("distribution size mismatch");
  }
  double d = 0.0;
  for (int i = 0; i < size(); ++i) {
    d = std::max(d, std::abs(weights_[i] - other.weights_[i]));
  }
  return d;
}

}  // namespace secgame
