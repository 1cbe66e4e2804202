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

#ifndef SECGAME_LP_H_
#define SECGAME_LP_H_

#include <limits>
#include <vector>

namespace secgame {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// maximize c.z  subject to  A z <= b,  Aeq z = beq,  lower <= z <= upper.
//
// Empty `lower`/`upper` default every variable to [0, +inf). Bounds may be
// infinite in either direction.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;
  std::vector<double> lower;
  std::vector<double> upper;

  explicit LinearProgram(int num_vars = 0)
      : objective(num_vars, 0.0),
        lower(num_vars, 0.0),
        upper(num_vars, kInfinity) {}

  int num_vars() const { return static_cast<int>(objective.size()); }
  void AddLessEqual(std::vector<double> row, double rhs) {
    a_ub.push_back(std::move(row));
    b_ub.push_back(rhs);
  }
  void AddEqual(std::vector<double> row, double rhs) {
    a_eq.push_back(std::move(row));
    b_eq.push_back(rhs);
  }
  void SetFree(int j) {
    lower[j] = -kInfinity;
    upper[j] = kInfinity;
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> z;
  double value = 0.0;
  int pivots = 0;
};

// Two-phase dense tableau simplex with Bland's rule. Infeasibility and
// unboundedness are statuses; only malformed dimensions throw.
LpSolution SolveLp(const LinearProgram& lp);

// Largest violation of any constraint or bound at `z`.
double MaxViolation(const LinearProgram& lp, const std::vector<double>& z);

}  // namespace secgame

#endif  // SECGAME_LP_H_
