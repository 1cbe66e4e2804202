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

#include "secgame/lp.h"

#include <algorithm>
#include <cmath>

#include "secgame/errors.h"

namespace secgame {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-10;
constexpr double kPhaseOneEps = 1e-9;
constexpr int kMaxPivots = 200000;

// Original variable z_j = offset + sum(coef * y_col) over its columns.
struct VarMap {
  double offset = 0.0;
  int pos_col = -1;
  double pos_coef = 1.0;
  int neg_col = -1;  // only for free variables
};

struct Row {
  std::vector<double> coef;  // over structural columns y
  double rhs = 0.0;
  bool equality = false;
};

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, -1) {}

  double& at(int r, int c) { return data_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return data_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  // Row `rows_` holds reduced costs; its rhs holds -objective.
  double& cost(int c) { return at(rows_, c); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int r, int c) {
    const double p = at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    for (int i = 0; i < rows_; ++i) {
      if (rhs(i) < 0.0 && rhs(i) > -1e-12) rhs(i) = 0.0;
    }
    basis_[r] = c;
  }

  // Loads reduced costs for maximizing `c` over the current basis.
  void SetObjective(const std::vector<double>& c) {
    for (int j = 0; j <= cols_; ++j) cost(j) = 0.0;
    for (int j = 0; j < cols_; ++j) cost(j) = c[j];
    for (int i = 0; i < rows_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) cost(j) -= cb * at(i, j);
    }
  }

  // Bland's rule: entering column is the lowest index with positive reduced
  // cost; leaving row minimizes the ratio with ties going to the lowest basic
  // variable index. Returns false when unbounded.
  bool Optimize(const std::vector<bool>& allowed, int* pivots) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && cost(j) > kCostEps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotEps) continue;
        const double ratio = rhs(i) / a;
        if (leave < 0 || ratio < best - 1e-12) {
          leave = i;
          best = ratio;
        } else if (ratio <= best + 1e-12 && basis_[i] < basis_[leave]) {
          leave = i;
          best = std::min(best, ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      if (++*pivots > kMaxPivots) {
        throw SecgameError("simplex exceeded pivot limit");
      }
    }
  }

  void RemoveRow(int r) {
    // Swap the redundant row to the end and shrink. Reduced-cost row follows.
    const int last = rows_ - 1;
    if (r != last) {
      for (int j = 0; j <= cols_; ++j) std::swap(at(r, j), at(last, j));
      std::swap(basis_[r], basis_[last]);
    }
    for (int j = 0; j <= cols_; ++j) at(last, j) = at(rows_, j);
    --rows_;
    basis_.pop_back();
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
  std::vector<int> basis_;
};

void CheckDimensions(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (lp.a_ub.size() != lp.b_ub.size() || lp.a_eq.size() != lp.b_eq.size()) {
    throw MalformedInputError("LP row count does not match rhs length");
  }
  for (const auto& r : lp.a_ub) {
    if (r.size() != n) throw MalformedInputError("LP inequality row width");
  }
  for (const auto& r : lp.a_eq) {
    if (r.size() != n) throw MalformedInputError("LP equality row width");
  }
  if ((!lp.lower.empty() && lp.lower.size() != n) ||
      (!lp.upper.empty() && lp.upper.size() != n)) {
    throw MalformedInputError("LP bound vector length");
  }
}

}  // namespace

double MaxViolation(const LinearProgram& lp, const std::vector<double>& z) {
  double v = 0.0;
  const int n = lp.num_vars();
  for (std::size_t i = 0; i < lp.a_ub.size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += lp.a_ub[i][j] * z[j];
    v = std::max(v, s - lp.b_ub[i]);
  }
  for (std::size_t i = 0; i < lp.a_eq.size(); ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += lp.a_eq[i][j] * z[j];
    v = std::max(v, std::abs(s - lp.b_eq[i]));
  }
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[j];
    const double hi = lp.upper.empty() ? kInfinity : lp.upper[j];
    v = std::max(v, lo - z[j]);
    v = std::max(v, z[j] - hi);
  }
  return v;
}

LpSolution SolveLp(const LinearProgram& lp) {
  CheckDimensions(lp);
  const int n = lp.num_vars();
  LpSolution result;

  // Substitute bounded variables by non-negative columns.
  std::vector<VarMap> vars(n);
  std::vector<Row> rows;
  int ncols = 0;
  std::vector<std::pair<int, double>> upper_rows;  // (col, bound)
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[j];
    const double hi = lp.upper.empty() ? kInfinity : lp.upper[j];
    if (lo > hi) return result;  // infeasible bounds
    if (std::isfinite(lo)) {
      vars[j] = {lo, ncols++, 1.0, -1};
      if (std::isfinite(hi)) upper_rows.emplace_back(vars[j].pos_col, hi - lo);
    } else if (std::isfinite(hi)) {
      vars[j] = {hi, ncols++, -1.0, -1};
    } else {
      vars[j].offset = 0.0;
      vars[j].pos_col = ncols++;
      vars[j].neg_col = ncols++;
    }
  }
  auto translate = [&](const std::vector<double>& a, double b, bool eq) {
    Row r;
    r.coef.assign(ncols, 0.0);
    r.rhs = b;
    r.equality = eq;
    for (int j = 0; j < n; ++j) {
      if (a[j] == 0.0) continue;
      r.rhs -= a[j] * vars[j].offset;
      r.coef[vars[j].pos_col] += a[j] * vars[j].pos_coef;
      if (vars[j].neg_col >= 0) r.coef[vars[j].neg_col] -= a[j];
    }
    return r;
  };
  for (std::size_t i = 0; i < lp.a_ub.size(); ++i) {
    rows.push_back(translate(lp.a_ub[i], lp.b_ub[i], false));
  }
  for (std::size_t i = 0; i < lp.a_eq.size(); ++i) {
    rows.push_back(translate(lp.a_eq[i], lp.b_eq[i], true));
  }
  for (auto [col, bound] : upper_rows) {
    Row r;
    r.coef.assign(ncols, 0.0);
    r.coef[col] = 1.0;
    r.rhs = bound;
    rows.push_back(std::move(r));
  }
  std::vector<double> cost(ncols, 0.0);
  for (int j = 0; j < n; ++j) {
    cost[vars[j].pos_col] += lp.objective[j] * vars[j].pos_coef;
    if (vars[j].neg_col >= 0) cost[vars[j].neg_col] -= lp.objective[j];
  }

  // Columns: structural | slack (one per inequality) | artificial.
  const int m = static_cast<int>(rows.size());
  int num_slack = 0;
  for (const auto& r : rows) num_slack += r.equality ? 0 : 1;
  std::vector<int> needs_artificial(m, 0);
  int num_art = 0;
  for (int i = 0; i < m; ++i) {
    if (rows[i].equality || rows[i].rhs < 0.0) {
      needs_artificial[i] = 1;
      ++num_art;
    }
  }
  const int slack0 = ncols;
  const int art0 = ncols + num_slack;
  const int total = art0 + num_art;
  Tableau tab(m, total);
  int slack = slack0;
  int art = art0;
  for (int i = 0; i < m; ++i) {
    const double sign = rows[i].rhs < 0.0 ? -1.0 : 1.0;
    for (int j = 0; j < ncols; ++j) tab.at(i, j) = sign * rows[i].coef[j];
    tab.rhs(i) = sign * rows[i].rhs;
    int basic = -1;
    if (!rows[i].equality) {
      tab.at(i, slack) = sign;
      if (sign > 0) basic = slack;
      ++slack;
    }
    if (needs_artificial[i]) {
      tab.at(i, art) = 1.0;
      basic = art++;
    }
    tab.basis()[i] = basic;
  }

  std::vector<bool> allowed(total, true);
  if (num_art > 0) {
    std::vector<double> phase1(total, 0.0);
    for (int j = art0; j < total; ++j) phase1[j] = -1.0;
    tab.SetObjective(phase1);
    tab.Optimize(allowed, &result.pivots);
    // cost(rhs) holds -objective.
    const double phase1_value = -tab.cost(total);
    if (phase1_value < -kPhaseOneEps) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive remaining artificials out of the basis.
    for (int i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art0) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < art0; ++j) {
        if (std::abs(tab.at(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.Pivot(i, col);
        ++i;
      } else {
        tab.RemoveRow(i);
      }
    }
    for (int j = art0; j < total; ++j) allowed[j] = false;
  }

  std::vector<double> phase2(total, 0.0);
  std::copy(cost.begin(), cost.end(), phase2.begin());
  tab.SetObjective(phase2);
  if (!tab.Optimize(allowed, &result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<double> y(total, 0.0);
  for (int i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  result.z.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double v = vars[j].offset + vars[j].pos_coef * y[vars[j].pos_col];
    if (vars[j].neg_col >= 0) v -= y[vars[j].neg_col];
    result.z[j] = v;
  }
  result.value = 0.0;
  for (int j = 0; j < n; ++j) result.value += lp.objective[j] * result.z[j];
  result.status = LpStatus::kOptimal;
  return result;
}

}  // namespace secgame
