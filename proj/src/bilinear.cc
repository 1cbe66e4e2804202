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


#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secgame/errors.h"
#include "secgame/lp.h"
#include "secgame/multistage.h"
#include "secgame/parallel.h"
#include "secgame/random.h"

namespace secgame {
namespace {

using Mixed = std::vector<std::vector<double>>;  // [type][action]

constexpr double kZeroWeight = 1e-15;
constexpr double kSolvedObjective = -1e-10;
constexpr double kStall = 1e-12;

Mixed ToRaw(const std::vector<FiniteDistribution>& sigma) {
  Mixed raw;
  raw.reserve(sigma.size());
  for (const auto& d : sigma) raw.push_back(d.weights());
  return raw;
}

std::vector<FiniteDistribution> FromRaw(const Mixed& raw) {
  std::vector<FiniteDistribution> out;
  out.reserve(raw.size());
  for (const auto& w : raw) out.push_back(FiniteDistribution::Normalized(w));
  return out;
}

}  // namespace

BilinearProblem::BilinearProblem(const StageGame& stage, int x,
                                 StageBeliefs beliefs,
                                 const ContinuationValues& next1,
                                 const ContinuationValues& next2)
    : m1_(stage.num_actions1()),
      m2_(stage.num_actions2()),
      n1_(stage.num_types1),
      n2_(stage.num_types2),
      beliefs_(std::move(beliefs)) {
  if (x < 0 || x >= stage.num_states()) {
    throw ParameterError("state " + std::to_string(x) + " out of range");
  }
  if (static_cast<int>(beliefs_.defender.size()) != n1_ ||
      static_cast<int>(beliefs_.user.size()) != n2_) {
    throw MalformedInputError("stage beliefs do not match the type counts");
  }
  for (const auto& b : beliefs_.defender) {
    if (b.size() != n2_) throw MalformedInputError("defender belief size");
  }
  for (const auto& b : beliefs_.user) {
    if (b.size() != n1_) throw MalformedInputError("user belief size");
  }
  const bool continues = !next1.empty() || !next2.empty();
  if (continues && !stage.has_transition()) {
    throw MalformedInputError("continuation values without a transition");
  }
  auto check_next = [&](const ContinuationValues& next, int types) {
    if (!continues) return;
    for (int a1 = 0; a1 < m1_; ++a1) {
      for (int a2 = 0; a2 < m2_; ++a2) {
        const int y = stage.NextState(x, a1, a2);
        if (y < 0 || y >= static_cast<int>(next.size()) ||
            static_cast<int>(next[y].size()) != types) {
          throw MalformedInputError("continuation values do not cover the "
                                    "successor states");
        }
      }
    }
  };
  check_next(next1, n1_);
  check_next(next2, n2_);

  const std::size_t size = static_cast<std::size_t>(m1_) * m2_ * n1_ * n2_;
  q1_.resize(size);
  q2_.resize(size);
  for (int a1 = 0; a1 < m1_; ++a1) {
    for (int a2 = 0; a2 < m2_; ++a2) {
      const int y = continues ? stage.NextState(x, a1, a2) : -1;
      for (int t1 = 0; t1 < n1_; ++t1) {
        for (int t2 = 0; t2 < n2_; ++t2) {
          const std::size_t i = Index(a1, a2, t1, t2);
          q1_[i] = stage.Payoff(Player::kDefender, x, a1, a2, t1, t2) +
                   (continues ? next1[y][t1] : 0.0);
          q2_[i] = stage.Payoff(Player::kUser, x, a1, a2, t1, t2) +
                   (continues ? next2[y][t2] : 0.0);
        }
      }
    }
  }
  for (int t1 = 0; t1 < n1_; ++t1) {
    bool any = false;
    for (int a = 0; a < m1_; ++a) {
      f1_.push_back(stage.Feasible(Player::kDefender, x, t1, a));
      any = any || f1_.back();
    }
    if (!any) throw MalformedInputError("defender type without actions");
  }
  for (int t2 = 0; t2 < n2_; ++t2) {
    bool any = false;
    for (int a = 0; a < m2_; ++a) {
      f2_.push_back(stage.Feasible(Player::kUser, x, t2, a));
      any = any || f2_.back();
    }
    if (!any) throw MalformedInputError("user type without actions");
  }
  lambda1_.assign(n1_, 0.0);
  for (int t2 = 0; t2 < n2_; ++t2) {
    for (int t1 = 0; t1 < n1_; ++t1) lambda1_[t1] += beliefs_.user[t2][t1] / n2_;
  }
  lambda2_.assign(n2_, 0.0);
  for (int t1 = 0; t1 < n1_; ++t1) {
    for (int t2 = 0; t2 < n2_; ++t2) {
      lambda2_[t2] += beliefs_.defender[t1][t2] / n1_;
    }
  }
}

bool BilinearProblem::feasible(Player p, int type, int action) const {
  return p == Player::kDefender ? f1_[type * m1_ + action] != 0
                                : f2_[type * m2_ + action] != 0;
}

double BilinearProblem::Q(Player p, int a1, int a2, int t1, int t2) const {
  return p == Player::kDefender ? q1_[Index(a1, a2, t1, t2)]
                                : q2_[Index(a1, a2, t1, t2)];
}

namespace {

// Role-based views so that one routine serves both players.
struct Roles {
  const BilinearProblem& g;
  Player p;
  Player o;
  double q(Player owner, int a_owner, int a_other, int t_owner,
           int t_other) const {
    return owner == Player::kDefender
               ? g.Q(owner, a_owner, a_other, t_owner, t_other)
               : g.Q(owner, a_other, a_owner, t_other, t_owner);
  }
  double belief(Player holder, int t_holder, int t_other) const {
    return g.beliefs().of(holder)[t_holder][t_other];
  }
};

// U_p(a | t) against the opponent's mix.
std::vector<double> RawActionValues(const BilinearProblem& g, Player p, int t,
                                    const Mixed& opp) {
  const Roles r{g, p, Opponent(p)};
  std::vector<double> v(g.num_actions(p), 0.0);
  for (int a = 0; a < g.num_actions(p); ++a) {
    double total = 0.0;
    for (int to = 0; to < g.num_types(r.o); ++to) {
      const double b = r.belief(p, t, to);
      if (b == 0.0) continue;
      double inner = 0.0;
      for (int ao = 0; ao < g.num_actions(r.o); ++ao) {
        const double s = opp[to][ao];
        if (s != 0.0) inner += s * r.q(p, a, ao, t, to);
      }
      total += b * inner;
    }
    v[a] = total;
  }
  return v;
}

double BestValue(const BilinearProblem& g, Player p, int t,
                 const std::vector<double>& values) {
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < g.num_actions(p); ++a) {
    if (g.feasible(p, t, a)) best = std::max(best, values[a]);
  }
  return best;
}

double Dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

const Mixed& Own(Player p, const Mixed& s1, const Mixed& s2) {
  return p == Player::kDefender ? s1 : s2;
}
const Mixed& Other(Player p, const Mixed& s1, const Mixed& s2) {
  return p == Player::kDefender ? s2 : s1;
}

// Objective with the slack variables set tight.
double TightObjective(const BilinearProblem& g, const Mixed& s1,
                      const Mixed& s2) {
  double obj = 0.0;
  for (Player p : {Player::kDefender, Player::kUser}) {
    for (int t = 0; t < g.num_types(p); ++t) {
      const double lambda = g.weights(p)[t];
      if (lambda == 0.0) continue;
      const auto v = RawActionValues(g, p, t, Other(p, s1, s2));
      obj += lambda * (Dot(Own(p, s1, s2)[t], v) - BestValue(g, p, t, v));
    }
  }
  return obj;
}

// Maximizes the objective over the mixed strategy of `p` with the opponent
// held fixed. The opponent's slack variables stay free in the LP.
Mixed AscentStep(const BilinearProblem& g, Player p, const Mixed& opp,
                 const Mixed& current) {
  const Roles r{g, p, Opponent(p)};
  const int np = g.num_types(p), mp = g.num_actions(p);
  const int no = g.num_types(r.o), mo = g.num_actions(r.o);
  std::vector<int> var(np * mp, -1);
  int n = 0;
  for (int t = 0; t < np; ++t) {
    for (int a = 0; a < mp; ++a) {
      if (g.feasible(p, t, a)) var[t * mp + a] = n++;
    }
  }
  const int first_slack = n;
  LinearProgram lp(n + no);
  for (int to = 0; to < no; ++to) {
    lp.SetFree(first_slack + to);
    lp.objective[first_slack + to] = g.weights(r.o)[to];
  }
  for (int t = 0; t < np; ++t) {
    const auto own = RawActionValues(g, p, t, opp);
    for (int a = 0; a < mp; ++a) {
      const int j = var[t * mp + a];
      if (j < 0) continue;
      double c = g.weights(p)[t] * own[a];
      for (int to = 0; to < no; ++to) {
        const double coeff = g.weights(r.o)[to] * r.belief(r.o, to, t);
        if (coeff == 0.0) continue;
        double inner = 0.0;
        for (int ao = 0; ao < mo; ++ao) {
          inner += opp[to][ao] * r.q(r.o, ao, a, to, t);
        }
        c += coeff * inner;
      }
      lp.objective[j] = c;
    }
  }
  for (int to = 0; to < no; ++to) {
    for (int ao = 0; ao < mo; ++ao) {
      if (!g.feasible(r.o, to, ao)) continue;
      std::vector<double> row(lp.num_vars(), 0.0);
      for (int t = 0; t < np; ++t) {
        const double b = r.belief(r.o, to, t);
        if (b == 0.0) continue;
        for (int a = 0; a < mp; ++a) {
          const int j = var[t * mp + a];
          if (j >= 0) row[j] += b * r.q(r.o, ao, a, to, t);
        }
      }
      row[first_slack + to] = 1.0;
      lp.AddLessEqual(std::move(row), 0.0);
    }
  }
  for (int t = 0; t < np; ++t) {
    std::vector<double> row(lp.num_vars(), 0.0);
    for (int a = 0; a < mp; ++a) {
      if (var[t * mp + a] >= 0) row[var[t * mp + a]] = 1.0;
    }
    lp.AddEqual(std::move(row), 1.0);
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal) return current;
  Mixed next(np, std::vector<double>(mp, 0.0));
  for (int t = 0; t < np; ++t) {
    double total = 0.0;
    for (int a = 0; a < mp; ++a) {
      const int j = var[t * mp + a];
      if (j < 0) continue;
      next[t][a] = std::max(0.0, sol.z[j]);
      total += next[t][a];
    }
    if (total <= 0.0) return current;
    for (double& v : next[t]) v /= total;
  }
  return next;
}

// Pure lowest-index best response for every type nobody places weight on.
void FixUnweightedTypes(const BilinearProblem& g, Mixed& s1, Mixed& s2) {
  for (Player p : {Player::kDefender, Player::kUser}) {
    Mixed& own = p == Player::kDefender ? s1 : s2;
    const Mixed& opp = p == Player::kDefender ? s2 : s1;
    for (int t = 0; t < g.num_types(p); ++t) {
      if (g.weights(p)[t] > kZeroWeight) continue;
      const auto v = RawActionValues(g, p, t, opp);
      const double best = BestValue(g, p, t, v);
      std::fill(own[t].begin(), own[t].end(), 0.0);
      for (int a = 0; a < g.num_actions(p); ++a) {
        if (g.feasible(p, t, a) && v[a] == best) {
          own[t][a] = 1.0;
          break;
        }
      }
    }
  }
}

Mixed RandomStart(const BilinearProblem& g, Player p, Rng& rng) {
  Mixed m;
  for (int t = 0; t < g.num_types(p); ++t) {
    std::vector<bool> support(g.num_actions(p));
    for (int a = 0; a < g.num_actions(p); ++a) support[a] = g.feasible(p, t, a);
    m.push_back(rng.Simplex(support));
  }
  return m;
}

bool Matches(const BilinearProblem& g, Player p,
             const std::vector<FiniteDistribution>& sigma) {
  if (static_cast<int>(sigma.size()) != g.num_types(p)) return false;
  for (int t = 0; t < g.num_types(p); ++t) {
    if (sigma[t].size() != g.num_actions(p)) return false;
    for (int a = 0; a < g.num_actions(p); ++a) {
      if (sigma[t][a] > 0.0 && !g.feasible(p, t, a)) return false;
    }
  }
  return true;
}

// Strategy of `o` with support inside `own_support` that makes every type of
// the other player indifferent on `their_support` and no better off elsewhere.
std::optional<Mixed> SupportLp(const BilinearProblem& g, Player o,
                               const std::vector<unsigned>& own_support,
                               const std::vector<unsigned>& their_support) {
  const Player p = Opponent(o);
  const Roles r{g, p, o};
  const int no = g.num_types(o), mo = g.num_actions(o);
  const int np = g.num_types(p), mp = g.num_actions(p);
  std::vector<int> var(no * mo, -1);
  int n = 0;
  for (int to = 0; to < no; ++to) {
    for (int ao = 0; ao < mo; ++ao) {
      if (own_support[to] >> ao & 1u) var[to * mo + ao] = n++;
    }
  }
  const int first_value = n;
  LinearProgram lp(n + np);
  for (int tp = 0; tp < np; ++tp) lp.SetFree(first_value + tp);
  for (int tp = 0; tp < np; ++tp) {
    for (int ap = 0; ap < mp; ++ap) {
      if (!g.feasible(p, tp, ap)) continue;
      std::vector<double> row(lp.num_vars(), 0.0);
      for (int to = 0; to < no; ++to) {
        const double b = r.belief(p, tp, to);
        if (b == 0.0) continue;
        for (int ao = 0; ao < mo; ++ao) {
          const int j = var[to * mo + ao];
          if (j >= 0) row[j] += b * r.q(p, ap, ao, tp, to);
        }
      }
      row[first_value + tp] = -1.0;
      if (their_support[tp] >> ap & 1u) {
        lp.AddEqual(std::move(row), 0.0);
      } else {
        lp.AddLessEqual(std::move(row), 0.0);
      }
    }
  }
  for (int to = 0; to < no; ++to) {
    std::vector<double> row(lp.num_vars(), 0.0);
    for (int ao = 0; ao < mo; ++ao) {
      if (var[to * mo + ao] >= 0) row[var[to * mo + ao]] = 1.0;
    }
    lp.AddEqual(std::move(row), 1.0);
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  Mixed out(no, std::vector<double>(mo, 0.0));
  for (int to = 0; to < no; ++to) {
    double total = 0.0;
    for (int ao = 0; ao < mo; ++ao) {
      const int j = var[to * mo + ao];
      if (j < 0) continue;
      out[to][ao] = std::max(0.0, sol.z[j]);
      total += out[to][ao];
    }
    if (total <= 0.0) return std::nullopt;
    for (double& v : out[to]) v /= total;
  }
  return out;
}

// Every assignment of a non-empty feasible support to each type of `p`.
std::vector<std::vector<unsigned>> SupportAssignments(const BilinearProblem& g,
                                                      Player p) {
  std::vector<std::vector<unsigned>> out{{}};
  for (int t = 0; t < g.num_types(p); ++t) {
    unsigned feasible = 0;
    for (int a = 0; a < g.num_actions(p); ++a) {
      if (g.feasible(p, t, a)) feasible |= 1u << a;
    }
    std::vector<std::vector<unsigned>> next;
    for (const auto& prefix : out) {
      for (unsigned s = 1; s < (1u << g.num_actions(p)); ++s) {
        if ((s & ~feasible) != 0) continue;
        next.push_back(prefix);
        next.back().push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

long long CountAssignments(const BilinearProblem& g, Player p) {
  long long count = 1;
  for (int t = 0; t < g.num_types(p); ++t) {
    int feasible = 0;
    for (int a = 0; a < g.num_actions(p); ++a) feasible += g.feasible(p, t, a);
    count *= (1LL << feasible) - 1;
    if (count > (1LL << 40)) return count;
  }
  return count;
}

double MaxGap(const BilinearProblem& g, const Mixed& s1, const Mixed& s2) {
  const auto d1 = FromRaw(s1), d2 = FromRaw(s2);
  double gap = 0.0;
  for (double v : g.Gaps(Player::kDefender, d1, d2)) gap = std::max(gap, v);
  for (double v : g.Gaps(Player::kUser, d1, d2)) gap = std::max(gap, v);
  return gap;
}

}  // namespace

std::vector<double> BilinearProblem::ActionValues(
    Player p, int type, const std::vector<FiniteDistribution>& sigma1,
    const std::vector<FiniteDistribution>& sigma2) const {
  return RawActionValues(*this, p, type,
                         ToRaw(p == Player::kDefender ? sigma2 : sigma1));
}

std::vector<double> BilinearProblem::Gaps(
    Player p, const std::vector<FiniteDistribution>& sigma1,
    const std::vector<FiniteDistribution>& sigma2) const {
  const auto& own = p == Player::kDefender ? sigma1 : sigma2;
  std::vector<double> gaps(num_types(p));
  for (int t = 0; t < num_types(p); ++t) {
    const auto v = ActionValues(p, t, sigma1, sigma2);
    gaps[t] = std::max(0.0, BestValue(*this, p, t, v) - Dot(own[t].weights(), v));
  }
  return gaps;
}

std::vector<double> BilinearProblem::TightSlack(
    Player p, const std::vector<FiniteDistribution>& sigma1,
    const std::vector<FiniteDistribution>& sigma2) const {
  std::vector<double> slack(num_types(p));
  for (int t = 0; t < num_types(p); ++t) {
    slack[t] = -BestValue(*this, p, t, ActionValues(p, t, sigma1, sigma2));
  }
  return slack;
}

double BilinearProblem::Objective(const std::vector<FiniteDistribution>& sigma1,
                                  const std::vector<FiniteDistribution>& sigma2,
                                  const std::vector<double>& s,
                                  const std::vector<double>& w) const {
  double obj = 0.0;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& own = p == Player::kDefender ? sigma1 : sigma2;
    const auto& slack = p == Player::kDefender ? s : w;
    for (int t = 0; t < num_types(p); ++t) {
      const auto v = ActionValues(p, t, sigma1, sigma2);
      obj += weights(p)[t] * (Dot(own[t].weights(), v) + slack[t]);
    }
  }
  return obj;
}

double BilinearProblem::ConstraintViolation(
    const std::vector<FiniteDistribution>& sigma1,
    const std::vector<FiniteDistribution>& sigma2, const std::vector<double>& s,
    const std::vector<double>& w) const {
  double worst = 0.0;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& slack = p == Player::kDefender ? s : w;
    for (int t = 0; t < num_types(p); ++t) {
      const auto v = ActionValues(p, t, sigma1, sigma2);
      worst = std::max(worst, BestValue(*this, p, t, v) + slack[t]);
    }
  }
  return worst;
}

BilinearStageSolution BilinearProblem::Solve(
    const BilinearOptions& options, const BilinearStageSolution* warm) const {
  if (options.restarts < 1) throw ParameterError("restarts must be positive");
  if (options.max_alternations < 1) {
    throw ParameterError("max_alternations must be positive");
  }
  struct Run {
    Mixed s1, s2;
    double objective = -std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    int alternations = 0;
    std::vector<double> trace;
  };
  const bool use_warm = warm != nullptr &&
                        Matches(*this, Player::kDefender, warm->sigma1) &&
                        Matches(*this, Player::kUser, warm->sigma2);
  std::vector<Run> runs(options.restarts);
  ParallelFor(options.restarts, options.threads, [&](int r) {
    Run& run = runs[r];
    if (r == 0 && use_warm) {
      run.s1 = ToRaw(warm->sigma1);
      run.s2 = ToRaw(warm->sigma2);
    } else {
      Rng rng(DeriveSeed(options.seed, static_cast<std::uint64_t>(r)));
      run.s1 = RandomStart(*this, Player::kDefender, rng);
      run.s2 = RandomStart(*this, Player::kUser, rng);
    }
    double obj = TightObjective(*this, run.s1, run.s2);
    run.trace.push_back(obj);
    for (int it = 0; it < options.max_alternations && obj < kSolvedObjective;
         ++it) {
      const double before = obj;
      run.s1 = AscentStep(*this, Player::kDefender, run.s2, run.s1);
      run.trace.push_back(TightObjective(*this, run.s1, run.s2));
      run.s2 = AscentStep(*this, Player::kUser, run.s1, run.s2);
      obj = TightObjective(*this, run.s1, run.s2);
      run.trace.push_back(obj);
      run.alternations = it + 1;
      if (obj - before < kStall) break;
    }
    FixUnweightedTypes(*this, run.s1, run.s2);
    run.objective = TightObjective(*this, run.s1, run.s2);
    run.gap = MaxGap(*this, run.s1, run.s2);
  });

  int chosen = -1;
  for (int r = 0; r < options.restarts; ++r) {
    if (runs[r].gap <= options.target_gap) {
      chosen = r;
      break;
    }
  }
  if (chosen < 0) {
    chosen = 0;
    for (int r = 1; r < options.restarts; ++r) {
      if (runs[r].objective > runs[chosen].objective) chosen = r;
    }
  }
  Run best = runs[chosen];
  bool active_set = false;
  if (best.gap > options.target_gap && options.active_set_fallback &&
      CountAssignments(*this, Player::kDefender) *
              CountAssignments(*this, Player::kUser) <=
          options.max_active_sets) {
    const auto sets1 = SupportAssignments(*this, Player::kDefender);
    const auto sets2 = SupportAssignments(*this, Player::kUser);
    for (std::size_t i = 0; i < sets1.size() && !active_set; ++i) {
      for (std::size_t j = 0; j < sets2.size() && !active_set; ++j) {
        auto s2 = SupportLp(*this, Player::kUser, sets2[j], sets1[i]);
        if (!s2) continue;
        auto s1 = SupportLp(*this, Player::kDefender, sets1[i], sets2[j]);
        if (!s1) continue;
        const double gap = MaxGap(*this, *s1, *s2);
        if (gap > options.target_gap) continue;
        best.s1 = std::move(*s1);
        best.s2 = std::move(*s2);
        best.gap = gap;
        best.alternations = 0;
        active_set = true;
      }
    }
  }
  BilinearStageSolution sol;
  sol.sigma1 = FromRaw(best.s1);
  sol.sigma2 = FromRaw(best.s2);
  sol.s = TightSlack(Player::kDefender, sol.sigma1, sol.sigma2);
  sol.w = TightSlack(Player::kUser, sol.sigma1, sol.sigma2);
  sol.objective = Objective(sol.sigma1, sol.sigma2, sol.s, sol.w);
  sol.gap1 = Gaps(Player::kDefender, sol.sigma1, sol.sigma2);
  sol.gap2 = Gaps(Player::kUser, sol.sigma1, sol.sigma2);
  sol.gap = best.gap;
  for (Player p : {Player::kDefender, Player::kUser}) {
    auto& out = p == Player::kDefender ? sol.value1 : sol.value2;
    const auto& own = p == Player::kDefender ? sol.sigma1 : sol.sigma2;
    for (int t = 0; t < num_types(p); ++t) {
      out.push_back(Dot(own[t].weights(),
                        ActionValues(p, t, sol.sigma1, sol.sigma2)));
    }
  }
  sol.restart = active_set ? -1 : chosen;
  sol.active_set = active_set;
  sol.alternations = best.alternations;
  for (auto& run : runs) sol.traces.push_back(std::move(run.trace));
  return sol;
}

BilinearStageSolution StageBilinearSolve(const StageGame& stage, int x,
                                         const StageBeliefs& beliefs,
                                         const ContinuationValues& next1,
                                         const ContinuationValues& next2,
                                         const BilinearOptions& options,
                                         const BilinearStageSolution* warm) {
  return BilinearProblem(stage, x, beliefs, next1, next2).Solve(options, warm);
}

}  // namespace secgame
