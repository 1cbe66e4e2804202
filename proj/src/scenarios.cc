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


#include "secgame/scenarios.h"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "secgame/errors.h"

namespace secgame {
namespace {

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
  return out;
}

void RequirePositive(std::initializer_list<std::pair<const char*, double>> xs) {
  std::vector<std::string> bad;
  for (const auto& [name, v] : xs) {
    if (!(v > 0.0)) bad.push_back(std::string(name) + " > 0");
  }
  if (!bad.empty()) throw ParameterError("violated: " + Join(bad));
}

// Row/column payoffs of the two-by-two escalation stage for one type pair.
struct Cell {
  double j1, j2;
};

void SetEscalation(StageGame& s, int x, int t1, int t2, double r0, double r1,
                   double r2) {
  // Rows Permit/Restrict, columns NOP/Escalate; NOP pays nothing.
  const Cell permit = t2 == kBadUser ? Cell{-r2, r2} : Cell{r1, r1};
  const Cell restrict = t2 == kBadUser ? Cell{r0, -r0} : Cell{-r1, -r1};
  s.SetPayoffs(x, 0, 0, t1, t2, 0.0, 0.0);
  s.SetPayoffs(x, 1, 0, t1, t2, 0.0, 0.0);
  s.SetPayoffs(x, 0, 1, t1, t2, permit.j1, permit.j2);
  s.SetPayoffs(x, 1, 1, t1, t2, restrict.j1, restrict.j2);
}

}  // namespace

std::vector<std::string> ValidateAptParameters(const AptParameters& p) {
  std::vector<std::string> v;
  auto need = [&v](bool ok, const std::string& what) {
    if (!ok) v.push_back(what);
  };
  need(p.c1_0 > 0.0, "c1_0 > 0");
  need(p.c2_0 > p.c1_0, "c2_0 > c1_0");
  need(p.r3_0 > 0.0, "r3_0 > 0");
  need(p.r4_0 > p.r3_0, "r4_0 > r3_0");
  need(p.r5_0 > 0.0, "r5_0 > 0");
  need(p.r1 > 0.0, "r1 > 0");
  need(p.r2 > 0.0, "r2 > 0");
  need(p.r3 > 0.0, "r3 > 0");
  need(p.r4 > p.r3, "r4 > r3");
  need(p.c_k > 0.0, "c_k > 0");
  need(p.r2_k > p.c_k, "r2_k > c_k");
  need(p.r3_k > p.r2_k, "r3_k > r2_k");
  for (int x = 0; x < 4; ++x) {
    need(p.r4_k[x] - p.r1_k[x] > p.c_k,
         "r4_k(" + std::to_string(x) + ") - r1_k(" + std::to_string(x) +
             ") > c_k");
  }
  return v;
}

AptParameters DefaultAptParameters() { return AptParameters{}; }

MultiStageGame BuildAptGame(const AptParameters& p) {
  const auto violations = ValidateAptParameters(p);
  if (!violations.empty()) {
    throw ParameterError("invalid APT parameters, violated: " +
                         Join(violations));
  }
  MultiStageGame g;
  g.types1 = {"H", "L"};
  g.types2 = {"b", "g"};
  g.prior_about1 = {0.5, 0.5};
  g.prior_about2 = {0.5, 0.5};
  g.initial_state = 0;

  // Phishing entry. Rows: no sandbox, sandbox on the employee's computer,
  // sandbox on the CEO's computer. Columns: email target.
  StageGame s0 = StageGame::Create({"external", "internal"},
                                   {"NOP", "Employee", "CEO"},
                                   {"Employee", "CEO", "Avatar"}, 2, 2);
  for (int x = 0; x < 2; ++x) {
    for (int t1 = 0; t1 < 2; ++t1) {
      const double c0 = t1 == kHighType ? p.c2_0 : p.c1_0;
      const double r0 = t1 == kHighType ? p.r4_0 : p.r3_0;
      for (int a1 = 0; a1 < 3; ++a1) {
        const double fee = a1 == 0 ? 0.0 : -c0;
        // A legitimate user never writes to the avatar; that column is
        // removed through the feasibility mask.
        for (int a2 = 0; a2 < 2; ++a2) {
          s0.SetPayoffs(x, a1, a2, t1, kGoodUser, fee, p.r1_0);
        }
        s0.SetPayoffs(x, a1, 2, t1, kGoodUser, fee, 0.0);
      }
      s0.SetPayoffs(x, 0, 0, t1, kBadUser, -p.r2_0, p.r2_0);
      s0.SetPayoffs(x, 0, 1, t1, kBadUser, -p.r2_0, p.r2_0);
      s0.SetPayoffs(x, 0, 2, t1, kBadUser, 0.0, p.r5_0);
      s0.SetPayoffs(x, 1, 0, t1, kBadUser, -c0, -r0);
      s0.SetPayoffs(x, 1, 1, t1, kBadUser, -c0, p.r2_0);
      s0.SetPayoffs(x, 1, 2, t1, kBadUser, -c0, p.r5_0);
      s0.SetPayoffs(x, 2, 0, t1, kBadUser, -c0, p.r2_0);
      s0.SetPayoffs(x, 2, 1, t1, kBadUser, -c0, -r0);
      s0.SetPayoffs(x, 2, 2, t1, kBadUser,
                    p.literal_ceo_avatar_fee ? -p.c1_0 : -c0, p.r5_0);
    }
    s0.SetFeasible(Player::kUser, x, kGoodUser, 2, false);
  }
  // Next state: 0 honeypot, 1 employee's computer, 2 CEO's computer.
  constexpr int kEntry[3][3] = {{1, 2, 0}, {0, 2, 0}, {1, 0, 0}};
  for (int a1 = 0; a1 < 3; ++a1) {
    for (int a2 = 0; a2 < 3; ++a2) {
      s0.SetTransition(0, a1, a2, kEntry[a1][a2]);
      // Internal mail is delivered whatever the defender does.
      s0.SetTransition(1, a1, a2, kEntry[0][a2]);
    }
  }

  StageGame s1 = StageGame::Create({"honeypot", "employee", "ceo"},
                                   {"Permit", "Restrict"},
                                   {"NOP", "Escalate"}, 2, 2);
  for (int x = 0; x < 3; ++x) {
    for (int t1 = 0; t1 < 2; ++t1) {
      const double r0 = t1 == kHighType ? p.r4 : p.r3;
      for (int t2 = 0; t2 < 2; ++t2) SetEscalation(s1, x, t1, t2, r0, p.r1, p.r2);
    }
  }
  // Privilege level reached: escalation succeeds only when permitted.
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      const int up = a1 == 0 && a2 == 1 ? 1 : 0;
      s1.SetTransition(0, a1, a2, 0);
      s1.SetTransition(1, a1, a2, 1 + up);
      s1.SetTransition(2, a1, a2, 2 + up);
    }
  }

  StageGame s2 = StageGame::Create({"level0", "level1", "level2", "level3"},
                                   {"NOP", "Monitor"}, {"NOP", "Access"}, 2, 2);
  for (int x = 0; x < 4; ++x) {
    const double r1k = p.r1_k[x], r4k = p.r4_k[x], ck = p.c_k;
    for (int t1 = 0; t1 < 2; ++t1) {
      const double r0k = t1 == kHighType ? p.r3_k : p.r2_k;
      s2.SetPayoffs(x, 0, 0, t1, kBadUser, 0.0, 0.0);
      s2.SetPayoffs(x, 0, 1, t1, kBadUser, r1k, r4k - r1k);
      s2.SetPayoffs(x, 1, 0, t1, kBadUser, -ck, 0.0);
      s2.SetPayoffs(x, 1, 1, t1, kBadUser, r0k - ck, -r0k);
      s2.SetPayoffs(x, 0, 0, t1, kGoodUser, 0.0, 0.0);
      s2.SetPayoffs(x, 0, 1, t1, kGoodUser, r4k, r4k);
      s2.SetPayoffs(x, 1, 0, t1, kGoodUser, -ck, 0.0);
      s2.SetPayoffs(x, 1, 1, t1, kGoodUser, r4k - ck, r4k);
    }
  }
  g.stages = {std::move(s0), std::move(s1), std::move(s2)};
  RequireValidGame(g);
  return g;
}

BimatrixGame BuildStaticGame(double r1, double r2, double r3, double r4) {
  RequirePositive({{"r1", r1}, {"r2", r2}, {"r3", r3}, {"r4", r4}});
  BimatrixGame g;
  g.actions1 = {"Permit", "Restrict"};
  g.actions2 = {"NOP", "Escalate"};
  g.payoff1.resize(2, 2);
  g.payoff2.resize(2, 2);
  g.payoff1 << 0, -r1, 0, r3;
  g.payoff2 << 0, r2, 0, -r4;
  return g;
}

StaticBayesianGame BuildStaticBayesian(double r0, double r1, double r2) {
  RequirePositive({{"r0", r0}, {"r1", r1}, {"r2", r2}});
  StaticBayesianGame g;
  g.types1 = {"defender"};
  g.types2 = {"b", "g"};
  g.prior_about1 = {1.0};
  g.prior_about2 = {0.5, 0.5};
  g.stage = StageGame::Create({"s"}, {"Permit", "Restrict"},
                              {"NOP", "Escalate"}, 1, 2);
  for (int t2 = 0; t2 < 2; ++t2) SetEscalation(g.stage, 0, 0, t2, r0, r1, r2);
  return g;
}

StaticBayesianGame BuildEscalationGame(double r1, double r2, double r3,
                                       double r4) {
  RequirePositive({{"r1", r1}, {"r2", r2}, {"r3", r3}});
  if (!(r4 > r3)) throw ParameterError("violated: r4 > r3");
  StaticBayesianGame g;
  g.types1 = {"H", "L"};
  g.types2 = {"b", "g"};
  g.prior_about1 = {0.5, 0.5};
  g.prior_about2 = {0.5, 0.5};
  g.stage = StageGame::Create({"s"}, {"Permit", "Restrict"},
                              {"NOP", "Escalate"}, 2, 2);
  for (int t1 = 0; t1 < 2; ++t1) {
    for (int t2 = 0; t2 < 2; ++t2) {
      SetEscalation(g.stage, 0, t1, t2, t1 == kHighType ? r4 : r3, r1, r2);
    }
  }
  return g;
}

StaticBayesianGame BuildExerciseQb(InformationStructure info) {
  StaticBayesianGame g;
  g.types1 = {"theta1", "theta2"};
  g.types2 = {"P2"};
  g.prior_about1 = {0.5, 0.5};
  g.prior_about2 = {1.0};
  g.information = info;
  g.stage = StageGame::Create({"s"}, {"A", "B"}, {"a", "b"}, 2, 1);
  constexpr double kCells[2][2][2][2] = {
      {{{10, 10}, {18, 4}}, {{7, 19}, {17, 17}}},
      {{{10, 10}, {18, 18}}, {{14, 18}, {20, 20}}}};
  for (int t = 0; t < 2; ++t) {
    for (int a1 = 0; a1 < 2; ++a1) {
      for (int a2 = 0; a2 < 2; ++a2) {
        g.stage.SetPayoffs(0, a1, a2, t, 0, kCells[t][a1][a2][0],
                           kCells[t][a1][a2][1]);
      }
    }
  }
  return g;
}

std::vector<ScenarioInfo> ListScenarios() {
  return {
      {"exercise-qb",
       "two-state static game; --info uninformed|private|complete"},
      {"static-game", "complete-information privilege escalation"},
      {"static-bayesian",
       "privilege escalation with an adversarial or legitimate user"},
      {"escalation", "privilege escalation with typed defender and user"},
      {"apt", "three-stage APT game: phishing, escalation, sensor access"},
  };
}

}  // namespace secgame
