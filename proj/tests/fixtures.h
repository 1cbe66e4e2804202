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


// Golden-fixture checks for the scenario builders. The fixtures under
// tests/fixtures are transcribed by hand; the builders are compared against
// them cell by cell with parameter values that are pairwise distinct, so a
// swapped symbol cannot go unnoticed.

#ifndef SECGAME_TESTS_FIXTURES_H_
#define SECGAME_TESTS_FIXTURES_H_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "secgame/scenarios.h"

namespace secgame::fixture {

struct CellSpec {
  std::string table, type1, type2, row, col, j1, j2;
};

struct TransitionSpec {
  int stage, state, a1, a2, next;
};

inline std::vector<std::string> DataLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

inline std::vector<CellSpec> LoadTables(const std::string& path) {
  std::vector<CellSpec> out;
  for (const auto& line : DataLines(path)) {
    std::istringstream ss(line);
    CellSpec c;
    if (!(ss >> c.table >> c.type1 >> c.type2 >> c.row >> c.col >> c.j1 >> c.j2)) {
      throw std::runtime_error("bad fixture line: " + line);
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<TransitionSpec> LoadTransitions(const std::string& path) {
  std::vector<TransitionSpec> out;
  for (const auto& line : DataLines(path)) {
    std::istringstream ss(line);
    TransitionSpec t;
    if (!(ss >> t.stage >> t.state >> t.a1 >> t.a2 >> t.next)) {
      throw std::runtime_error("bad fixture line: " + line);
    }
    out.push_back(t);
  }
  return out;
}

// Sums signed terms such as "r4K-r1K" or "-c0_0"; "-inf" is -infinity.
inline double Evaluate(const std::string& expr,
                       const std::function<double(const std::string&)>& lookup) {
  if (expr == "-inf") return -std::numeric_limits<double>::infinity();
  double total = 0.0;
  std::size_t i = 0;
  while (i < expr.size()) {
    double sign = 1.0;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1.0 : 1.0;
      ++i;
    }
    std::size_t j = i;
    while (j < expr.size() && expr[j] != '+' && expr[j] != '-') ++j;
    const std::string term = expr.substr(i, j - i);
    if (term.empty()) throw std::runtime_error("bad expression " + expr);
    const bool numeric = std::isdigit(static_cast<unsigned char>(term[0]));
    total += sign * (numeric ? std::stod(term) : lookup(term));
    i = j;
  }
  return total;
}

// Parameter values used for the comparison; all distinct.
inline AptParameters DistinctAptParameters() {
  AptParameters p;
  p.c1_0 = 1.1;
  p.c2_0 = 2.3;
  p.r1_0 = 2.9;
  p.r2_0 = 4.7;
  p.r3_0 = 3.1;
  p.r4_0 = 6.7;
  p.r5_0 = 0.7;
  p.r1 = 1.3;
  p.r2 = 4.1;
  p.r3 = 3.7;
  p.r4 = 5.9;
  p.c_k = 0.9;
  p.r2_k = 1.9;
  p.r3_k = 4.3;
  p.r1_k = {0.1, 1.2, 2.4, 3.5};
  p.r4_k = {2.2, 4.4, 8.8, 12.1};
  return p;
}
inline constexpr double kStaticR0 = 2.6;

struct Report {
  int cells = 0;
  std::vector<std::string> mismatches;
};

namespace internal {

inline int IndexOf(const std::vector<std::string>& labels,
                   const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::runtime_error("unknown label " + label);
  return static_cast<int>(it - labels.begin());
}

inline std::vector<int> Types(const std::vector<std::string>& names,
                              const std::string& spec) {
  if (spec == "-") return {0};
  if (spec == "*") {
    std::vector<int> all(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) all[i] = static_cast<int>(i);
    return all;
  }
  return {IndexOf(names, spec)};
}

// Symbol values for a defender type and, in the final stage, a state.
inline double Symbol(const AptParameters& p, const std::string& name,
                     const std::string& type1, int state) {
  const bool high = type1 == "H";
  static const std::map<std::string, double AptParameters::*> plain = {
      {"c1_0", &AptParameters::c1_0}, {"c2_0", &AptParameters::c2_0},
      {"r1_0", &AptParameters::r1_0}, {"r2_0", &AptParameters::r2_0},
      {"r3_0", &AptParameters::r3_0}, {"r4_0", &AptParameters::r4_0},
      {"r5_0", &AptParameters::r5_0}, {"r1", &AptParameters::r1},
      {"r2", &AptParameters::r2},     {"r3", &AptParameters::r3},
      {"r4", &AptParameters::r4},     {"cK", &AptParameters::c_k}};
  if (const auto it = plain.find(name); it != plain.end()) return p.*(it->second);
  if (name == "c0_0") return high ? p.c2_0 : p.c1_0;
  if (name == "r0_0") return high ? p.r4_0 : p.r3_0;
  if (name == "r0") return type1 == "-" ? kStaticR0 : (high ? p.r4 : p.r3);
  if (name == "r0K") return high ? p.r3_k : p.r2_k;
  if (name == "r1K") return p.r1_k.at(state);
  if (name == "r4K") return p.r4_k.at(state);
  throw std::runtime_error("unknown symbol " + name);
}

}  // namespace internal

// Compares every fixture cell with the builders. The default APT build is
// expected to differ from the literal table only in the (CEO, Avatar) cell
// for an adversarial user, where it charges the type-dependent fee.
inline Report CheckTables(const std::string& path) {
  using internal::IndexOf;
  Report report;
  const AptParameters p = DistinctAptParameters();
  AptParameters literal = p;
  literal.literal_ceo_avatar_fee = true;
  const MultiStageGame apt = BuildAptGame(p);
  const MultiStageGame apt_literal = BuildAptGame(literal);
  const BimatrixGame stat = BuildStaticGame(p.r1, p.r2, p.r3, p.r4);
  const StaticBayesianGame sbg = BuildStaticBayesian(kStaticR0, p.r1, p.r2);
  const StaticBayesianGame esc = BuildEscalationGame(p.r1, p.r2, p.r3, p.r4);
  const StaticBayesianGame qb = BuildExerciseQb();

  auto compare = [&report](const std::string& where, double want, double got) {
    ++report.cells;
    if (std::abs(want - got) > 1e-12) {
      std::ostringstream msg;
      msg << where << ": want " << want << " got " << got;
      report.mismatches.push_back(msg.str());
    }
  };
  auto stage_cells = [&](const std::string& tag, const StageGame& s,
                         const std::vector<std::string>& types1,
                         const std::vector<std::string>& types2,
                         const CellSpec& c, int x, bool masked_ok) {
    const int a1 = IndexOf(s.actions1, c.row), a2 = IndexOf(s.actions2, c.col);
    for (int t1 : internal::Types(types1, c.type1)) {
      for (int t2 : internal::Types(types2, c.type2)) {
        const std::string type1 = c.type1 == "-" ? "-" : types1[t1];
        auto lookup = [&](const std::string& n) {
          return internal::Symbol(p, n, type1, x);
        };
        const std::string where = tag + " " + type1 + "/" + types2[t2] + " " +
                                  c.row + "," + c.col + " x=" + std::to_string(x);
        for (Player pl : {Player::kDefender, Player::kUser}) {
          const std::string& e = pl == Player::kDefender ? c.j1 : c.j2;
          const double want = Evaluate(e, lookup);
          if (std::isinf(want)) {
            ++report.cells;
            const int a = pl == Player::kDefender ? a1 : a2;
            const int t = pl == Player::kDefender ? t1 : t2;
            if (!masked_ok || s.Feasible(pl, x, t, a)) {
              report.mismatches.push_back(where + ": action should be masked");
            }
            continue;
          }
          compare(where + (pl == Player::kDefender ? " J1" : " J2"), want,
                  s.Payoff(pl, x, a1, a2, t1, t2));
        }
      }
    }
  };

  for (const CellSpec& c : LoadTables(path)) {
    if (c.table == "static") {
      auto lookup = [&](const std::string& n) {
        return internal::Symbol(p, n, "-", 0);
      };
      const int a1 = IndexOf(stat.actions1, c.row);
      const int a2 = IndexOf(stat.actions2, c.col);
      compare("static " + c.row + "," + c.col + " J1", Evaluate(c.j1, lookup),
              stat.payoff1(a1, a2));
      compare("static " + c.row + "," + c.col + " J2", Evaluate(c.j2, lookup),
              stat.payoff2(a1, a2));
    } else if (c.table == "static_bayesian") {
      stage_cells("static_bayesian", sbg.stage, sbg.types1, sbg.types2, c, 0,
                  false);
    } else if (c.table == "escalation") {
      stage_cells("escalation", esc.stage, esc.types1, esc.types2, c, 0, false);
      for (int x = 0; x < apt.stages[1].num_states(); ++x) {
        stage_cells("apt stage 1", apt.stages[1], apt.types1, apt.types2, c, x,
                    false);
      }
    } else if (c.table == "initial") {
      for (int x = 0; x < apt.stages[0].num_states(); ++x) {
        stage_cells("apt literal stage 0", apt_literal.stages[0],
                    apt_literal.types1, apt_literal.types2, c, x, true);
        if (c.type2 == "b" && c.row == "CEO" && c.col == "Avatar") {
          CellSpec fee = c;
          fee.j1 = "-c0_0";
          stage_cells("apt stage 0", apt.stages[0], apt.types1, apt.types2,
                      fee, x, true);
        } else {
          stage_cells("apt stage 0", apt.stages[0], apt.types1, apt.types2, c,
                      x, true);
        }
      }
    } else if (c.table == "final") {
      for (int x = 0; x < apt.stages[2].num_states(); ++x) {
        stage_cells("apt stage 2", apt.stages[2], apt.types1, apt.types2, c, x,
                    false);
      }
    } else if (c.table == "exercise") {
      stage_cells("exercise", qb.stage, qb.types1, qb.types2, c, 0, false);
    } else {
      throw std::runtime_error("unknown table " + c.table);
    }
  }
  return report;
}

inline Report CheckTransitions(const std::string& path) {
  Report report;
  const MultiStageGame apt = BuildAptGame(DefaultAptParameters());
  int expected = 0;
  for (int k = 0; k < apt.horizon(); ++k) {
    const StageGame& s = apt.stages[k];
    expected += s.num_states() * s.num_actions1() * s.num_actions2();
  }
  for (const TransitionSpec& t : LoadTransitions(path)) {
    ++report.cells;
    const int got = apt.stages[t.stage].NextState(t.state, t.a1, t.a2);
    if (got != t.next) {
      std::ostringstream msg;
      msg << "f" << t.stage << "(" << t.state << "," << t.a1 << "," << t.a2
          << "): want " << t.next << " got " << got;
      report.mismatches.push_back(msg.str());
    }
  }
  if (report.cells != expected) {
    report.mismatches.push_back("fixture covers " + std::to_string(report.cells) +
                                " of " + std::to_string(expected) + " triples");
  }
  return report;
}

}  // namespace secgame::fixture

#endif  // SECGAME_TESTS_FIXTURES_H_
