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


#include "secgame/game_json.h"

#include <fstream>
#include <utility>

#include "secgame/errors.h"

namespace secgame {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& what) {
  throw MalformedInputError(path + ": " + what);
}

const Json& Field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) Fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

const Json& Array(const Json& j, const std::string& path, std::size_t size) {
  if (!j.is_array()) Fail(path, "expected an array");
  if (j.size() != size) {
    Fail(path, "expected " + std::to_string(size) + " entries, got " +
                   std::to_string(j.size()));
  }
  return j;
}

double Number(const Json& j, const std::string& path) {
  if (!j.is_number()) Fail(path, "expected a number");
  return j.get<double>();
}

std::vector<std::string> Labels(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) Fail(path, "expected a non-empty array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) Fail(path + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<double> Numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(Number(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

FiniteDistribution Distribution(const Json& j, const std::string& path,
                                int size) {
  Array(j, path, size);
  std::vector<double> w = Numbers(j, path);
  if (auto err = CheckDistribution(w)) Fail(path, *err);
  return FiniteDistribution(std::move(w));
}

int StateIndex(const Json& j, const std::string& path,
               const std::vector<std::string>& states) {
  if (j.is_number_integer()) {
    const int i = j.get<int>();
    if (i < 0 || i >= static_cast<int>(states.size())) Fail(path, "state out of range");
    return i;
  }
  if (!j.is_string()) Fail(path, "expected a state label");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == j.get<std::string>()) return static_cast<int>(i);
  }
  Fail(path, "unknown state \"" + j.get<std::string>() + "\"");
}

std::string Child(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

StageGame StageFromJson(const Json& j, const std::string& path, int n1, int n2,
                        const std::vector<std::string>* next_states) {
  StageGame s = StageGame::Create(Labels(Field(j, path, "states"), path + "/states"),
                                  Labels(Field(j, path, "actions1"), path + "/actions1"),
                                  Labels(Field(j, path, "actions2"), path + "/actions2"),
                                  n1, n2);
  const int X = s.num_states(), m1 = s.num_actions1(), m2 = s.num_actions2();
  const Json& p1 = Array(Field(j, path, "payoffs1"), path + "/payoffs1", X);
  const Json& p2 = Array(Field(j, path, "payoffs2"), path + "/payoffs2", X);
  for (int x = 0; x < X; ++x) {
    for (int a1 = 0; a1 < m1; ++a1) {
      for (int a2 = 0; a2 < m2; ++a2) {
        for (int t1 = 0; t1 < n1; ++t1) {
          for (int t2 = 0; t2 < n2; ++t2) {
            double v[2];
            const Json* tensors[2] = {&p1, &p2};
            for (int p = 0; p < 2; ++p) {
              std::string at = path + (p == 0 ? "/payoffs1" : "/payoffs2");
              const Json* cur = tensors[p];
              const int index[5] = {x, a1, a2, t1, t2};
              const int size[5] = {X, m1, m2, n1, n2};
              for (int d = 0; d < 5; ++d) {
                Array(*cur, at, size[d]);
                cur = &(*cur)[index[d]];
                at = Child(at, index[d]);
              }
              v[p] = Number(*cur, at);
            }
            s.SetPayoffs(x, a1, a2, t1, t2, v[0], v[1]);
          }
        }
      }
    }
  }
  if (auto it = j.find("mask"); it != j.end()) {
    for (Player p : {Player::kDefender, Player::kUser}) {
      const char* key = p == Player::kDefender ? "defender" : "user";
      const std::string at = path + "/mask/" + key;
      const auto m = it->find(key);
      if (m == it->end()) continue;
      Array(*m, at, X);
      for (int x = 0; x < X; ++x) {
        Array((*m)[x], Child(at, x), s.num_types(p));
        for (int t = 0; t < s.num_types(p); ++t) {
          const Json& row = Array((*m)[x][t], Child(Child(at, x), t), s.num_actions(p));
          for (int a = 0; a < s.num_actions(p); ++a) {
            if (!row[a].is_boolean()) {
              Fail(Child(Child(Child(at, x), t), a), "expected a boolean");
            }
            s.SetFeasible(p, x, t, a, row[a].get<bool>());
          }
        }
      }
    }
  }
  if (next_states != nullptr) {
    const std::string at = path + "/transition";
    const Json& f = Array(Field(j, path, "transition"), at, X);
    for (int x = 0; x < X; ++x) {
      Array(f[x], Child(at, x), m1);
      for (int a1 = 0; a1 < m1; ++a1) {
        Array(f[x][a1], Child(Child(at, x), a1), m2);
        for (int a2 = 0; a2 < m2; ++a2) {
          s.SetTransition(x, a1, a2,
                          StateIndex(f[x][a1][a2],
                                     Child(Child(Child(at, x), a1), a2),
                                     *next_states));
        }
      }
    }
  } else if (j.contains("transition")) {
    Fail(path, "the last stage has no transition");
  }
  return s;
}

Json DistributionTable(const std::vector<FiniteDistribution>& row) {
  Json out = Json::array();
  for (const auto& d : row) out.push_back(d.weights());
  return out;
}

}  // namespace

Json GameToJson(const MultiStageGame& game) {
  Json j;
  j["types"] = {{"defender", game.types1}, {"user", game.types2}};
  j["priors"] = {{"about_defender", game.prior_about1},
                 {"about_user", game.prior_about2}};
  j["initial_state"] = game.stages.empty()
                           ? Json(game.initial_state)
                           : Json(game.stages[0].states[game.initial_state]);
  j["horizon"] = game.horizon();
  j["stages"] = Json::array();
  for (std::size_t k = 0; k < game.stages.size(); ++k) {
    const StageGame& s = game.stages[k];
    Json st;
    st["states"] = s.states;
    st["actions1"] = s.actions1;
    st["actions2"] = s.actions2;
    Json p1 = Json::array(), p2 = Json::array();
    for (int x = 0; x < s.num_states(); ++x) {
      Json bx1 = Json::array(), bx2 = Json::array();
      for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
        Json b11 = Json::array(), b12 = Json::array();
        for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
          Json c1 = Json::array(), c2 = Json::array();
          for (int t1 = 0; t1 < s.num_types1; ++t1) {
            Json r1 = Json::array(), r2 = Json::array();
            for (int t2 = 0; t2 < s.num_types2; ++t2) {
              r1.push_back(s.Payoff(Player::kDefender, x, a1, a2, t1, t2));
              r2.push_back(s.Payoff(Player::kUser, x, a1, a2, t1, t2));
            }
            c1.push_back(std::move(r1));
            c2.push_back(std::move(r2));
          }
          b11.push_back(std::move(c1));
          b12.push_back(std::move(c2));
        }
        bx1.push_back(std::move(b11));
        bx2.push_back(std::move(b12));
      }
      p1.push_back(std::move(bx1));
      p2.push_back(std::move(bx2));
    }
    st["payoffs1"] = std::move(p1);
    st["payoffs2"] = std::move(p2);
    if (!s.feasible1.empty() || !s.feasible2.empty()) {
      Json mask;
      for (Player p : {Player::kDefender, Player::kUser}) {
        Json m = Json::array();
        for (int x = 0; x < s.num_states(); ++x) {
          Json mx = Json::array();
          for (int t = 0; t < s.num_types(p); ++t) {
            Json row = Json::array();
            for (int a = 0; a < s.num_actions(p); ++a) {
              row.push_back(s.Feasible(p, x, t, a));
            }
            mx.push_back(std::move(row));
          }
          m.push_back(std::move(mx));
        }
        mask[p == Player::kDefender ? "defender" : "user"] = std::move(m);
      }
      st["mask"] = std::move(mask);
    }
    if (k + 1 < game.stages.size() && s.has_transition()) {
      const auto& next = game.stages[k + 1].states;
      Json f = Json::array();
      for (int x = 0; x < s.num_states(); ++x) {
        Json fx = Json::array();
        for (int a1 = 0; a1 < s.num_actions1(); ++a1) {
          Json row = Json::array();
          for (int a2 = 0; a2 < s.num_actions2(); ++a2) {
            const int y = s.NextState(x, a1, a2);
            row.push_back(y >= 0 && y < static_cast<int>(next.size())
                              ? Json(next[y])
                              : Json(y));
          }
          fx.push_back(std::move(row));
        }
        f.push_back(std::move(fx));
      }
      st["transition"] = std::move(f);
    }
    j["stages"].push_back(std::move(st));
  }
  return j;
}

MultiStageGame GameFromJson(const Json& j) {
  MultiStageGame g;
  const Json& types = Field(j, "", "types");
  g.types1 = Labels(Field(types, "/types", "defender"), "/types/defender");
  g.types2 = Labels(Field(types, "/types", "user"), "/types/user");
  const Json& priors = Field(j, "", "priors");
  g.prior_about1 = Numbers(Field(priors, "/priors", "about_defender"),
                           "/priors/about_defender");
  g.prior_about2 = Numbers(Field(priors, "/priors", "about_user"),
                           "/priors/about_user");
  const Json& stages = Field(j, "", "stages");
  if (!stages.is_array() || stages.empty()) {
    Fail("/stages", "expected a non-empty array");
  }
  const Json& horizon = Field(j, "", "horizon");
  if (!horizon.is_number_integer() ||
      horizon.get<int>() != static_cast<int>(stages.size()) - 1) {
    Fail("/horizon", "must equal the number of stages minus one");
  }
  const int n1 = static_cast<int>(g.types1.size());
  const int n2 = static_cast<int>(g.types2.size());
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k < stages.size(); ++k) {
    labels.push_back(Labels(Field(stages[k], Child("/stages", k), "states"),
                            Child("/stages", k) + "/states"));
  }
  for (std::size_t k = 0; k < stages.size(); ++k) {
    g.stages.push_back(StageFromJson(stages[k], Child("/stages", k), n1, n2,
                                     k + 1 < stages.size() ? &labels[k + 1]
                                                           : nullptr));
  }
  g.initial_state =
      StateIndex(Field(j, "", "initial_state"), "/initial_state", labels[0]);
  return g;
}

Json ProfileToJson(const StrategyProfile& profile) {
  Json j;
  for (Player p : {Player::kDefender, Player::kUser}) {
    Json table = Json::array();
    for (const auto& stage : profile.of(p)) {
      Json st = Json::array();
      for (const auto& state : stage) st.push_back(DistributionTable(state));
      table.push_back(std::move(st));
    }
    j[p == Player::kDefender ? "defender" : "user"] = std::move(table);
  }
  return j;
}

StrategyProfile ProfileFromJson(const MultiStageGame& game, const Json& j) {
  StrategyProfile profile;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const char* key = p == Player::kDefender ? "defender" : "user";
    const std::string path = std::string("/") + key;
    const Json& table = Array(Field(j, "", key), path, game.stages.size());
    auto& out = profile.of(p);
    for (std::size_t k = 0; k < game.stages.size(); ++k) {
      const StageGame& s = game.stages[k];
      const Json& st = Array(table[k], Child(path, k), s.num_states());
      out.emplace_back();
      for (int x = 0; x < s.num_states(); ++x) {
        const Json& row = Array(st[x], Child(Child(path, k), x), game.num_types(p));
        out.back().emplace_back();
        for (int t = 0; t < game.num_types(p); ++t) {
          out.back().back().push_back(Distribution(
              row[t], Child(Child(Child(path, k), x), t), s.num_actions(p)));
        }
      }
    }
  }
  if (auto v = ValidateProfile(game, profile); !v.empty()) Fail("", v.front());
  return profile;
}

Json BeliefsToJson(const BeliefSystem& beliefs) {
  Json j;
  Json nodes1 = Json::array(), nodes2 = Json::array();
  for (const auto& row : beliefs.defender) nodes1.push_back(DistributionTable(row));
  for (const auto& row : beliefs.user) nodes2.push_back(DistributionTable(row));
  j["defender"] = std::move(nodes1);
  j["user"] = std::move(nodes2);
  j["defender_off_path"] = Json::array();
  j["user_off_path"] = Json::array();
  for (char c : beliefs.defender_off_path) j["defender_off_path"].push_back(c != 0);
  for (char c : beliefs.user_off_path) j["user_off_path"].push_back(c != 0);
  Json agg = Json::array();
  for (const auto& stage : beliefs.aggregate) {
    Json st = Json::array();
    for (const auto& b : stage) {
      st.push_back({{"defender", DistributionTable(b.defender)},
                    {"user", DistributionTable(b.user)}});
    }
    agg.push_back(std::move(st));
  }
  j["aggregate"] = std::move(agg);
  j["discrepancy"] = beliefs.discrepancy;
  return j;
}

BeliefSystem BeliefsFromJson(const MultiStageGame& game, const HistoryTree& tree,
                             const Json& j) {
  BeliefSystem b;
  for (Player p : {Player::kDefender, Player::kUser}) {
    const char* key = p == Player::kDefender ? "defender" : "user";
    const std::string path = std::string("/") + key;
    const Json& table = Array(Field(j, "", key), path, tree.size());
    auto& out = p == Player::kDefender ? b.defender : b.user;
    for (int n = 0; n < tree.size(); ++n) {
      const Json& row = Array(table[n], Child(path, n), game.num_types(p));
      out.emplace_back();
      for (int t = 0; t < game.num_types(p); ++t) {
        out.back().push_back(Distribution(row[t], Child(Child(path, n), t),
                                          game.num_types(Opponent(p))));
      }
    }
    const std::string flags = std::string(key) + "_off_path";
    if (auto it = j.find(flags); it != j.end()) {
      Array(*it, "/" + flags, tree.size());
      auto& f = p == Player::kDefender ? b.defender_off_path : b.user_off_path;
      for (const auto& v : *it) {
        if (!v.is_boolean()) Fail("/" + flags, "expected booleans");
        f.push_back(v.get<bool>() ? 1 : 0);
      }
    }
  }
  if (auto it = j.find("aggregate"); it != j.end()) {
    Array(*it, "/aggregate", game.stages.size());
    for (std::size_t k = 0; k < game.stages.size(); ++k) {
      const std::string at = Child("/aggregate", k);
      const Json& st = Array((*it)[k], at, game.stages[k].num_states());
      b.aggregate.emplace_back();
      for (int x = 0; x < game.stages[k].num_states(); ++x) {
        StageBeliefs sb;
        for (Player p : {Player::kDefender, Player::kUser}) {
          const char* key = p == Player::kDefender ? "defender" : "user";
          const std::string ap = Child(at, x) + "/" + key;
          const Json& row = Array(Field(st[x], Child(at, x), key), ap,
                                  game.num_types(p));
          auto& slot = p == Player::kDefender ? sb.defender : sb.user;
          for (int t = 0; t < game.num_types(p); ++t) {
            slot.push_back(Distribution(row[t], Child(ap, t),
                                        game.num_types(Opponent(p))));
          }
        }
        b.aggregate.back().push_back(std::move(sb));
      }
    }
  }
  if (auto it = j.find("discrepancy"); it != j.end()) {
    for (std::size_t k = 0; k < it->size(); ++k) {
      b.discrepancy.push_back(Numbers((*it)[k], Child("/discrepancy", k)));
    }
  }
  return b;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInputError(path + ": " + e.what());
  }
}

}  // namespace secgame
