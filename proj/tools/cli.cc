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


#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "secgame/errors.h"
#include "secgame/game_json.h"
#include "secgame/multistage.h"
#include "secgame/random.h"
#include "secgame/scenarios.h"
#include "secgame/signaling.h"
#include "secgame/simulate.h"
#include "secgame/static_solver.h"

namespace secgame::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct Source {
  std::string scenario;
  std::string game_file;
  std::string params_file;
};

struct Output {
  std::string json_path;  // "-" writes the report to stdout
  bool timings = false;
};

struct Options {
  Source source;
  Output output;
  std::string info = "private";
  std::uint64_t seed = 0;
  int threads = 0;
  double tol = 1e-6;
  int max_iter = 100;
  int restarts = 16;
  int offpath_grid = kDefaultOffPathGrid;
  bool mixed = false;
  bool expand_histories = false;
  std::string profile_file;
  std::string beliefs_file;
  std::string report_file;
  long long samples = 100000;
  std::string noise = "none";
};

// ---------------------------------------------------------------------------
// Formatting.

std::string Fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << (v == 0.0 ? 0.0 : v);
  return s.str();
}

std::string Sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(2) << v;
  return s.str();
}

void PrintTable(std::ostream& out, const std::string& indent,
                const std::vector<std::string>& rows,
                const std::vector<std::string>& cols,
                const std::vector<FiniteDistribution>& dists) {
  std::size_t w0 = 0;
  for (const auto& r : rows) w0 = std::max(w0, r.size());
  std::vector<std::size_t> w;
  for (const auto& c : cols) w.push_back(std::max<std::size_t>(c.size(), 6));
  out << indent << std::string(w0, ' ');
  for (std::size_t c = 0; c < cols.size(); ++c) {
    out << "  " << std::setw(static_cast<int>(w[c])) << cols[c];
  }
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << indent << std::left << std::setw(static_cast<int>(w0)) << rows[r]
        << std::right;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << "  " << std::setw(static_cast<int>(w[c]))
          << Fixed(dists[r][static_cast<int>(c)]);
    }
    out << "\n";
  }
}

Json Dists(const std::vector<FiniteDistribution>& v) {
  Json j = Json::array();
  for (const auto& d : v) j.push_back(d.weights());
  return j;
}

std::vector<FiniteDistribution> DistsFromJson(const Json& j) {
  std::vector<FiniteDistribution> out;
  for (const auto& row : j) {
    out.emplace_back(row.get<std::vector<double>>());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Game sources.

StaticBayesianGame FromBimatrix(const BimatrixGame& b) {
  StaticBayesianGame g;
  g.types1 = {"defender"};
  g.types2 = {"user"};
  g.prior_about1 = {1.0};
  g.prior_about2 = {1.0};
  g.stage = StageGame::Create({"s"}, b.actions1, b.actions2, 1, 1);
  for (int a1 = 0; a1 < b.rows(); ++a1) {
    for (int a2 = 0; a2 < b.cols(); ++a2) {
      g.stage.SetPayoffs(0, a1, a2, 0, 0, b.payoff1(a1, a2), b.payoff2(a1, a2));
    }
  }
  for (int a = 0; a < static_cast<int>(b.feasible1.size()); ++a) {
    g.stage.SetFeasible(Player::kDefender, 0, 0, a, b.feasible1[a]);
  }
  for (int a = 0; a < static_cast<int>(b.feasible2.size()); ++a) {
    g.stage.SetFeasible(Player::kUser, 0, 0, a, b.feasible2[a]);
  }
  return g;
}

// Applies {"name": value} overrides to named parameters.
void Override(const Json& params, std::map<std::string, double*> fields,
              std::map<std::string, std::array<double, 4>*> arrays = {},
              bool* flag = nullptr) {
  if (params.is_null()) return;
  if (!params.is_object()) throw ParameterError("parameters must be a JSON object");
  for (const auto& [key, value] : params.items()) {
    if (auto it = fields.find(key); it != fields.end()) {
      if (!value.is_number()) throw ParameterError(key + " must be a number");
      *it->second = value.get<double>();
    } else if (auto at = arrays.find(key); at != arrays.end()) {
      if (!value.is_array() || value.size() != 4) {
        throw ParameterError(key + " must be an array of 4 numbers");
      }
      for (int i = 0; i < 4; ++i) {
        if (!value[i].is_number()) throw ParameterError(key + " must hold numbers");
        (*at->second)[i] = value[i].get<double>();
      }
    } else if (flag != nullptr && key == "literal_ceo_avatar_fee") {
      if (!value.is_boolean()) throw ParameterError(key + " must be a boolean");
      *flag = value.get<bool>();
    } else {
      throw ParameterError("unknown parameter \"" + key + "\"");
    }
  }
}

MultiStageGame BuildScenario(const std::string& name, const Json& params) {
  AptParameters p = DefaultAptParameters();
  if (name == "apt") {
    Override(params,
             {{"c1_0", &p.c1_0}, {"c2_0", &p.c2_0}, {"r1_0", &p.r1_0},
              {"r2_0", &p.r2_0}, {"r3_0", &p.r3_0}, {"r4_0", &p.r4_0},
              {"r5_0", &p.r5_0}, {"r1", &p.r1}, {"r2", &p.r2}, {"r3", &p.r3},
              {"r4", &p.r4}, {"c_k", &p.c_k}, {"r2_k", &p.r2_k},
              {"r3_k", &p.r3_k}},
             {{"r1_k", &p.r1_k}, {"r4_k", &p.r4_k}},
             &p.literal_ceo_avatar_fee);
    return BuildAptGame(p);
  }
  if (name == "static-game") {
    Override(params, {{"r1", &p.r1}, {"r2", &p.r2}, {"r3", &p.r3}, {"r4", &p.r4}});
    return ToMultiStage(FromBimatrix(BuildStaticGame(p.r1, p.r2, p.r3, p.r4)));
  }
  if (name == "static-bayesian") {
    double r0 = p.r3;
    Override(params, {{"r0", &r0}, {"r1", &p.r1}, {"r2", &p.r2}});
    return ToMultiStage(BuildStaticBayesian(r0, p.r1, p.r2));
  }
  if (name == "escalation") {
    Override(params, {{"r1", &p.r1}, {"r2", &p.r2}, {"r3", &p.r3}, {"r4", &p.r4}});
    return ToMultiStage(BuildEscalationGame(p.r1, p.r2, p.r3, p.r4));
  }
  if (name == "exercise-qb") {
    Override(params, {});
    return ToMultiStage(BuildExerciseQb());
  }
  throw ParameterError("unknown scenario \"" + name + "\"; see `scenario list`");
}

// The game named by --scenario or --game, else the one embedded in `report`.
MultiStageGame LoadGame(const Source& src, const Json* report = nullptr) {
  if (!src.scenario.empty() && !src.game_file.empty()) {
    throw ParameterError("--scenario and --game are mutually exclusive");
  }
  if (!src.params_file.empty() && src.scenario.empty()) {
    throw ParameterError("--params needs --scenario");
  }
  MultiStageGame game;
  if (!src.scenario.empty()) {
    const Json params =
        src.params_file.empty() ? Json() : ReadJsonFile(src.params_file);
    game = BuildScenario(src.scenario, params);
  } else if (!src.game_file.empty()) {
    game = GameFromJson(ReadJsonFile(src.game_file));
  } else if (report != nullptr && report->contains("game")) {
    game = GameFromJson((*report)["game"]);
  } else {
    throw ParameterError("a game is required: pass --scenario or --game");
  }
  RequireValidGame(game);
  return game;
}

InformationStructure ParseInfo(const std::string& info) {
  if (info == "private") return InformationStructure::kPrivateTypes;
  if (info == "uninformed") return InformationStructure::kUninformed;
  throw ParameterError("unknown information structure \"" + info + "\"");
}

Json Digest(const MultiStageGame& g) {
  Json d;
  d["horizon"] = g.horizon();
  d["types"] = {{"defender", g.types1.size()}, {"user", g.types2.size()}};
  Json states = Json::array(), actions = Json::array();
  for (const auto& s : g.stages) {
    states.push_back(s.num_states());
    actions.push_back({s.num_actions1(), s.num_actions2()});
  }
  d["states"] = std::move(states);
  d["actions"] = std::move(actions);
  return d;
}

// ---------------------------------------------------------------------------
// Reports.

struct Report {
  Json json;
  Clock::time_point start = Clock::now();

  Report(const std::vector<std::string>& args, const std::string& kind) {
    json["command"] = args;
    json["kind"] = kind;
  }
  void Timing(const std::string& phase, Clock::time_point since) {
    json["timings"][phase] =
        std::chrono::duration<double>(Clock::now() - since).count();
  }
};

int Emit(Report& report, const Output& o, std::ostream& out, int code) {
  if (o.timings) {
    report.Timing("total", report.start);
  } else {
    report.json.erase("timings");
  }
  if (o.json_path.empty()) return code;
  const std::string text = report.json.dump(2) + "\n";
  if (o.json_path == "-") {
    out << text;
  } else {
    std::ofstream f(o.json_path);
    if (!f) throw MalformedInputError("cannot write " + o.json_path);
    f << text;
  }
  return code;
}

// ---------------------------------------------------------------------------
// solve ne / bne.

Json EquilibriumJson(const EquilibriumResult& eq, double gap) {
  Json j;
  j["defender"] = Dists(eq.defender);
  j["user"] = Dists(eq.user);
  j["defender_values"] = eq.defender_values;
  j["user_values"] = eq.user_values;
  j["defender_value"] = eq.defender_value;
  j["user_value"] = eq.user_value;
  j["gap"] = gap;
  return j;
}

void PrintEquilibrium(std::ostream& out, int index, const EquilibriumResult& eq,
                      const std::vector<std::string>& types1,
                      const std::vector<std::string>& types2,
                      const std::vector<std::string>& actions1,
                      const std::vector<std::string>& actions2, double gap) {
  out << "equilibrium " << index << "\n";
  out << "  defender strategy\n";
  PrintTable(out, "    ", types1, actions1, eq.defender);
  out << "  user strategy\n";
  PrintTable(out, "    ", types2, actions2, eq.user);
  out << "  defender values:";
  for (std::size_t t = 0; t < types1.size(); ++t) {
    out << " " << types1[t] << "=" << Fixed(eq.defender_values[t]);
  }
  out << "  ex ante=" << Fixed(eq.defender_value) << "\n";
  out << "  user values:";
  for (std::size_t t = 0; t < types2.size(); ++t) {
    out << " " << types2[t] << "=" << Fixed(eq.user_values[t]);
  }
  out << "  ex ante=" << Fixed(eq.user_value) << "\n";
  out << "  verified gap: " << Sci(gap) << "\n";
}

// Re-verified gap of a complete-information equilibrium.
double BimatrixGap(const BimatrixGame& g, const EquilibriumResult& eq) {
  return EvaluateBimatrix(g, eq.defender[0], eq.user[0]).gap;
}

// Re-verified gap of a Bayesian equilibrium under `info`.
double BayesianGap(const StaticBayesianGame& g, const EquilibriumResult& eq) {
  if (g.information == InformationStructure::kUninformed) {
    return EvaluateBimatrix(PriorAveraged(g), eq.defender[0], eq.user[0]).gap;
  }
  return EvaluateBayesian(g, eq.defender, eq.user).gap;
}

Json SolveSlices(const StaticBayesianGame& g, std::ostream& out, bool print) {
  Json slices = Json::array();
  for (int t1 = 0; t1 < g.stage.num_types1; ++t1) {
    for (int t2 = 0; t2 < g.stage.num_types2; ++t2) {
      const BimatrixGame b = TypeSlice(g, t1, t2);
      Json slice;
      slice["defender_type"] = g.types1[t1];
      slice["user_type"] = g.types2[t2];
      slice["pure"] = Json::array();
      for (const auto& [a1, a2] : PureNe(b)) {
        slice["pure"].push_back({b.actions1[a1], b.actions2[a2]});
      }
      slice["equilibria"] = Json::array();
      if (print) {
        out << "types (" << g.types1[t1] << ", " << g.types2[t2] << ")\n";
        out << "  pure equilibria:";
        for (const auto& pr : slice["pure"]) {
          out << " (" << pr[0].get<std::string>() << ","
              << pr[1].get<std::string>() << ")";
        }
        if (slice["pure"].empty()) out << " none";
        out << "\n";
      }
      int index = 0;
      for (const auto& eq : MixedNe(b)) {
        const double gap = BimatrixGap(b, eq);
        slice["equilibria"].push_back(EquilibriumJson(eq, gap));
        if (print) {
          PrintEquilibrium(out, index, eq, {g.types1[t1]}, {g.types2[t2]},
                           b.actions1, b.actions2, gap);
        }
        ++index;
      }
      slices.push_back(std::move(slice));
    }
  }
  return slices;
}

int CmdSolveNe(const Options& o, const std::vector<std::string>& args,
               std::ostream& out) {
  Report report(args, "ne");
  const MultiStageGame game = LoadGame(o.source);
  const StaticBayesianGame g = FromMultiStage(game);
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);
  report.json["seed"] = o.seed;
  const bool print = o.output.json_path != "-";
  const auto t = Clock::now();
  report.json["results"]["slices"] = SolveSlices(g, out, print);
  report.Timing("solve", t);
  return Emit(report, o.output, out, kExitOk);
}

int CmdSolveBne(const Options& o, const std::vector<std::string>& args,
                std::ostream& out) {
  if (o.info == "complete") return CmdSolveNe(o, args, out);
  Report report(args, "bne");
  const MultiStageGame game = LoadGame(o.source);
  StaticBayesianGame g = FromMultiStage(game);
  g.information = ParseInfo(o.info);
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);
  report.json["seed"] = o.seed;
  report.json["results"]["information"] = o.info;
  const bool print = o.output.json_path != "-";
  const auto t = Clock::now();
  const auto eqs = SolveBne(g);
  report.Timing("solve", t);
  Json list = Json::array();
  int index = 0;
  if (print) out << "information: " << o.info << "\n";
  for (const auto& eq : eqs) {
    const double gap = BayesianGap(g, eq);
    list.push_back(EquilibriumJson(eq, gap));
    if (print) {
      PrintEquilibrium(out, index, eq, g.types1, g.types2, g.stage.actions1,
                       g.stage.actions2, gap);
    }
    ++index;
  }
  if (print && eqs.empty()) out << "no equilibrium found\n";
  report.json["results"]["equilibria"] = std::move(list);
  return Emit(report, o.output, out, kExitOk);
}

// ---------------------------------------------------------------------------
// solve signaling.

Json SignalingJson(const SignalingPbne& eq, const SignalingCheck& check) {
  Json j;
  j["sender"] = Dists(eq.sender);
  j["receiver"] = Dists(eq.receiver);
  j["belief"] = Dists(eq.belief);
  j["on_path"] = Json::array();
  for (char c : eq.on_path) j["on_path"].push_back(c != 0);
  j["classification"] = SenderClassName(eq.classification);
  j["sender_values"] = eq.sender_values;
  j["receiver_value"] = eq.receiver_value;
  j["gap"] = check.gap();
  j["belief_error"] = check.belief_error;
  return j;
}

SignalingPbne SignalingFromJson(const Json& j) {
  SignalingPbne eq;
  eq.sender = DistsFromJson(j.at("sender"));
  eq.receiver = DistsFromJson(j.at("receiver"));
  eq.belief = DistsFromJson(j.at("belief"));
  for (const auto& v : j.at("on_path")) eq.on_path.push_back(v.get<bool>());
  return eq;
}

int CmdSolveSignaling(const Options& o, const std::vector<std::string>& args,
                      std::ostream& out) {
  Report report(args, "signaling");
  const MultiStageGame game = LoadGame(o.source);
  const SignalingGame sg = SignalingFromStatic(FromMultiStage(game));
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);
  report.json["seed"] = o.seed;
  report.json["results"]["mixed"] = o.mixed;
  report.json["results"]["offpath_grid"] = o.offpath_grid;
  const auto t = Clock::now();
  const auto eqs = o.mixed ? SolveMixedPbne(sg, o.offpath_grid)
                           : SolvePurePbne(sg, o.offpath_grid);
  report.Timing("solve", t);
  const bool print = o.output.json_path != "-";
  Json list = Json::array();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const SignalingCheck check = VerifySignaling(sg, eqs[i]);
    list.push_back(SignalingJson(eqs[i], check));
    if (!print) continue;
    out << "equilibrium " << i << " (" << SenderClassName(eqs[i].classification)
        << ")\n  sender (user) strategy\n";
    PrintTable(out, "    ", sg.types, sg.messages, eqs[i].sender);
    out << "  receiver (defender) strategy\n";
    PrintTable(out, "    ", sg.messages, sg.actions, eqs[i].receiver);
    out << "  receiver beliefs\n";
    std::vector<std::string> rows;
    for (int m = 0; m < sg.num_messages(); ++m) {
      rows.push_back(sg.messages[m] + (eqs[i].on_path[m] ? "" : " (off path)"));
    }
    PrintTable(out, "    ", rows, sg.types, eqs[i].belief);
    out << "  sender values:";
    for (int t2 = 0; t2 < sg.num_types(); ++t2) {
      out << " " << sg.types[t2] << "=" << Fixed(eqs[i].sender_values[t2]);
    }
    out << "  receiver value=" << Fixed(eqs[i].receiver_value) << "\n";
    out << "  verified gap: " << Sci(check.gap())
        << "  belief error: " << Sci(check.belief_error) << "\n";
  }
  if (print && eqs.empty()) out << "no equilibrium found\n";
  report.json["results"]["equilibria"] = std::move(list);
  return Emit(report, o.output, out, kExitOk);
}

// ---------------------------------------------------------------------------
// solve pbne.

Json EpsilonJson(const EpsilonReport& e) {
  return {{"defender", e.defender},
          {"user", e.user},
          {"defender_subgame", e.defender_subgame},
          {"user_subgame", e.user_subgame},
          {"belief_error", e.belief_error},
          {"consistent", e.consistent},
          {"max", e.max()}};
}

void PrintEpsilon(std::ostream& out, const MultiStageGame& g,
                  const EpsilonReport& e) {
  out << "epsilon certificate (root / worst subgame)\n";
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& root = p == Player::kDefender ? e.defender : e.user;
    const auto& sub = p == Player::kDefender ? e.defender_subgame : e.user_subgame;
    const auto& types = p == Player::kDefender ? g.types1 : g.types2;
    for (std::size_t t = 0; t < types.size(); ++t) {
      out << "  " << (p == Player::kDefender ? "defender " : "user     ")
          << std::left << std::setw(10) << types[t] << std::right << " "
          << Sci(root[t]) << " / " << Sci(sub[t]) << "\n";
    }
  }
  out << "  belief error " << Sci(e.belief_error)
      << (e.consistent ? " (consistent)" : " (INCONSISTENT)") << "\n";
}

void PrintProfile(std::ostream& out, const MultiStageGame& g,
                  const StrategyProfile& profile, const ValueFunction* values) {
  for (std::size_t k = 0; k < g.stages.size(); ++k) {
    const StageGame& s = g.stages[k];
    for (int x = 0; x < s.num_states(); ++x) {
      out << "stage " << k << " state " << s.states[x] << "\n";
      out << "  defender\n";
      PrintTable(out, "    ", g.types1, s.actions1, profile.defender[k][x]);
      out << "  user\n";
      PrintTable(out, "    ", g.types2, s.actions2, profile.user[k][x]);
      if (values != nullptr) {
        out << "  values: defender";
        for (std::size_t t = 0; t < g.types1.size(); ++t) {
          out << " " << g.types1[t] << "=" << Fixed(values->defender[k][x][t]);
        }
        out << "  user";
        for (std::size_t t = 0; t < g.types2.size(); ++t) {
          out << " " << g.types2[t] << "=" << Fixed(values->user[k][x][t]);
        }
        out << "\n";
      }
    }
  }
}

int CmdSolvePbne(const Options& o, const std::vector<std::string>& args,
                 std::ostream& out) {
  Report report(args, "pbne");
  MultiStageGame game = LoadGame(o.source);
  if (o.expand_histories) game = ExpandHistories(game);
  PbneOptions opts;
  opts.tol = o.tol;
  opts.max_iter = o.max_iter;
  opts.bilinear.restarts = o.restarts;
  opts.bilinear.seed = o.seed;
  opts.bilinear.threads = o.threads;
  if (o.tol <= 0 || o.max_iter < 1 || o.restarts < 1) {
    throw ParameterError("--tol, --max-iter and --restarts must be positive");
  }
  const auto t = Clock::now();
  const PbneSolution sol = SolvePbne(game, opts);
  report.Timing("solve", t);

  Json r;
  r["converged"] = sol.converged;
  r["iterations"] = sol.iterations;
  r["tol"] = o.tol;
  r["strategy_residuals"] = sol.strategy_residuals;
  r["belief_residuals"] = sol.belief_residuals;
  r["expand_histories"] = o.expand_histories;
  r["profile"] = ProfileToJson(sol.profile);
  r["beliefs"] = BeliefsToJson(sol.beliefs);
  r["values"] = {{"defender", sol.values.defender}, {"user", sol.values.user}};
  r["max_stage_gap"] = sol.max_stage_gap;
  Json stages = Json::array();
  for (const auto& row : sol.stages) {
    Json st = Json::array();
    for (const auto& s : row) {
      st.push_back({{"gap", s.gap},
                    {"objective", s.objective},
                    {"restart", s.restart},
                    {"active_set", s.active_set}});
    }
    stages.push_back(std::move(st));
  }
  r["stage_solutions"] = std::move(stages);
  r["epsilon"] = EpsilonJson(sol.epsilon);
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);
  report.json["seed"] = o.seed;
  report.json["results"] = std::move(r);

  if (o.output.json_path != "-") {
    out << "iteration  strategy residual  belief residual\n";
    for (int i = 0; i < sol.iterations; ++i) {
      out << std::setw(9) << i + 1 << "  " << std::setw(17)
          << Sci(sol.strategy_residuals[i]) << "  " << std::setw(15)
          << Sci(sol.belief_residuals[i]) << "\n";
    }
    out << (sol.converged ? "converged" : "did not converge") << " after "
        << sol.iterations << " iterations (tol " << Sci(o.tol) << ")\n";
    PrintProfile(out, game, sol.profile, &sol.values);
    out << "largest stage bilinear gap: " << Sci(sol.max_stage_gap) << "\n";
    PrintEpsilon(out, game, sol.epsilon);
  }
  return Emit(report, o.output, out, sol.converged ? kExitOk : kExitNotConverged);
}

// ---------------------------------------------------------------------------
// verify.

// A profile (or beliefs) may be given directly or inside a report.
const Json& Unwrap(const Json& j, const char* key) {
  if (j.contains("results") && j["results"].contains(key)) return j["results"][key];
  return j;
}

double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

constexpr double kReproduceTolerance = 1e-9;

int VerifyStaticReport(const Json& report, const MultiStageGame& game,
                       std::ostream& out) {
  const StaticBayesianGame g = FromMultiStage(game);
  const std::string kind = report.at("kind");
  double worst = 0.0;
  int count = 0;
  auto check = [&](double stated, double recomputed) {
    worst = std::max(worst, std::abs(stated - recomputed));
    out << "equilibrium " << count++ << ": stated gap " << Sci(stated)
        << ", recomputed " << Sci(recomputed) << "\n";
  };
  const Json& results = report.at("results");
  if (kind == "ne") {
    std::size_t i = 0;
    for (int t1 = 0; t1 < g.stage.num_types1; ++t1) {
      for (int t2 = 0; t2 < g.stage.num_types2; ++t2, ++i) {
        const BimatrixGame b = TypeSlice(g, t1, t2);
        for (const auto& eq : results.at("slices").at(i).at("equilibria")) {
          check(eq.at("gap"),
                EvaluateBimatrix(b, FiniteDistribution(eq.at("defender")[0]),
                                 FiniteDistribution(eq.at("user")[0]))
                    .gap);
        }
      }
    }
  } else if (kind == "bne") {
    StaticBayesianGame gi = g;
    gi.information = ParseInfo(results.at("information"));
    for (const auto& eq : results.at("equilibria")) {
      EquilibriumResult r;
      r.defender = DistsFromJson(eq.at("defender"));
      r.user = DistsFromJson(eq.at("user"));
      check(eq.at("gap"), BayesianGap(gi, r));
    }
  } else {
    const SignalingGame sg = SignalingFromStatic(g);
    for (const auto& eq : results.at("equilibria")) {
      const SignalingCheck c = VerifySignaling(sg, SignalingFromJson(eq));
      check(eq.at("gap"), c.gap());
      worst = std::max(worst, std::abs(eq.at("belief_error").get<double>() -
                                       c.belief_error));
    }
  }
  out << "largest difference from stated certificates: " << Sci(worst) << "\n";
  return worst <= kReproduceTolerance ? kExitOk : kExitInvalidInput;
}

int CmdVerify(const Options& o, const std::vector<std::string>& args,
              std::ostream& out) {
  Report report(args, "verify");
  std::optional<Json> stored;
  if (!o.report_file.empty()) stored = ReadJsonFile(o.report_file);
  const MultiStageGame game = LoadGame(o.source, stored ? &*stored : nullptr);
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);

  if (stored && stored->value("kind", "") != "pbne") {
    const std::string kind = stored->value("kind", "");
    if (kind != "ne" && kind != "bne" && kind != "signaling") {
      throw MalformedInputError("report kind \"" + kind + "\" has no certificates");
    }
    std::ostringstream lines;
    const int code = VerifyStaticReport(*stored, game, lines);
    if (o.output.json_path != "-") out << lines.str();
    report.json["results"]["reproduced"] = code == kExitOk;
    Emit(report, o.output, out, code);
    return code;
  }

  std::optional<Json> profile_json;
  if (!o.profile_file.empty()) {
    profile_json = ReadJsonFile(o.profile_file);
  } else if (stored) {
    profile_json = *stored;
  } else {
    throw ParameterError("verify needs --profile or --report");
  }
  const StrategyProfile profile =
      ProfileFromJson(game, Unwrap(*profile_json, "profile"));
  const HistoryTree tree(game);
  BeliefSystem beliefs;
  bool supplied = true;
  if (!o.beliefs_file.empty()) {
    beliefs = BeliefsFromJson(game, tree, Unwrap(ReadJsonFile(o.beliefs_file), "beliefs"));
  } else if (stored) {
    beliefs = BeliefsFromJson(game, tree, Unwrap(*stored, "beliefs"));
  } else {
    beliefs = ForwardPass(game, tree, profile);
    supplied = false;
  }
  const auto t = Clock::now();
  const EpsilonReport e = VerifyEpsilon(game, profile, beliefs);
  report.Timing("verify", t);
  report.json["results"]["epsilon"] = EpsilonJson(e);
  report.json["results"]["beliefs_supplied"] = supplied;

  int code = kExitOk;
  std::ostringstream lines;
  if (!supplied) lines << "no beliefs supplied; using the Bayes forward pass\n";
  PrintEpsilon(lines, game, e);
  if (stored && stored->contains("results") &&
      (*stored)["results"].contains("epsilon")) {
    const Json& s = (*stored)["results"]["epsilon"];
    double worst = std::max(
        {MaxAbsDiff(s.at("defender"), e.defender), MaxAbsDiff(s.at("user"), e.user),
         MaxAbsDiff(s.at("defender_subgame"), e.defender_subgame),
         MaxAbsDiff(s.at("user_subgame"), e.user_subgame),
         std::abs(s.at("belief_error").get<double>() - e.belief_error)});
    lines << "largest difference from stated certificates: " << Sci(worst) << "\n";
    report.json["results"]["reproduced"] = worst <= kReproduceTolerance;
    if (worst > kReproduceTolerance) code = kExitInvalidInput;
  }
  if (o.output.json_path != "-") out << lines.str();
  return Emit(report, o.output, out, code);
}

// ---------------------------------------------------------------------------
// simulate.

int CmdSimulate(const Options& o, const std::vector<std::string>& args,
                std::ostream& out) {
  Report report(args, "simulate");
  if (o.profile_file.empty()) throw ParameterError("simulate needs --profile");
  const Json stored = ReadJsonFile(o.profile_file);
  const MultiStageGame game = LoadGame(o.source, &stored);
  const StrategyProfile profile = ProfileFromJson(game, Unwrap(stored, "profile"));
  const Noise noise = Noise::Parse(o.noise);
  if (o.samples < 1) throw ParameterError("--n must be at least 1");
  report.json["game"] = GameToJson(game);
  report.json["digest"] = Digest(game);
  report.json["seed"] = o.seed;
  report.json["results"]["n"] = o.samples;
  report.json["results"]["noise"] = noise.ToString();
  const bool print = o.output.json_path != "-";

  const auto t = Clock::now();
  const MonteCarloResult mc =
      MonteCarloValue(game, profile, o.samples, o.seed, noise, o.threads);
  report.Timing("simulate", t);
  const HistoryTree tree(game);
  const BeliefSystem beliefs = ForwardPass(game, tree, profile);

  if (o.samples == 1) {
    const Trajectory tr =
        SamplePlayout(game, profile, DeriveSeed(o.seed, 0), noise);
    Json steps = Json::array();
    if (print) {
      out << "trajectory: defender " << game.types1[tr.type1] << ", user "
          << game.types2[tr.type2] << "\n";
      out << "stage  state  defender action  user action  payoff1  payoff2  "
             "noisy1  noisy2\n";
    }
    for (std::size_t k = 0; k < tr.stages.size(); ++k) {
      const StageRecord& r = tr.stages[k];
      const StageGame& s = game.stages[k];
      steps.push_back({{"state", s.states[r.state]},
                       {"action1", s.actions1[r.action1]},
                       {"action2", s.actions2[r.action2]},
                       {"payoff1", r.payoff1},
                       {"payoff2", r.payoff2},
                       {"noisy1", r.noisy1},
                       {"noisy2", r.noisy2}});
      if (print) {
        out << std::setw(5) << k << "  " << std::setw(5) << s.states[r.state]
            << "  " << std::setw(15) << s.actions1[r.action1] << "  "
            << std::setw(11) << s.actions2[r.action2] << "  " << std::setw(7)
            << Fixed(r.payoff1) << "  " << std::setw(7) << Fixed(r.payoff2)
            << "  " << std::setw(6) << Fixed(r.noisy1) << "  " << std::setw(6)
            << Fixed(r.noisy2) << "\n";
      }
    }
    report.json["results"]["trajectory"] = {
        {"defender_type", game.types1[tr.type1]},
        {"user_type", game.types2[tr.type2]},
        {"stages", std::move(steps)}};
  }

  Json cells = Json::array();
  if (print) {
    out << "player    type        count      mean   std err     exact  "
           "|diff|/se\n";
  }
  for (Player p : {Player::kDefender, Player::kUser}) {
    const auto& types = p == Player::kDefender ? game.types1 : game.types2;
    for (std::size_t t = 0; t < types.size(); ++t) {
      const MonteCarloCell& c = mc.of(p)[t];
      const auto [u1, u2] = CumulativeUtility(
          game, profile, beliefs, p == Player::kDefender ? static_cast<int>(t) : 0,
          p == Player::kUser ? static_cast<int>(t) : 0);
      const double exact = p == Player::kDefender ? u1 : u2;
      const double z = c.std_error > 0 ? std::abs(c.mean - exact) / c.std_error
                                       : (c.mean == exact ? 0.0 : INFINITY);
      cells.push_back({{"player", p == Player::kDefender ? "defender" : "user"},
                       {"type", types[t]},
                       {"count", c.count},
                       {"mean", c.mean},
                       {"std_error", c.std_error},
                       {"clean_mean", c.clean_mean},
                       {"clean_std_error", c.clean_std_error},
                       {"exact", exact}});
      if (print) {
        out << std::left << std::setw(9)
            << (p == Player::kDefender ? "defender" : "user") << " "
            << std::setw(8) << types[t] << std::right << " " << std::setw(9)
            << c.count << " " << std::setw(9) << Fixed(c.mean) << " "
            << std::setw(9) << Fixed(c.std_error) << " " << std::setw(9)
            << Fixed(exact) << " " << std::setw(9)
            << (c.count > 0 ? Fixed(z) : std::string("-")) << "\n";
      }
    }
  }
  report.json["results"]["cells"] = std::move(cells);
  return Emit(report, o.output, out, kExitOk);
}

int CmdScenarioList(std::ostream& out) {
  for (const auto& s : ListScenarios()) {
    out << std::left << std::setw(16) << s.name << std::right << " "
        << s.description << "\n";
  }
  return kExitOk;
}

void AddSource(CLI::App* app, Source& s) {
  app->add_option("--scenario", s.scenario, "built-in scenario (see `scenario list`)");
  app->add_option("--game", s.game_file, "game description JSON file");
  app->add_option("--params", s.params_file,
                  "JSON object overriding scenario parameters");
}

void AddOutput(CLI::App* app, Output& o) {
  app->add_option("--json", o.json_path, "write the report to FILE ('-' for stdout)");
  app->add_flag("--timings", o.timings, "include wall-clock timings");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equilibrium solvers for dynamic Bayesian security games", "secgame"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "compute equilibria");
  solve->require_subcommand(1);
  auto* ne = solve->add_subcommand("ne", "Nash equilibria of every type pair");
  auto* bne = solve->add_subcommand("bne", "Bayesian Nash equilibria");
  auto* sig = solve->add_subcommand("signaling", "signaling-game PBNE");
  auto* pbne = solve->add_subcommand("pbne", "multistage PBNE");
  for (CLI::App* c : {ne, bne, sig, pbne}) {
    AddSource(c, o.source);
    AddOutput(c, o.output);
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  }
  bne->add_option("--info", o.info, "information structure")
      ->check(CLI::IsMember({"private", "uninformed", "complete"}));
  sig->add_option("--offpath-grid", o.offpath_grid,
                  "grid resolution for off-path beliefs");
  sig->add_flag("--mixed", o.mixed, "enumerate mixed equilibria");
  pbne->add_option("--tol", o.tol, "convergence tolerance");
  pbne->add_option("--max-iter", o.max_iter, "forward-backward iteration cap");
  pbne->add_option("--restarts", o.restarts, "bilinear ascent restarts per state");
  pbne->add_flag("--expand-histories", o.expand_histories,
                 "solve the game whose states are full histories");

  auto* verify = app.add_subcommand("verify", "re-verify a stored solution");
  AddSource(verify, o.source);
  AddOutput(verify, o.output);
  verify->add_option("--report", o.report_file, "report written by `solve`");
  verify->add_option("--profile", o.profile_file, "strategy profile JSON");
  verify->add_option("--beliefs", o.beliefs_file, "belief system JSON");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo playouts");
  AddSource(simulate, o.source);
  AddOutput(simulate, o.output);
  simulate->add_option("--profile", o.profile_file,
                       "strategy profile JSON or `solve pbne` report");
  simulate->add_option("--n", o.samples, "number of playouts");
  simulate->add_option("--seed", o.seed, "random seed");
  simulate->add_option("--noise", o.noise, "none | gaussian:S | uniform:A");
  simulate->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  auto* scenario = app.add_subcommand("scenario", "built-in scenarios");
  scenario->require_subcommand(1);
  auto* list = scenario->add_subcommand("list", "list scenario names");

  std::vector<const char*> argv = {"secgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (ne->parsed()) return CmdSolveNe(o, args, out);
    if (bne->parsed()) return CmdSolveBne(o, args, out);
    if (sig->parsed()) return CmdSolveSignaling(o, args, out);
    if (pbne->parsed()) return CmdSolvePbne(o, args, out);
    if (verify->parsed()) return CmdVerify(o, args, out);
    if (simulate->parsed()) return CmdSimulate(o, args, out);
    if (list->parsed()) return CmdScenarioList(out);
  } catch (const SecgameError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace secgame::cli
