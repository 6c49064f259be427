// Copyright 2026 The qgame Authors.
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

#include "qgame/scenario.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "qgame/errors.h"
#include "qgame/expr.h"
#include "qgame/payoff_kernel.h"

namespace qgame {
namespace {

template <typename... Args>
[[noreturn]] void Fail(fmt::format_string<Args...> f, Args&&... args) {
  throw Error(ErrorCode::kConfigError, fmt::format(f, std::forward<Args>(args)...));
}

std::string Scalar(const YAML::Node& n, std::string_view where) {
  if (!n.IsScalar()) Fail("{}: expected a scalar", where);
  return n.Scalar();
}

double Number(const YAML::Node& n, std::string_view where) {
  try {
    return EvaluateExpression(Scalar(n, where));
  } catch (const Error& e) {
    Fail("{}: {}", where, e.what());
  }
}

long long Integer(const YAML::Node& n, std::string_view where) {
  const double v = Number(n, where);
  if (v != std::floor(v) || std::abs(v) > 9.0e15) Fail("{}: expected an integer", where);
  return static_cast<long long>(v);
}

void CheckKeys(const YAML::Node& map, std::initializer_list<std::string_view> allowed,
               std::string_view where) {
  if (!map.IsMap()) Fail("{}: expected a mapping", where);
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      Fail("{}: unknown key '{}'", where, key);
  }
}

const YAML::Node Require(const YAML::Node& map, const char* key, std::string_view where) {
  const YAML::Node n = map[key];
  if (!n) Fail("{}: missing required key '{}'", where, key);
  return n;
}

std::vector<double> NumberList(const YAML::Node& n, std::size_t expected, std::string_view where) {
  if (!n.IsSequence()) Fail("{}: expected a list", where);
  if (expected && n.size() != expected) Fail("{}: expected {} entries, got {}", where, expected, n.size());
  std::vector<double> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(Number(n[i], fmt::format("{}[{}]", where, i)));
  return out;
}

PayoffMatrix2x2 ParseGame(const YAML::Node& n) {
  if (n.IsScalar()) {
    if (n.Scalar() != "welfare") Fail("game: unknown keyword '{}'", n.Scalar());
    return WelfareGame();
  }
  CheckKeys(n, {"alice", "bob", "row_labels", "col_labels"}, "game");
  PayoffMatrix2x2 m;
  const auto a = NumberList(Require(n, "alice", "game"), 4, "game.alice");
  const auto b = NumberList(Require(n, "bob", "game"), 4, "game.bob");
  std::copy(a.begin(), a.end(), m.alice.begin());
  std::copy(b.begin(), b.end(), m.bob.begin());
  for (const char* key : {"row_labels", "col_labels"}) {
    if (!n[key]) continue;
    const YAML::Node l = n[key];
    if (!l.IsSequence() || l.size() != 2) Fail("game.{}: expected two labels", key);
    auto& dst = std::string_view(key) == "row_labels" ? m.row_labels : m.col_labels;
    for (int i = 0; i < 2; ++i) dst[i] = Scalar(l[i], fmt::format("game.{}[{}]", key, i));
  }
  try {
    m.Validate();
  } catch (const Error& e) {
    Fail("game: {}", e.what());
  }
  return m;
}

ProductState ParseInitial(const YAML::Node& n) {
  int f = -1, g = -1;
  if (n.IsSequence() && n.size() == 2) {
    f = static_cast<int>(Integer(n[0], "initial_state[0]"));
    g = static_cast<int>(Integer(n[1], "initial_state[1]"));
  } else if (n.IsScalar()) {
    std::string s = n.Scalar();
    if (s.size() == 4 && s.front() == '|' && s.back() == '>') s = s.substr(1, 2);
    if (s.size() == 2) {
      f = s[0] - '0';
      g = s[1] - '0';
    }
  }
  if ((f != 0 && f != 1) || (g != 0 && g != 1))
    Fail("initial_state: expected [f, g] or \"fg\" with bits f, g");
  return ProductState::Make(f, g);
}

CorrelationSpec ParseCorrelation(const YAML::Node& n) {
  CorrelationSpec spec;
  std::string kind;
  if (n.IsScalar()) {
    kind = n.Scalar();
  } else {
    CheckKeys(n, {"kind", "p"}, "correlation");
    kind = Scalar(Require(n, "kind", "correlation"), "correlation.kind");
  }
  if (kind == "mes") spec.kind = CorrelationKind::kMes;
  else if (kind == "dephased") spec.kind = CorrelationKind::kDephased;
  else if (kind == "full_rank") spec.kind = CorrelationKind::kFullRank;
  else if (kind == "corrupted") spec.kind = CorrelationKind::kCorrupted;
  else Fail("correlation.kind: unknown kind '{}'", kind);

  const bool has_p = n.IsMap() && n["p"];
  if (spec.kind == CorrelationKind::kCorrupted) {
    if (!has_p) Fail("correlation: kind corrupted requires p");
    spec.p = Number(n["p"], "correlation.p");
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) Fail("correlation.p: {} outside [0, 1]", spec.p);
  } else if (has_p) {
    Fail("correlation: p only applies to kind corrupted");
  }
  return spec;
}

StrategySpace ParseSpace(const YAML::Node& n, std::string_view where) {
  const std::string s = Scalar(n, where);
  const auto space = ParseStrategySpace(s);
  if (!space) Fail("{}: unknown strategy space '{}'", where, s);
  return *space;
}

StrategyParams ParseStrategy(const YAML::Node& n, StrategySpace space, std::string_view where) {
  auto num = [&](const char* key) { return Number(Require(n, key, where), fmt::format("{}.{}", where, key)); };
  try {
    switch (space) {
      case StrategySpace::kClassicalPure: {
        CheckKeys(n, {"move"}, where);
        const long long move = Integer(Require(n, "move", where), fmt::format("{}.move", where));
        if (move != 0 && move != 1) Fail("{}.move: expected 0 or 1", where);
        return StrategyParams::Pure(static_cast<int>(move));
      }
      case StrategySpace::kClassicalMixed:
        CheckKeys(n, {"p"}, where);
        return StrategyParams::Mixed(num("p"));
      case StrategySpace::kSu2One:
        CheckKeys(n, {"theta"}, where);
        return StrategyParams::Su2One(num("theta"));
      case StrategySpace::kSu2Two:
        CheckKeys(n, {"theta", "phi"}, where);
        return StrategyParams::Su2Two(num("theta"), num("phi"));
      case StrategySpace::kSu2Three:
        CheckKeys(n, {"theta", "phi", "varphi"}, where);
        return StrategyParams::Su2Three(num("theta"), num("phi"), num("varphi"));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfigError) throw;
    Fail("{}: {}", where, e.what());
  }
  Fail("{}: unsupported space", where);
}

SearchConfig ParseSearch(const YAML::Node& n) {
  CheckKeys(n, {"grid_resolution", "refine_iters", "epsilon", "dedupe_radius", "candidate_tolerance",
                "max_refinements", "max_profiles", "threads"},
            "search");
  SearchConfig cfg;
  if (n["grid_resolution"]) cfg.grid_resolution = static_cast<int>(Integer(n["grid_resolution"], "search.grid_resolution"));
  if (n["refine_iters"]) cfg.refine_iters = static_cast<int>(Integer(n["refine_iters"], "search.refine_iters"));
  if (n["epsilon"]) cfg.epsilon = Number(n["epsilon"], "search.epsilon");
  if (n["dedupe_radius"]) cfg.dedupe_radius = Number(n["dedupe_radius"], "search.dedupe_radius");
  if (n["candidate_tolerance"]) cfg.candidate_tolerance = Number(n["candidate_tolerance"], "search.candidate_tolerance");
  if (n["max_refinements"]) cfg.max_refinements = static_cast<int>(Integer(n["max_refinements"], "search.max_refinements"));
  if (n["max_profiles"]) {
    const long long v = Integer(n["max_profiles"], "search.max_profiles");
    if (v <= 0) Fail("search.max_profiles: must be positive");
    cfg.max_profiles = static_cast<std::size_t>(v);
  }
  if (n["threads"]) cfg.threads = static_cast<int>(Integer(n["threads"], "search.threads"));
  try {
    cfg.Validate();
  } catch (const Error& e) {
    Fail("search: {}", e.what());
  }
  return cfg;
}

Operator2 SuMatrix(double theta, double phi, double varphi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Operator2 u;
  u << std::polar(c, phi), std::polar(s, varphi), -std::polar(s, -varphi), std::polar(c, -phi);
  return u;
}

std::vector<NamedOperator> ParseOperators(const YAML::Node& n, std::string_view where) {
  if (!n.IsSequence()) Fail("{}: expected a list of operators", where);
  std::vector<NamedOperator> out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const std::string at = fmt::format("{}[{}]", where, i);
    const YAML::Node op = n[i];
    CheckKeys(op, {"name", "quaternion", "theta", "phi", "varphi"}, at);
    NamedOperator named;
    named.name = Scalar(Require(op, "name", at), at + ".name");
    if (op["quaternion"]) {
      if (op["theta"] || op["phi"] || op["varphi"]) Fail("{}: give either quaternion or angles", at);
      const auto q = NumberList(op["quaternion"], 4, at + ".quaternion");
      named.op = QuaternionOperator(q[0], q[1], q[2], q[3]);
    } else {
      auto angle = [&](const char* key) {
        return op[key] ? Number(op[key], fmt::format("{}.{}", at, key)) : 0.0;
      };
      if (!op["theta"]) Fail("{}: needs quaternion or theta", at);
      named.op = SuMatrix(angle("theta"), angle("phi"), angle("varphi"));
    }
    for (const auto& prev : out)
      if (prev.name == named.name) Fail("{}: duplicate operator name '{}'", where, named.name);
    out.push_back(std::move(named));
  }
  return out;
}

std::string AnglesOf(const StrategyParams& p) { return p.Describe(); }

Record ReportHeader(const ScenarioConfig& cfg, const char* csv_kind) {
  Record r("report");
  r.Add("tool", "qgame")
      .Add("mode", std::string(ScenarioModeName(cfg.mode)))
      .Add("scenario", cfg.name)
      .Add("csv_kind", csv_kind);
  return r;
}

}  // namespace

std::string_view ScenarioModeName(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::kPayoffEval: return "payoff_eval";
    case ScenarioMode::kNashSearch: return "nash_search";
    case ScenarioMode::kCorruptedSweep: return "corrupted_sweep";
    case ScenarioMode::kExtendedMatrix: return "extended_matrix";
    case ScenarioMode::kClassicalAnalysis: return "classical_analysis";
  }
  return "?";
}

std::optional<ScenarioMode> ParseScenarioMode(std::string_view s) {
  for (ScenarioMode m : {ScenarioMode::kPayoffEval, ScenarioMode::kNashSearch,
                         ScenarioMode::kCorruptedSweep, ScenarioMode::kExtendedMatrix,
                         ScenarioMode::kClassicalAnalysis})
    if (ScenarioModeName(m) == s) return m;
  return std::nullopt;
}

CorrelationState CorrelationSpec::Build(ProductState initial) const {
  switch (kind) {
    case CorrelationKind::kMes: return CorrelationState::Mes(initial);
    case CorrelationKind::kDephased: return CorrelationState::Dephased(initial);
    case CorrelationKind::kFullRank: return CorrelationState::FullRank();
    case CorrelationKind::kCorrupted: return CorrelationState::Corrupted(p);
  }
  return CorrelationState::FullRank();
}

Operator2 QuaternionOperator(double a0, double ax, double ay, double az) {
  const double norm = std::sqrt(a0 * a0 + ax * ax + ay * ay + az * az);
  if (!(norm > 1e-12)) Fail("quaternion must be non-zero");
  const Complex i(0.0, 1.0);
  Operator2 u = a0 * pauli::Identity() + i * (ax * pauli::X() + ay * pauli::Y() + az * pauli::Z());
  return u / norm;
}

ScenarioConfig ParseScenario(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    Fail("YAML syntax: {}", e.what());
  }
  if (!root.IsMap()) Fail("scenario: expected a mapping at the top level");
  const YAML::Node version = root["schema_version"];
  if (!version) Fail("scenario: missing required key 'schema_version'");
  if (Integer(version, "schema_version") != 1)
    Fail("schema_version: unsupported version '{}'", version.Scalar());

  ScenarioConfig cfg;
  const std::string mode = Scalar(Require(root, "mode", "scenario"), "mode");
  const auto parsed_mode = ParseScenarioMode(mode);
  if (!parsed_mode) Fail("mode: unknown mode '{}'", mode);
  cfg.mode = *parsed_mode;

  switch (cfg.mode) {
    case ScenarioMode::kPayoffEval:
      CheckKeys(root, {"schema_version", "name", "mode", "game", "initial_state", "correlation",
                       "space_a", "space_b", "strategy_a", "strategy_b"},
                "scenario (payoff_eval)");
      break;
    case ScenarioMode::kNashSearch:
      CheckKeys(root, {"schema_version", "name", "mode", "game", "initial_state", "correlation",
                       "space_a", "space_b", "search"},
                "scenario (nash_search)");
      break;
    case ScenarioMode::kCorruptedSweep:
      CheckKeys(root, {"schema_version", "name", "mode", "game", "space_a", "space_b", "search",
                       "sweep"},
                "scenario (corrupted_sweep)");
      break;
    case ScenarioMode::kExtendedMatrix:
      CheckKeys(root, {"schema_version", "name", "mode", "game", "initial_state", "correlation",
                       "extra_a", "extra_b"},
                "scenario (extended_matrix)");
      break;
    case ScenarioMode::kClassicalAnalysis:
      CheckKeys(root, {"schema_version", "name", "mode", "game"}, "scenario (classical_analysis)");
      break;
  }

  if (root["name"]) cfg.name = Scalar(root["name"], "name");
  if (root["game"]) cfg.game = ParseGame(root["game"]);
  if (root["initial_state"]) cfg.initial = ParseInitial(root["initial_state"]);
  if (root["search"]) cfg.search = ParseSearch(root["search"]);

  const bool needs_correlation = cfg.mode == ScenarioMode::kPayoffEval ||
                                 cfg.mode == ScenarioMode::kNashSearch ||
                                 cfg.mode == ScenarioMode::kExtendedMatrix;
  if (needs_correlation) cfg.correlation = ParseCorrelation(Require(root, "correlation", "scenario"));

  const bool needs_spaces = cfg.mode == ScenarioMode::kPayoffEval ||
                            cfg.mode == ScenarioMode::kNashSearch ||
                            cfg.mode == ScenarioMode::kCorruptedSweep;
  if (needs_spaces) {
    cfg.space_a = ParseSpace(Require(root, "space_a", "scenario"), "space_a");
    cfg.space_b = ParseSpace(Require(root, "space_b", "scenario"), "space_b");
  }
  if (cfg.mode == ScenarioMode::kPayoffEval) {
    cfg.strategy_a = ParseStrategy(Require(root, "strategy_a", "scenario"), cfg.space_a, "strategy_a");
    cfg.strategy_b = ParseStrategy(Require(root, "strategy_b", "scenario"), cfg.space_b, "strategy_b");
  }
  if (cfg.mode == ScenarioMode::kCorruptedSweep) {
    const YAML::Node sweep = Require(root, "sweep", "scenario");
    CheckKeys(sweep, {"p_values"}, "sweep");
    cfg.sweep_p = NumberList(Require(sweep, "p_values", "sweep"), 0, "sweep.p_values");
    if (cfg.sweep_p.empty()) Fail("sweep.p_values: must not be empty");
    for (double p : cfg.sweep_p)
      if (!(p >= 0.0 && p <= 1.0)) Fail("sweep.p_values: {} outside [0, 1]", p);
  }
  if (cfg.mode == ScenarioMode::kExtendedMatrix) {
    if (root["extra_a"]) cfg.extra_a = ParseOperators(root["extra_a"], "extra_a");
    if (root["extra_b"]) cfg.extra_b = ParseOperators(root["extra_b"], "extra_b");
    for (const auto& op : cfg.extra_a)
      if (op.name == cfg.game.row_labels[0] || op.name == cfg.game.row_labels[1])
        Fail("extra_a: name '{}' clashes with a move label", op.name);
    for (const auto& op : cfg.extra_b)
      if (op.name == cfg.game.col_labels[0] || op.name == cfg.game.col_labels[1])
        Fail("extra_b: name '{}' clashes with a move label", op.name);
  }

  YAML::Emitter out;
  out << root;
  cfg.echo = out.c_str();
  return cfg;
}

ScenarioConfig LoadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail("cannot read scenario file '{}'", path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseScenario(text.str());
}

Record EquilibriumRecord(const CandidateNE& ne) {
  Record r("equilibrium");
  r.Add("player_a_params", AnglesOf(ne.a))
      .Add("player_b_params", AnglesOf(ne.b))
      .Add("payoff_a", ne.payoffs.first)
      .Add("payoff_b", ne.payoffs.second)
      .Add("gap_a", ne.gap_a)
      .Add("gap_b", ne.gap_b)
      .Add("certified", ne.certified);
  return r;
}

void AppendNashReport(const NEReport& report, const std::string& correlation,
                      std::optional<double> p, ReportDocument* doc) {
  Record summary("nash_summary");
  if (p) summary.Add("p", *p);
  summary.Add("correlation", correlation)
      .Add("flat", report.flat)
      .Add("unique", report.unique)
      .Add("dilemma", std::string(DilemmaCaseName(report.dilemma)))
      .Add("equilibria", report.equilibria.size());
  if (report.flat_payoffs) {
    summary.Add("payoff_a", report.flat_payoffs->first).Add("payoff_b", report.flat_payoffs->second);
  }
  summary.Add("profiles", report.stats.profiles)
      .Add("grid_equilibria", report.stats.grid_equilibria)
      .Add("refined", report.stats.refined)
      .Add("rejected", report.stats.rejected);
  doc->records.push_back(std::move(summary));
  for (const auto& ne : report.equilibria) {
    Record r = EquilibriumRecord(ne);
    if (p) r.fields.insert(r.fields.begin(), {"p", RoundSignificant(*p)});
    doc->records.push_back(std::move(r));
  }
}

void AppendExtendedMatrix(const ExtendedMatrix& em, ReportDocument* doc) {
  for (std::size_t i = 0; i < em.rows(); ++i) {
    for (std::size_t j = 0; j < em.cols(); ++j) {
      Record r("cell");
      r.Add("row", em.row_ops[i])
          .Add("col", em.col_ops[j])
          .Add("payoff_a", em.cells[i][j].first)
          .Add("payoff_b", em.cells[i][j].second)
          .Add("ne", static_cast<bool>(em.ne_cells[i][j]));
      doc->records.push_back(std::move(r));
    }
  }
}

ReportDocument RunScenario(const ScenarioConfig& cfg) {
  ReportDocument doc;
  Record echo("scenario");
  echo.Add("config", cfg.echo);

  switch (cfg.mode) {
    case ScenarioMode::kPayoffEval: {
      doc.records.push_back(ReportHeader(cfg, "payoffs"));
      doc.records.push_back(echo);
      const CorrelationState state = cfg.correlation->Build(cfg.initial);
      const Realization ra = Realize(*cfg.strategy_a), rb = Realize(*cfg.strategy_b);
      std::array<double, 4> probs{};
      for (int i = 0; i < ra.count; ++i)
        for (int j = 0; j < rb.count; ++j) {
          const OutcomeDistribution d = PlayRound(state, ra.ops[i], rb.ops[j]);
          for (int n = 0; n < 4; ++n) probs[n] += ra.weights[i] * rb.weights[j] * d[n];
        }
      const Payoffs pay = PipelinePayoffs(state, cfg.game, ra, rb);
      Record r("payoffs");
      r.Add("correlation", state.Describe())
          .Add("player_a_params", AnglesOf(*cfg.strategy_a))
          .Add("player_b_params", AnglesOf(*cfg.strategy_b));
      for (int n = 0; n < 4; ++n)
        r.Add(fmt::format("p_{}{}", cfg.game.row_labels[n / 2], cfg.game.col_labels[n % 2]), probs[n]);
      r.Add("payoff_a", pay.first).Add("payoff_b", pay.second);
      doc.records.push_back(std::move(r));
      break;
    }
    case ScenarioMode::kNashSearch: {
      doc.records.push_back(ReportHeader(cfg, "equilibrium"));
      doc.records.push_back(echo);
      const CorrelationState state = cfg.correlation->Build(cfg.initial);
      AppendNashReport(FindNash(cfg.space_a, cfg.space_b, state, cfg.game, cfg.search),
                       state.Describe(), std::nullopt, &doc);
      break;
    }
    case ScenarioMode::kCorruptedSweep: {
      doc.records.push_back(ReportHeader(cfg, "equilibrium"));
      doc.records.push_back(echo);
      const auto reports = CorruptedSweep(cfg.sweep_p, cfg.space_a, cfg.space_b, cfg.game, cfg.search);
      for (std::size_t k = 0; k < reports.size(); ++k)
        AppendNashReport(reports[k], CorrelationState::Corrupted(cfg.sweep_p[k]).Describe(),
                         cfg.sweep_p[k], &doc);
      break;
    }
    case ScenarioMode::kExtendedMatrix: {
      doc.records.push_back(ReportHeader(cfg, "cell"));
      doc.records.push_back(echo);
      const CorrelationState state = cfg.correlation->Build(cfg.initial);
      AppendExtendedMatrix(
          BuildExtendedMatrix(cfg.game, cfg.extra_a, cfg.extra_b, state, cfg.initial), &doc);
      break;
    }
    case ScenarioMode::kClassicalAnalysis: {
      doc.records.push_back(ReportHeader(cfg, "mixed_ne"));
      doc.records.push_back(echo);
      const GameClassification c = Classify(cfg.game);
      Record cls("classification");
      cls.Add("symmetric", c.symmetric).Add("zero_sum", c.zero_sum).Add("coordination", c.coordination);
      doc.records.push_back(std::move(cls));
      for (const PureProfile& p : PureNash(cfg.game)) {
        Record r("pure_ne");
        r.Add("row", cfg.game.row_labels[p.row])
            .Add("col", cfg.game.col_labels[p.col])
            .Add("payoff_a", cfg.game.AliceAt(p.row, p.col))
            .Add("payoff_b", cfg.game.BobAt(p.row, p.col));
        doc.records.push_back(std::move(r));
      }
      const MixedNashResult mixed = MixedNash2x2(cfg.game);
      if (mixed.interior) {
        const bool unique = mixed.pure.empty();
        Record r("mixed_ne");
        r.Add("p", mixed.interior->p)
            .Add("q", mixed.interior->q)
            .Add("payoff_a", mixed.payoffs.first)
            .Add("payoff_b", mixed.payoffs.second)
            .Add("unique", unique)
            .Add("dilemma", std::string(DilemmaCaseName(GetDilemmaCase(mixed.payoffs, unique))));
        doc.records.push_back(std::move(r));
      }
      break;
    }
  }
  return doc;
}

}  // namespace qgame
