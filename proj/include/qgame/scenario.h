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

#ifndef QGAME_SCENARIO_H_
#define QGAME_SCENARIO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/equilibrium.h"
#include "qgame/game.h"
#include "qgame/protocol.h"
#include "qgame/report.h"
#include "qgame/strategy.h"

namespace qgame {

enum class ScenarioMode {
  kPayoffEval,
  kNashSearch,
  kCorruptedSweep,
  kExtendedMatrix,
  kClassicalAnalysis,
};

std::string_view ScenarioModeName(ScenarioMode m);
std::optional<ScenarioMode> ParseScenarioMode(std::string_view s);

struct CorrelationSpec {
  CorrelationKind kind = CorrelationKind::kMes;
  double p = 1.0;  // kCorrupted only

  CorrelationState Build(ProductState initial) const;
};

struct ScenarioConfig {
  std::string name;
  ScenarioMode mode = ScenarioMode::kNashSearch;
  PayoffMatrix2x2 game = WelfareGame();
  ProductState initial;
  std::optional<CorrelationSpec> correlation;
  StrategySpace space_a = StrategySpace::kSu2Two;
  StrategySpace space_b = StrategySpace::kSu2Two;
  std::optional<StrategyParams> strategy_a;  // payoff_eval
  std::optional<StrategyParams> strategy_b;
  SearchConfig search;
  std::vector<double> sweep_p;               // corrupted_sweep
  std::vector<NamedOperator> extra_a;        // extended_matrix
  std::vector<NamedOperator> extra_b;
  // The parsed document re-emitted; loading it again yields this config.
  std::string echo;
};

// Parses a YAML scenario. `schema_version: 1` is mandatory, unknown keys and
// keys the chosen mode does not use are rejected. Throws Error(kConfigError).
ScenarioConfig ParseScenario(std::string_view yaml_text);
ScenarioConfig LoadScenarioFile(const std::string& path);

// Operator given as a unit quaternion a0 sigma_0 + i (ax sigma_x + ay sigma_y
// + az sigma_z); the coefficients are normalized. Throws Error(kConfigError)
// for the zero vector.
Operator2 QuaternionOperator(double a0, double ax, double ay, double az);

// Runs the scenario. Propagates Error(kSearchBudgetExceeded).
ReportDocument RunScenario(const ScenarioConfig& cfg);

// Report fragments shared with the fixture harness.
Record EquilibriumRecord(const CandidateNE& ne);
void AppendNashReport(const NEReport& report, const std::string& correlation,
                      std::optional<double> p, ReportDocument* doc);
void AppendExtendedMatrix(const ExtendedMatrix& em, ReportDocument* doc);

}  // namespace qgame

#endif  // QGAME_SCENARIO_H_
