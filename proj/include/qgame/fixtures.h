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

#ifndef QGAME_FIXTURES_H_
#define QGAME_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/equilibrium.h"
#include "qgame/report.h"

namespace qgame {

struct Comparison {
  std::string quantity;
  std::string location;  // where the expected value is stated
  FieldValue expected;
  FieldValue actual;
  std::optional<double> deviation;  // numeric comparisons only
  std::optional<double> tolerance;
  bool pass = false;
};

struct FixtureInfo {
  std::string id;
  std::string title;
  std::string location;
};

struct FixtureOutcome {
  FixtureInfo info;
  std::vector<Comparison> comparisons;
  bool passed() const;
  std::size_t failures() const;
};

// Embedded reproduction targets in a fixed order.
std::vector<FixtureInfo> ListFixtures();

// Runs one target. `base` supplies search settings (threads, resolution);
// fixtures never loosen their own tolerances. Throws Error(kUnknownFixture).
FixtureOutcome RunFixture(std::string_view id, const SearchConfig& base = {});

ReportDocument FixtureReport(const FixtureOutcome& outcome);

// Named operators used by the extended matrices and fixture tables, e.g.
// "T" = (sigma_0 + i sigma_y)/sqrt2, "S" = i(cos(pi/8) sigma_z + sin(pi/8) sigma_y).
// Throws Error(kUnknownLabel).
NamedOperator ReferenceOperator(std::string_view name);

// Rotation angle between two SU(2) elements modulo global phase:
// 2 acos(|tr(u^dagger v)| / 2). For U(theta) against U(theta') it is
// |theta - theta'|.
double RotationAngle(const Operator2& u, const Operator2& v);

}  // namespace qgame

#endif  // QGAME_FIXTURES_H_
