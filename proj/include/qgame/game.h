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

#ifndef QGAME_GAME_H_
#define QGAME_GAME_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgame {

// A two-player, two-move game. Cells are ordered row-major:
// (row0,col0), (row0,col1), (row1,col0), (row1,col1), which for the
// quantized protocol is also the measurement outcome order n = 2j + l.
struct PayoffMatrix2x2 {
  std::array<double, 4> alice{};  // (a, b, c, d)
  std::array<double, 4> bob{};    // (w, x, y, z)
  std::array<std::string, 2> row_labels{"R0", "R1"};
  std::array<std::string, 2> col_labels{"C0", "C1"};

  // Throws Error(kConfigError) on non-finite entries or repeated labels.
  void Validate() const;

  double AliceAt(int row, int col) const { return alice[2 * row + col]; }
  double BobAt(int row, int col) const { return bob[2 * row + col]; }

  bool operator==(const PayoffMatrix2x2&) const = default;
};

// Samaritan's dilemma: Alice Aid/No aid, Bob Work/Loaf.
PayoffMatrix2x2 WelfareGame();

struct GameClassification {
  bool symmetric = false;
  bool zero_sum = false;
  // At least one pure-strategy equilibrium.
  bool coordination = false;

  bool operator==(const GameClassification&) const = default;
};

struct PureProfile {
  int row = 0;
  int col = 0;
  bool operator==(const PureProfile&) const = default;
};

// p: probability Alice plays row 0; q: probability Bob plays column 0.
struct MixedProfile {
  double p = 0.0;
  double q = 0.0;
};

using Payoffs = std::pair<double, double>;

enum class DilemmaCase { kCaseI, kCaseII, kCaseIII, kNotApplicable };

std::string_view DilemmaCaseName(DilemmaCase c);
// Inverse of DilemmaCaseName; also accepts "I", "II", "III", "n.a".
std::optional<DilemmaCase> ParseDilemmaCase(std::string_view s);

GameClassification Classify(const PayoffMatrix2x2& m);

// Every cell that is a mutual best response. Ties count as best responses.
std::vector<PureProfile> PureNash(const PayoffMatrix2x2& m);

// Bilinear expectation of both payoffs. Throws Error(kBadProbability) for
// p or q outside [0, 1].
Payoffs MixedPayoffs(const PayoffMatrix2x2& m, const MixedProfile& profile);

struct MixedNashResult {
  // Present when both indifference solutions lie strictly inside (0, 1).
  std::optional<MixedProfile> interior;
  Payoffs payoffs{0.0, 0.0};  // payoffs at `interior` when present
  // Pure equilibria, reported whether or not an interior point exists.
  std::vector<PureProfile> pure;
};

// Closed-form 2x2 analysis: each player's mixing probability is the one that
// makes the opponent indifferent. Throws Error(kDegenerate) when an
// indifference equation holds identically, i.e. a whole direction is flat.
MixedNashResult MixedNash2x2(const PayoffMatrix2x2& m);

// CASE I: $A < 0; CASE II: 0 <= $A <= $B; CASE III: 0 <= $B < $A.
// kNotApplicable when the equilibrium is not unique.
DilemmaCase GetDilemmaCase(const Payoffs& payoffs, bool unique_ne);

struct CommunicationCost {
  int cbits = 0;
  int ebits = 0;
  bool operator==(const CommunicationCost&) const = default;
};

// Classical bits needed to announce one of n_a / n_b strategies to the
// referee, versus the two e-bits the entangled protocol consumes.
CommunicationCost GetCommunicationCost(int n_a, int n_b);

}  // namespace qgame

#endif  // QGAME_GAME_H_
