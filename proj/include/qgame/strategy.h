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

#ifndef QGAME_STRATEGY_H_
#define QGAME_STRATEGY_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgame/linalg.h"
#include "qgame/protocol.h"

namespace qgame {

enum class StrategySpace {
  kClassicalPure,   // sigma_0 or i sigma_y
  kClassicalMixed,  // sigma_0 with probability p, i sigma_y otherwise
  kSu2One,          // U(theta)
  kSu2Two,          // U(theta, phi)
  kSu2Three,        // U(theta, phi, varphi)
};

std::string_view StrategySpaceName(StrategySpace s);
std::optional<StrategySpace> ParseStrategySpace(std::string_view s);

// Number of continuous parameters; kClassicalPure has none (a binary choice).
int FreeParameterCount(StrategySpace s);

enum class Player { kAlice, kBob };

inline constexpr double kPi = 3.14159265358979323846;

// Range of the i-th free parameter of a space: theta in [0, pi];
// phi, varphi in [0, pi/2]; p in [0, 1].
struct ParameterRange {
  double lo = 0.0;
  double hi = 0.0;
};
ParameterRange FreeParameterRange(StrategySpace s, int index);

// A point of one strategy space. Only the fields that belong to `space` are
// meaningful; the factories enforce ranges and zero the rest.
struct StrategyParams {
  StrategySpace space = StrategySpace::kSu2One;
  double theta = 0.0;
  double phi = 0.0;
  double varphi = 0.0;
  double p = 1.0;
  int pure_move = 0;  // 0 -> sigma_0, 1 -> i sigma_y

  static StrategyParams Pure(int move);
  static StrategyParams Mixed(double p);
  static StrategyParams Su2One(double theta);
  static StrategyParams Su2Two(double theta, double phi);
  static StrategyParams Su2Three(double theta, double phi, double varphi);

  // Free parameters in canonical order (theta, phi, varphi) or (p).
  std::vector<double> Free() const;
  // Same space, free parameters replaced (clamped into range).
  StrategyParams WithFree(std::span<const double> values) const;

  std::string Describe() const;
  bool operator==(const StrategyParams&) const = default;
};

enum class ClassicalOp { kIdentity, kFlip };

Operator2 ClassicalOpMatrix(ClassicalOp op);

// [[e^{i phi} cos(theta/2), e^{i varphi} sin(theta/2)],
//  [-e^{-i varphi} sin(theta/2), e^{-i phi} cos(theta/2)]]
// with the parameters a space does not have pinned to zero.
// Throws Error(kMixedHasNoMatrix) for kClassicalMixed.
Operator2 ToMatrix(const StrategyParams& params);

// A strategy as a probability mixture of at most two unitaries. Every space
// realizes as a single operator except kClassicalMixed.
struct Realization {
  std::array<Operator2, 2> ops;
  std::array<double, 2> weights{1.0, 0.0};
  int count = 1;
};
Realization Realize(const StrategyParams& params);

// Operator a player must apply so that `move_label` is what the referee
// measures, given the initial product state. Alice's labels are A and N,
// Bob's W and L. The identity realizes a move whose bit equals the
// player's initial bit; otherwise the flip does.
// Throws Error(kUnknownLabel).
ClassicalOp ClassicalEmbedding(std::string_view move_label, ProductState initial);
// Same rule by position: move 0 is row/column 0 of the payoff matrix.
ClassicalOp ClassicalEmbedding(Player player, int move, ProductState initial);

// Uniform inclusive grid over every free parameter (theta outermost).
// kClassicalPure yields both moves. Throws Error(kBadResolution) when
// resolution < 2.
std::vector<StrategyParams> Grid(StrategySpace space, int resolution);

// sqrt(1 - |tr(u^dagger v)| / 2): zero exactly when u and v differ by a
// global phase. Throws Error(kNonUnitary).
double OperatorDistance(const Operator2& u, const Operator2& v);

// Phase-invariant distance between two strategies of the same space; for
// kClassicalMixed this is |p - p'|.
double StrategyDistance(const StrategyParams& a, const StrategyParams& b);

}  // namespace qgame

#endif  // QGAME_STRATEGY_H_
