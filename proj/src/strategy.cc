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

#include "qgame/strategy.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/tolerances.h"

namespace qgame {
namespace {

// Slack allowed when validating caller-supplied parameters; values inside
// the slack are clamped onto the range.
constexpr double kRangeSlack = 1e-12;

double CheckedInRange(double v, ParameterRange r, const char* name) {
  if (!std::isfinite(v) || v < r.lo - kRangeSlack || v > r.hi + kRangeSlack) {
    throw Error(ErrorCode::kBadParameter,
                fmt::format("{} = {} outside [{}, {}]", name, v, r.lo, r.hi));
  }
  return std::clamp(v, r.lo, r.hi);
}

constexpr ParameterRange kThetaRange{0.0, kPi};
constexpr ParameterRange kPhaseRange{0.0, kPi / 2.0};
constexpr ParameterRange kProbRange{0.0, 1.0};

}  // namespace

std::string_view StrategySpaceName(StrategySpace s) {
  switch (s) {
    case StrategySpace::kClassicalPure: return "classical_pure";
    case StrategySpace::kClassicalMixed: return "classical_mixed";
    case StrategySpace::kSu2One: return "su2_one";
    case StrategySpace::kSu2Two: return "su2_two";
    case StrategySpace::kSu2Three: return "su2_three";
  }
  return "?";
}

std::optional<StrategySpace> ParseStrategySpace(std::string_view s) {
  for (auto sp : {StrategySpace::kClassicalPure, StrategySpace::kClassicalMixed,
                  StrategySpace::kSu2One, StrategySpace::kSu2Two, StrategySpace::kSu2Three}) {
    if (StrategySpaceName(sp) == s) return sp;
  }
  return std::nullopt;
}

int FreeParameterCount(StrategySpace s) {
  switch (s) {
    case StrategySpace::kClassicalPure: return 0;
    case StrategySpace::kClassicalMixed: return 1;
    case StrategySpace::kSu2One: return 1;
    case StrategySpace::kSu2Two: return 2;
    case StrategySpace::kSu2Three: return 3;
  }
  return 0;
}

ParameterRange FreeParameterRange(StrategySpace s, int index) {
  if (index < 0 || index >= FreeParameterCount(s))
    throw Error(ErrorCode::kBadParameter,
                fmt::format("{} has no parameter {}", StrategySpaceName(s), index));
  if (s == StrategySpace::kClassicalMixed) return kProbRange;
  return index == 0 ? kThetaRange : kPhaseRange;
}

StrategyParams StrategyParams::Pure(int move) {
  if (move != 0 && move != 1)
    throw Error(ErrorCode::kBadParameter, fmt::format("pure move {} is not 0 or 1", move));
  StrategyParams s;
  s.space = StrategySpace::kClassicalPure;
  s.pure_move = move;
  return s;
}

StrategyParams StrategyParams::Mixed(double p) {
  StrategyParams s;
  s.space = StrategySpace::kClassicalMixed;
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::kBadProbability, fmt::format("mixing probability {} outside [0, 1]", p));
  s.p = p;
  return s;
}

StrategyParams StrategyParams::Su2One(double theta) {
  StrategyParams s;
  s.space = StrategySpace::kSu2One;
  s.theta = CheckedInRange(theta, kThetaRange, "theta");
  return s;
}

StrategyParams StrategyParams::Su2Two(double theta, double phi) {
  StrategyParams s = Su2One(theta);
  s.space = StrategySpace::kSu2Two;
  s.phi = CheckedInRange(phi, kPhaseRange, "phi");
  return s;
}

StrategyParams StrategyParams::Su2Three(double theta, double phi, double varphi) {
  StrategyParams s = Su2Two(theta, phi);
  s.space = StrategySpace::kSu2Three;
  s.varphi = CheckedInRange(varphi, kPhaseRange, "varphi");
  return s;
}

std::vector<double> StrategyParams::Free() const {
  switch (space) {
    case StrategySpace::kClassicalPure: return {};
    case StrategySpace::kClassicalMixed: return {p};
    case StrategySpace::kSu2One: return {theta};
    case StrategySpace::kSu2Two: return {theta, phi};
    case StrategySpace::kSu2Three: return {theta, phi, varphi};
  }
  return {};
}

StrategyParams StrategyParams::WithFree(std::span<const double> values) const {
  const int n = FreeParameterCount(space);
  if (static_cast<int>(values.size()) != n)
    throw Error(ErrorCode::kBadParameter,
                fmt::format("{} takes {} parameters, got {}", StrategySpaceName(space), n,
                            values.size()));
  std::array<double, 3> v{};
  for (int i = 0; i < n; ++i) {
    const ParameterRange r = FreeParameterRange(space, i);
    v[i] = std::clamp(values[i], r.lo, r.hi);
  }
  switch (space) {
    case StrategySpace::kClassicalPure: return *this;
    case StrategySpace::kClassicalMixed: return Mixed(v[0]);
    case StrategySpace::kSu2One: return Su2One(v[0]);
    case StrategySpace::kSu2Two: return Su2Two(v[0], v[1]);
    case StrategySpace::kSu2Three: return Su2Three(v[0], v[1], v[2]);
  }
  return *this;
}

std::string StrategyParams::Describe() const {
  switch (space) {
    case StrategySpace::kClassicalPure:
      return pure_move == 0 ? "pure(identity)" : "pure(flip)";
    case StrategySpace::kClassicalMixed:
      return fmt::format("mixed(p={:.12g})", p);
    case StrategySpace::kSu2One:
      return fmt::format("su2_one(theta={:.12g})", theta);
    case StrategySpace::kSu2Two:
      return fmt::format("su2_two(theta={:.12g};phi={:.12g})", theta, phi);
    case StrategySpace::kSu2Three:
      return fmt::format("su2_three(theta={:.12g};phi={:.12g};varphi={:.12g})", theta, phi,
                         varphi);
  }
  return "?";
}

Operator2 ClassicalOpMatrix(ClassicalOp op) {
  return op == ClassicalOp::kIdentity ? pauli::Identity() : pauli::IY();
}

Operator2 ToMatrix(const StrategyParams& params) {
  switch (params.space) {
    case StrategySpace::kClassicalPure:
      return ClassicalOpMatrix(params.pure_move == 0 ? ClassicalOp::kIdentity : ClassicalOp::kFlip);
    case StrategySpace::kClassicalMixed:
      throw Error(ErrorCode::kMixedHasNoMatrix, "a classical mixture is not a single operator");
    default:
      break;
  }
  const double c = std::cos(params.theta / 2.0), s = std::sin(params.theta / 2.0);
  const Complex e_phi = std::polar(1.0, params.phi);
  const Complex e_var = std::polar(1.0, params.varphi);
  Operator2 u;
  u << e_phi * c, e_var * s, -std::conj(e_var) * s, std::conj(e_phi) * c;
  return u;
}

Realization Realize(const StrategyParams& params) {
  Realization r;
  if (params.space == StrategySpace::kClassicalMixed) {
    r.ops = {pauli::Identity(), pauli::IY()};
    r.weights = {params.p, 1.0 - params.p};
    r.count = 2;
  } else {
    r.ops[0] = ToMatrix(params);
  }
  return r;
}

ClassicalOp ClassicalEmbedding(Player player, int move, ProductState initial) {
  if (move != 0 && move != 1)
    throw Error(ErrorCode::kUnknownLabel, fmt::format("move index {} is not 0 or 1", move));
  const int bit = player == Player::kAlice ? initial.f : initial.g;
  return move == bit ? ClassicalOp::kIdentity : ClassicalOp::kFlip;
}

ClassicalOp ClassicalEmbedding(std::string_view move_label, ProductState initial) {
  if (move_label == "A") return ClassicalEmbedding(Player::kAlice, 0, initial);
  if (move_label == "N") return ClassicalEmbedding(Player::kAlice, 1, initial);
  if (move_label == "W") return ClassicalEmbedding(Player::kBob, 0, initial);
  if (move_label == "L") return ClassicalEmbedding(Player::kBob, 1, initial);
  throw Error(ErrorCode::kUnknownLabel, fmt::format("unknown move label '{}'", move_label));
}

std::vector<StrategyParams> Grid(StrategySpace space, int resolution) {
  if (resolution < 2)
    throw Error(ErrorCode::kBadResolution, fmt::format("grid resolution {} < 2", resolution));
  if (space == StrategySpace::kClassicalPure) return {StrategyParams::Pure(0), StrategyParams::Pure(1)};

  const int n = FreeParameterCount(space);
  std::vector<std::vector<double>> axes(n);
  for (int i = 0; i < n; ++i) {
    const ParameterRange r = FreeParameterRange(space, i);
    axes[i].resize(resolution);
    for (int k = 0; k < resolution; ++k)
      axes[i][k] = k == resolution - 1 ? r.hi : r.lo + (r.hi - r.lo) * k / (resolution - 1);
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= resolution;

  std::vector<StrategyParams> out;
  out.reserve(total);
  StrategyParams base;
  base.space = space;
  std::vector<double> v(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int i = n - 1; i >= 0; --i) {
      v[i] = axes[i][rem % resolution];
      rem /= resolution;
    }
    out.push_back(base.WithFree(v));
  }
  return out;
}

double OperatorDistance(const Operator2& u, const Operator2& v) {
  if (UnitarityDefect(u) > Tolerances::kUnitarityCheck || UnitarityDefect(v) > Tolerances::kUnitarityCheck)
    throw Error(ErrorCode::kNonUnitary, "operator_distance needs unitary arguments");
  const double overlap = std::abs((u.adjoint() * v).trace()) / 2.0;
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

double StrategyDistance(const StrategyParams& a, const StrategyParams& b) {
  if (a.space == StrategySpace::kClassicalMixed || b.space == StrategySpace::kClassicalMixed) {
    if (a.space != b.space) return 1.0;
    return std::abs(a.p - b.p);
  }
  return OperatorDistance(ToMatrix(a), ToMatrix(b));
}

}  // namespace qgame
