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

#include "qgame/game.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include <fmt/format.h>

#include "qgame/errors.h"

namespace qgame {

void PayoffMatrix2x2::Validate() const {
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(alice[i]) || !std::isfinite(bob[i]))
      throw Error(ErrorCode::kConfigError, fmt::format("payoff entry {} is not finite", i));
  }
  if (row_labels[0] == row_labels[1])
    throw Error(ErrorCode::kConfigError, "row labels must be distinct");
  if (col_labels[0] == col_labels[1])
    throw Error(ErrorCode::kConfigError, "column labels must be distinct");
}

PayoffMatrix2x2 WelfareGame() {
  return PayoffMatrix2x2{{3.0, -1.0, -1.0, 0.0}, {2.0, 3.0, 1.0, 0.0}, {"A", "N"}, {"W", "L"}};
}

std::string_view DilemmaCaseName(DilemmaCase c) {
  switch (c) {
    case DilemmaCase::kCaseI: return "CASE_I";
    case DilemmaCase::kCaseII: return "CASE_II";
    case DilemmaCase::kCaseIII: return "CASE_III";
    case DilemmaCase::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

std::optional<DilemmaCase> ParseDilemmaCase(std::string_view s) {
  if (s == "CASE_I" || s == "I") return DilemmaCase::kCaseI;
  if (s == "CASE_II" || s == "II") return DilemmaCase::kCaseII;
  if (s == "CASE_III" || s == "III") return DilemmaCase::kCaseIII;
  if (s == "NOT_APPLICABLE" || s == "n.a") return DilemmaCase::kNotApplicable;
  return std::nullopt;
}

GameClassification Classify(const PayoffMatrix2x2& m) {
  const auto& [a, b, c, d] = m.alice;
  const auto& [w, x, y, z] = m.bob;
  GameClassification out;
  out.symmetric = a == w && b == y && x == c && d == z;
  out.zero_sum = a + w == 0.0 && b + x == 0.0 && c + y == 0.0 && d + z == 0.0;
  out.coordination = !PureNash(m).empty();
  return out;
}

std::vector<PureProfile> PureNash(const PayoffMatrix2x2& m) {
  std::vector<PureProfile> out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const bool alice_best = m.AliceAt(r, c) >= m.AliceAt(1 - r, c);
      const bool bob_best = m.BobAt(r, c) >= m.BobAt(r, 1 - c);
      if (alice_best && bob_best) out.push_back({r, c});
    }
  }
  return out;
}

Payoffs MixedPayoffs(const PayoffMatrix2x2& m, const MixedProfile& profile) {
  const double p = profile.p, q = profile.q;
  if (!(p >= 0.0 && p <= 1.0 && q >= 0.0 && q <= 1.0))
    throw Error(ErrorCode::kBadProbability, fmt::format("profile ({}, {}) outside [0,1]^2", p, q));
  const std::array<double, 4> w{p * q, p * (1.0 - q), (1.0 - p) * q, (1.0 - p) * (1.0 - q)};
  double pa = 0.0, pb = 0.0;
  for (int i = 0; i < 4; ++i) {
    pa += w[i] * m.alice[i];
    pb += w[i] * m.bob[i];
  }
  return {pa, pb};
}

namespace {

// Solves num = denom * t for the opponent's mixing probability t. Returns
// nullopt when no solution exists; throws when every t solves it.
std::optional<double> SolveIndifference(double num, double denom, double scale,
                                        const char* who) {
  const double tol = 1e-12 * std::max(1.0, scale);
  if (std::abs(denom) <= tol) {
    if (std::abs(num) <= tol)
      throw Error(ErrorCode::kDegenerate,
                  fmt::format("{} is indifferent for every opponent mixture", who));
    return std::nullopt;
  }
  return num / denom;
}

}  // namespace

MixedNashResult MixedNash2x2(const PayoffMatrix2x2& m) {
  const auto& [a, b, c, d] = m.alice;
  const auto& [w, x, y, z] = m.bob;
  double scale = 0.0;
  for (int i = 0; i < 4; ++i)
    scale = std::max({scale, std::abs(m.alice[i]), std::abs(m.bob[i])});

  MixedNashResult out;
  out.pure = PureNash(m);
  // Alice indifferent between rows: a q + b (1-q) = c q + d (1-q).
  const auto q = SolveIndifference(d - b, a - b - c + d, scale, "Alice");
  // Bob indifferent between columns: w p + y (1-p) = x p + z (1-p).
  const auto p = SolveIndifference(z - y, w - x - y + z, scale, "Bob");
  if (p && q && *p > 0.0 && *p < 1.0 && *q > 0.0 && *q < 1.0) {
    out.interior = MixedProfile{*p, *q};
    out.payoffs = MixedPayoffs(m, *out.interior);
  }
  return out;
}

DilemmaCase GetDilemmaCase(const Payoffs& payoffs, bool unique_ne) {
  if (!unique_ne) return DilemmaCase::kNotApplicable;
  const auto [pa, pb] = payoffs;
  if (pa < 0.0) return DilemmaCase::kCaseI;
  if (pa <= pb) return DilemmaCase::kCaseII;
  if (pb >= 0.0) return DilemmaCase::kCaseIII;
  // $A >= 0 > $B falls outside all three grades.
  return DilemmaCase::kNotApplicable;
}

CommunicationCost GetCommunicationCost(int n_a, int n_b) {
  if (n_a < 2 || n_b < 2)
    throw Error(ErrorCode::kBadParameter,
                fmt::format("strategy counts ({}, {}) must be at least 2", n_a, n_b));
  auto bits = [](int n) { return static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1))); };
  return {bits(n_a) + bits(n_b), 2};
}

}  // namespace qgame
