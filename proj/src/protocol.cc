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

#include "qgame/protocol.h"

#include <cmath>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/tolerances.h"

namespace qgame {

ProductState ProductState::Make(int f, int g) {
  if ((f != 0 && f != 1) || (g != 0 && g != 1))
    throw Error(ErrorCode::kBadParameter, fmt::format("initial state |{}{}> is not a product of bits", f, g));
  return {f, g};
}

std::string ProductState::Ket() const { return fmt::format("|{}{}>", f, g); }

Operator4 BuildEntangler() {
  const double r = 1.0 / std::sqrt(2.0);
  Operator4 j = Operator4::Zero();
  for (int f = 0; f < 2; ++f) {
    for (int g = 0; g < 2; ++g) {
      const int col = 2 * f + g;
      const int flipped = 2 * (1 - f) + (1 - g);
      const double sign = (f + g) % 2 == 0 ? 1.0 : -1.0;
      j(col, col) += r;
      j(flipped, col) += kI * sign * r;
    }
  }
  return j;
}

namespace {

const Operator4& Entangler() {
  static const Operator4 j = BuildEntangler();
  return j;
}

DensityMatrix EntangledFrom(ProductState s) {
  return ConjugateBy(DensityMatrix::BasisState(s.Index()), Entangler());
}

}  // namespace

CorrelationState CorrelationState::Mes(ProductState s) {
  return {EntangledFrom(s), CorrelationKind::kMes, s, 1.0};
}

CorrelationState CorrelationState::Dephased(ProductState s) {
  return {EntangledFrom(s).Dephased(), CorrelationKind::kDephased, s, 1.0};
}

CorrelationState CorrelationState::FullRank() {
  return {DensityMatrix::MaximallyMixed(), CorrelationKind::kFullRank, {}, 1.0};
}

CorrelationState CorrelationState::Corrupted(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::kBadProbability, fmt::format("source probability {} outside [0, 1]", p));
  const DensityMatrix rho = EntangledFrom({0, 0}).Mix(EntangledFrom({0, 1}), p);
  return {rho, CorrelationKind::kCorrupted, {}, p};
}

std::string CorrelationKindName(CorrelationKind k) {
  switch (k) {
    case CorrelationKind::kMes: return "mes";
    case CorrelationKind::kDephased: return "dephased";
    case CorrelationKind::kFullRank: return "full_rank";
    case CorrelationKind::kCorrupted: return "corrupted";
  }
  return "?";
}

std::string CorrelationState::Describe() const {
  switch (kind) {
    case CorrelationKind::kMes:
    case CorrelationKind::kDephased:
      return fmt::format("{}({}{})", CorrelationKindName(kind), initial.f, initial.g);
    case CorrelationKind::kFullRank: return "full_rank";
    case CorrelationKind::kCorrupted: return fmt::format("corrupted(p={:.12g})", p);
  }
  return "?";
}

void OutcomeDistribution::Validate() const {
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0))
      throw Error(ErrorCode::kNotNormalized, fmt::format("outcome probability {} outside [0, 1]", x));
  }
  if (std::abs(Sum() - 1.0) > Tolerances::kNorm)
    throw Error(ErrorCode::kNotNormalized, fmt::format("outcome probabilities sum to {:.12g}", Sum()));
}

OutcomeDistribution PlayRound(const CorrelationState& state, const Operator2& ua,
                              const Operator2& ub) {
  const DensityMatrix out = ConjugateBy(state.rho, TensorProduct(ua, ub));
  const DensityMatrix measured = ConjugateBy(out, Entangler().adjoint());
  return {DiagonalProbabilities(measured)};
}

Payoffs ExpectedPayoffs(const OutcomeDistribution& dist, const PayoffMatrix2x2& m) {
  double pa = 0.0, pb = 0.0;
  for (int n = 0; n < 4; ++n) {
    pa += m.alice[n] * dist[n];
    pb += m.bob[n] * dist[n];
  }
  return {pa, pb};
}

OutcomeDistribution PlayRoundMixedBob(const CorrelationState& state, const Operator2& ua,
                                      double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorCode::kBadProbability, fmt::format("Bob's mixing probability {} outside [0, 1]", p));
  const OutcomeDistribution keep = PlayRound(state, ua, pauli::Identity());
  const OutcomeDistribution flip = PlayRound(state, ua, pauli::IY());
  OutcomeDistribution out;
  for (int n = 0; n < 4; ++n) out.p[n] = p * keep[n] + (1.0 - p) * flip[n];
  return out;
}

}  // namespace qgame
