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

#ifndef QGAME_PROTOCOL_H_
#define QGAME_PROTOCOL_H_

#include <array>
#include <string>

#include "qgame/game.h"
#include "qgame/linalg.h"

namespace qgame {

// Initial product state |fg> handed to the entangler.
struct ProductState {
  int f = 0;
  int g = 0;

  // Throws Error(kBadParameter) unless f, g are bits.
  static ProductState Make(int f, int g);
  int Index() const { return 2 * f + g; }
  std::string Ket() const;  // "|01>"
  bool operator==(const ProductState&) const = default;
};

// The fixed entangler: J|fg> = (|fg> + i (-1)^(f+g) |(1-f)(1-g)>) / sqrt(2).
Operator4 BuildEntangler();

enum class CorrelationKind { kMes, kDephased, kFullRank, kCorrupted };

// The shared two-qubit state rho_in together with how it was produced.
struct CorrelationState {
  DensityMatrix rho = DensityMatrix::MaximallyMixed();
  CorrelationKind kind = CorrelationKind::kFullRank;
  ProductState initial;  // kMes, kDephased
  double p = 1.0;        // kCorrupted: weight of the |00> source

  static CorrelationState Mes(ProductState s);
  // Mes(s) with every off-diagonal element removed (fully phase-damped).
  static CorrelationState Dephased(ProductState s);
  static CorrelationState FullRank();
  // p Mes(|00>) + (1-p) Mes(|01>). Throws Error(kBadProbability).
  static CorrelationState Corrupted(double p);

  std::string Describe() const;
};

std::string CorrelationKindName(CorrelationKind k);

// Probabilities of the referee's outcomes n = 2j + l, i.e. the cells
// (AW, AL, NW, NL) of the payoff matrix.
struct OutcomeDistribution {
  std::array<double, 4> p{};

  double operator[](int n) const { return p[n]; }
  double Sum() const { return p[0] + p[1] + p[2] + p[3]; }
  // Throws Error(kNotNormalized) when an entry leaves [0,1] or the sum is
  // further than kNorm from one.
  void Validate() const;
};

// rho_out = (ua (x) ub) rho_in (ua (x) ub)^dagger, then J^dagger rho_out J is
// measured in the computational basis. Throws Error(kNonUnitary).
OutcomeDistribution PlayRound(const CorrelationState& state, const Operator2& ua,
                              const Operator2& ub);

// Sum_n payoff_n P_n for both players.
Payoffs ExpectedPayoffs(const OutcomeDistribution& dist, const PayoffMatrix2x2& m);

// Bob applies sigma_0 with probability p and i sigma_y otherwise.
OutcomeDistribution PlayRoundMixedBob(const CorrelationState& state, const Operator2& ua,
                                      double p);

}  // namespace qgame

#endif  // QGAME_PROTOCOL_H_
