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

#ifndef QGAME_PAYOFF_KERNEL_H_
#define QGAME_PAYOFF_KERNEL_H_

#include <array>

#include "qgame/game.h"
#include "qgame/linalg.h"
#include "qgame/protocol.h"
#include "qgame/strategy.h"

namespace qgame {

// With the opponent's strategy fixed, a player's expected payoff is a
// Hermitian quadratic form in the four entries of their own operator:
//   $ = sum_{m,m'} u_m Q(m,m') conj(u_m'),  u = (u00, u01, u10, u11).
// Building Q costs a handful of 4x4 products; evaluating it is 16 complex
// multiplies, which is what makes exhaustive grid scans affordable. The
// reference path is PlayRound; tests pin the two together.
class PayoffKernel {
 public:
  // Quadratic forms for `player`'s payoff and the opponent's payoff, both as
  // functions of `player`'s own operator.
  PayoffKernel(const CorrelationState& state, const PayoffMatrix2x2& m, Player player,
               const Realization& opponent);

  // Payoffs (own, opponent) for the given own strategy.
  std::pair<double, double> Evaluate(const Realization& own) const;
  double EvaluateOwn(const Realization& own) const;

 private:
  Eigen::Matrix4cd own_form_;
  Eigen::Matrix4cd opponent_form_;
};

// Full payoff pair (Alice, Bob) through the reference pipeline, with
// mixtures expanded term by term.
Payoffs PipelinePayoffs(const CorrelationState& state, const PayoffMatrix2x2& m,
                        const Realization& a, const Realization& b);

}  // namespace qgame

#endif  // QGAME_PAYOFF_KERNEL_H_
