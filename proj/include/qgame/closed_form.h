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

#ifndef QGAME_CLOSED_FORM_H_
#define QGAME_CLOSED_FORM_H_

#include "qgame/game.h"
#include "qgame/protocol.h"

// Analytic payoff and probability expressions for the Welfare game under
// specific correlations. They share no code with PlayRound and exist so the
// simulator can be checked against independent algebra.
namespace qgame::closed_form {

// MES(|00>), both players one-parameter operators U(theta).
//   $A = [1 + 3(cA + cB) + 5 cA cB] / 4,  $B = [3 + 2 cA - cA cB] / 2
// with cX = cos(theta_X).
Payoffs OneParam(double theta_a, double theta_b);

// MES(|00>), both players two-parameter operators U(theta, phi).
OutcomeDistribution TwoParamProbs(double theta_a, double phi_a, double theta_b, double phi_b);

enum class DephasedVariant {
  k00,  // (|00><00| + |11><11|) / 2
  k01,  // (|01><01| + |10><10|) / 2
};

// Two-parameter operators against a fully dephased MES, Welfare payoffs.
// For k01 every sign of the k00 expression flips except the one inside
// sin(phi_a + phi_b):
//   $A = [1 - 5 cA cB + 3 sA sB sin(phi_a + phi_b)] / 4
//   $B = [3 + cA cB + 2 sA sB cos(phi_a) sin(phi_b)] / 2
Payoffs Dephased(double theta_a, double phi_a, double theta_b, double phi_b,
                 DephasedVariant variant);

// MES(|00>), Alice general SU(2) (theta, phi, varphi), Bob applies sigma_0
// with probability p and i sigma_y otherwise.
OutcomeDistribution BobClassicalMix(double theta_a, double phi_a, double varphi_a, double p);

}  // namespace qgame::closed_form

#endif  // QGAME_CLOSED_FORM_H_
