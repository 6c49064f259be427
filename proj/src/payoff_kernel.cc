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

#include "qgame/payoff_kernel.h"

namespace qgame {
namespace {

Eigen::Vector4cd Vectorize(const Operator2& u) {
  return Eigen::Vector4cd(u(0, 0), u(0, 1), u(1, 0), u(1, 1));
}

double QuadraticForm(const Eigen::Matrix4cd& q, const Eigen::Vector4cd& u) {
  return (u.transpose() * q * u.conjugate()).value().real();
}

}  // namespace

PayoffKernel::PayoffKernel(const CorrelationState& state, const PayoffMatrix2x2& m, Player player,
                           const Realization& opponent) {
  const Operator4 j_dag = BuildEntangler().adjoint();
  const auto& own_w = player == Player::kAlice ? m.alice : m.bob;
  const auto& opp_w = player == Player::kAlice ? m.bob : m.alice;
  own_form_.setZero();
  opponent_form_.setZero();

  for (int k = 0; k < opponent.count; ++k) {
    const double weight = opponent.weights[k];
    if (weight == 0.0) continue;
    // T_m = J^dagger (E_m (x) V) for Alice, J^dagger (V (x) E_m) for Bob.
    std::array<Operator4, 4> t;
    std::array<Operator4, 4> t_rho;
    for (int idx = 0; idx < 4; ++idx) {
      Operator2 e = Operator2::Zero();
      e(idx / 2, idx % 2) = 1.0;
      t[idx] = j_dag * (player == Player::kAlice ? TensorProduct(e, opponent.ops[k])
                                                 : TensorProduct(opponent.ops[k], e));
      t_rho[idx] = t[idx] * state.rho.matrix();
    }
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        // diag(T_a rho T_b^dagger)_n = sum_s (T_a rho)(n,s) conj(T_b(n,s))
        Complex own = 0.0, opp = 0.0;
        for (int n = 0; n < 4; ++n) {
          Complex d = 0.0;
          for (int s = 0; s < 4; ++s) d += t_rho[a](n, s) * std::conj(t[b](n, s));
          own += own_w[n] * d;
          opp += opp_w[n] * d;
        }
        own_form_(a, b) += weight * own;
        opponent_form_(a, b) += weight * opp;
      }
    }
  }
}

std::pair<double, double> PayoffKernel::Evaluate(const Realization& own) const {
  double mine = 0.0, theirs = 0.0;
  for (int k = 0; k < own.count; ++k) {
    if (own.weights[k] == 0.0) continue;
    const Eigen::Vector4cd u = Vectorize(own.ops[k]);
    mine += own.weights[k] * QuadraticForm(own_form_, u);
    theirs += own.weights[k] * QuadraticForm(opponent_form_, u);
  }
  return {mine, theirs};
}

double PayoffKernel::EvaluateOwn(const Realization& own) const {
  double mine = 0.0;
  for (int k = 0; k < own.count; ++k) {
    if (own.weights[k] == 0.0) continue;
    mine += own.weights[k] * QuadraticForm(own_form_, Vectorize(own.ops[k]));
  }
  return mine;
}

Payoffs PipelinePayoffs(const CorrelationState& state, const PayoffMatrix2x2& m,
                        const Realization& a, const Realization& b) {
  double pa = 0.0, pb = 0.0;
  for (int i = 0; i < a.count; ++i) {
    for (int j = 0; j < b.count; ++j) {
      const double w = a.weights[i] * b.weights[j];
      if (w == 0.0) continue;
      const auto [x, y] = ExpectedPayoffs(PlayRound(state, a.ops[i], b.ops[j]), m);
      pa += w * x;
      pb += w * y;
    }
  }
  return {pa, pb};
}

}  // namespace qgame
