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

#include "doctest.h"
#include "oracle.h"
#include "qgame/closed_form.h"
#include "qgame/errors.h"
#include "qgame/game.h"
#include "qgame/strategy.h"
#include "test_util.h"

namespace qgame {
namespace {

const double kRt2 = std::sqrt(2.0);

void CheckDist(const OutcomeDistribution& d, std::array<double, 4> expected, double tol) {
  for (int n = 0; n < 4; ++n) CHECK(std::abs(d[n] - expected[n]) <= tol);
}

void CheckPayoffs(const Payoffs& got, double a, double b, double tol) {
  CHECK(std::abs(got.first - a) <= tol);
  CHECK(std::abs(got.second - b) <= tol);
}

Operator2 U1(double theta) { return ToMatrix(StrategyParams::Su2One(theta)); }
Operator2 U2(double theta, double phi) { return ToMatrix(StrategyParams::Su2Two(theta, phi)); }
Operator2 U3(double t, double p, double v) { return ToMatrix(StrategyParams::Su2Three(t, p, v)); }

TEST_CASE("product state") {
  CHECK(ProductState::Make(0, 1).Index() == 1);
  CHECK(ProductState::Make(1, 0).Ket() == "|10>");
  CHECK_THROWS_AS(ProductState::Make(2, 0), Error);
}

TEST_CASE("entangler columns") {
  const Operator4 j = BuildEntangler();
  CHECK(std::abs(j(0, 0) - 1 / kRt2) <= 1e-15);
  CHECK(std::abs(j(3, 0) - Complex(0, 1 / kRt2)) <= 1e-15);
  CHECK(std::abs(j(1, 0)) + std::abs(j(2, 0)) == 0.0);
  CHECK(std::abs(j(1, 1) - 1 / kRt2) <= 1e-15);
  CHECK(std::abs(j(2, 1) - Complex(0, -1 / kRt2)) <= 1e-15);
  CHECK(std::abs(j(0, 1)) + std::abs(j(3, 1)) == 0.0);
  CHECK(MaxAbs(j.adjoint() * j - Operator4::Identity()) <= 1e-10);
}

TEST_CASE("entangler matches the oracle on every basis ket") {
  const Operator4 j = BuildEntangler();
  for (int col = 0; col < 4; ++col) {
    const oracle::Ket k = oracle::Entangle(oracle::Basis(col));
    for (int row = 0; row < 4; ++row) CHECK(std::abs(j(row, col) - k[row]) <= 1e-15);
  }
}

TEST_CASE("correlation states") {
  const auto d00 = CorrelationState::Dephased(ProductState::Make(0, 0));
  Operator4 expected = Operator4::Zero();
  expected.diagonal() << 0.5, 0, 0, 0.5;
  CHECK(MaxAbs(d00.rho.matrix() - expected) <= 1e-15);

  const auto d01 = CorrelationState::Dephased(ProductState::Make(0, 1));
  expected.diagonal() << 0, 0.5, 0.5, 0;
  CHECK(MaxAbs(d01.rho.matrix() - expected) <= 1e-15);

  const auto c1 = CorrelationState::Corrupted(1.0);
  CHECK(MaxAbs(c1.rho.matrix() - CorrelationState::Mes(ProductState::Make(0, 0)).rho.matrix()) ==
        0.0);
  CHECK(MaxAbs(CorrelationState::FullRank().rho.matrix() - Operator4::Identity() / 4.0) == 0.0);
  CHECK_THROWS_AS(CorrelationState::Corrupted(1.5), Error);
  CHECK_THROWS_AS(CorrelationState::Corrupted(-0.01), Error);
  CHECK(CorrelationState::Corrupted(0.25).kind == CorrelationKind::kCorrupted);
  CHECK(CorrelationState::Corrupted(0.25).p == 0.25);
}

TEST_CASE("play round examples") {
  const auto mes = CorrelationState::Mes(ProductState::Make(0, 0));
  CheckDist(PlayRound(mes, pauli::Identity(), pauli::Identity()), {1, 0, 0, 0}, 1e-15);
  CheckDist(PlayRound(mes, pauli::IZ(), pauli::IZ()), {1, 0, 0, 0}, 1e-15);
  CheckDist(PlayRound(mes, U1(kPi / 2), U1(kPi / 2)), {0.25, 0.25, 0.25, 0.25}, 1e-15);
  CheckDist(PlayRound(mes, U2(kPi / 2, 0), U2(kPi / 2, 0)), {0.25, 0.25, 0.25, 0.25}, 1e-15);
}

TEST_CASE("play round rejects non-unitary operators") {
  Operator2 m = pauli::Identity();
  m(0, 1) = 0.5;
  const auto mes = CorrelationState::Mes(ProductState::Make(0, 0));
  try {
    PlayRound(mes, m, pauli::Identity());
    FAIL("expected NonUnitary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonUnitary);
  }
  CHECK_THROWS_AS(PlayRound(mes, pauli::Identity(), 2.0 * pauli::Identity()), Error);
}

TEST_CASE("expected payoffs") {
  const PayoffMatrix2x2 w = WelfareGame();
  CheckPayoffs(ExpectedPayoffs({{1, 0, 0, 0}}, w), 3, 2, 0);
  CheckPayoffs(ExpectedPayoffs({{0, 0, 0, 1}}, w), 0, 0, 0);
  CheckPayoffs(ExpectedPayoffs({{0.25, 0.25, 0.25, 0.25}}, w), 0.25, 1.5, 1e-15);
}

TEST_CASE("outcome distribution validation") {
  CHECK_NOTHROW((OutcomeDistribution{{0.5, 0.5, 0, 0}}.Validate()));
  CHECK_THROWS_AS((OutcomeDistribution{{0.5, 0.6, 0, 0}}.Validate()), Error);
  CHECK_THROWS_AS((OutcomeDistribution{{1.2, -0.2, 0, 0}}.Validate()), Error);
}

TEST_CASE("mixed bob") {
  const auto mes = CorrelationState::Mes(ProductState::Make(0, 0));
  const PayoffMatrix2x2 w = WelfareGame();
  const Operator2 ua = U3(1.1, 0.3, 0.7);
  CheckDist(PlayRoundMixedBob(mes, ua, 1.0), PlayRound(mes, ua, pauli::Identity()).p, 0);
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    CheckPayoffs(ExpectedPayoffs(PlayRoundMixedBob(mes, U3(kPi / 2, 0, kPi / 2), p), w), 1, 2.5,
                 1e-12);
    CheckPayoffs(ExpectedPayoffs(PlayRoundMixedBob(mes, U3(kPi / 2, 0, kPi / 4), p), w),
                 (1 + 3 * p) / 4, 2, 1e-12);
  }
  CHECK_THROWS_AS(PlayRoundMixedBob(mes, ua, 1.1), Error);
}

TEST_CASE("closed form: one parameter") {
  CheckPayoffs(closed_form::OneParam(0, 0), 3, 2, 1e-15);
  CheckPayoffs(closed_form::OneParam(kPi / 2, std::acos(-0.6)), -0.2, 1.5, 1e-15);
  CheckPayoffs(closed_form::OneParam(kPi, kPi), 0, 0, 1e-15);
}

TEST_CASE("closed form: two parameter probabilities") {
  CheckDist(closed_form::TwoParamProbs(0, kPi / 2, 0, kPi / 2), {1, 0, 0, 0}, 1e-15);
  CheckDist(closed_form::TwoParamProbs(0, 0, 0, 0), {1, 0, 0, 0}, 1e-15);
  CheckDist(closed_form::TwoParamProbs(kPi / 2, 0, kPi / 2, 0), {0.25, 0.25, 0.25, 0.25}, 1e-15);
}

TEST_CASE("closed form: dephased") {
  using closed_form::DephasedVariant;
  for (double ta : {0.0, 0.4, 1.3, kPi / 2, 2.9, kPi})
    CheckPayoffs(closed_form::Dephased(ta, 0, kPi / 2, 0, DephasedVariant::k00), 0.25, 1.5, 1e-15);
  CheckPayoffs(closed_form::Dephased(0, 0, 0, 0, DephasedVariant::k00), 1.5, 1, 1e-15);
  // Alice (pi/2, 0) against i(sigma_y + sigma_z)/sqrt2 under the |01> source.
  CheckPayoffs(closed_form::Dephased(kPi / 2, 0, kPi / 2, kPi / 2, DephasedVariant::k01), 1, 2.5,
               1e-15);
  const auto d01 = CorrelationState::Dephased(ProductState::Make(0, 1));
  CheckPayoffs(ExpectedPayoffs(PlayRound(d01, U2(kPi / 2, 0), U2(kPi / 2, kPi / 2)), WelfareGame()),
               1, 2.5, 1e-15);
}

TEST_CASE("closed form: bob classical mixture") {
  const PayoffMatrix2x2 w = WelfareGame();
  for (double p : {0.0, 0.3, 1.0})
    CheckPayoffs(ExpectedPayoffs(closed_form::BobClassicalMix(kPi / 2, kPi / 4, kPi / 4, p), w),
                 0.25, 1.5, 1e-15);
  CheckDist(closed_form::BobClassicalMix(0, 0, 0, 1), {1, 0, 0, 0}, 0);
  CheckPayoffs(ExpectedPayoffs(closed_form::BobClassicalMix(kPi / 2, 0, 0, 0.2), w), -0.2, 1.5,
               1e-15);
}

TEST_CASE("classical embedding reproduces the base game under both initial states") {
  const PayoffMatrix2x2 w = WelfareGame();
  for (int g = 0; g < 2; ++g) {
    const ProductState s = ProductState::Make(0, g);
    const auto mes = CorrelationState::Mes(s);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        const Operator2 ua = ClassicalOpMatrix(ClassicalEmbedding(Player::kAlice, r, s));
        const Operator2 ub = ClassicalOpMatrix(ClassicalEmbedding(Player::kBob, c, s));
        const Payoffs got = ExpectedPayoffs(PlayRound(mes, ua, ub), w);
        CHECK(std::abs(got.first - w.AliceAt(r, c)) <= 1e-12);
        CHECK(std::abs(got.second - w.BobAt(r, c)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("dephased classical operators give the transformed matrix") {
  // Rows sigma_0 / i sigma_y for Alice, columns likewise for Bob.
  const auto d00 = CorrelationState::Dephased(ProductState::Make(0, 0));
  const std::array<Operator2, 2> ops{pauli::Identity(), pauli::IY()};
  const std::array<Payoffs, 4> expected{{{1.5, 1}, {-1, 2}, {-1, 2}, {1.5, 1}}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      CheckPayoffs(ExpectedPayoffs(PlayRound(d00, ops[r], ops[c]), WelfareGame()),
                   expected[2 * r + c].first, expected[2 * r + c].second, 1e-15);
}

TEST_CASE("describe") {
  CHECK(CorrelationState::Mes(ProductState::Make(0, 1)).Describe() == "mes(01)");
  CHECK(CorrelationState::Corrupted(0.25).Describe() == "corrupted(p=0.25)");
  CHECK(CorrelationKindName(CorrelationKind::kFullRank) != CorrelationKindName(CorrelationKind::kMes));
}

}  // namespace
}  // namespace qgame
