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

#ifndef QGAME_TESTS_TEST_UTIL_H_
#define QGAME_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "qgame/linalg.h"
#include "qgame/strategy.h"

namespace qgame::testing {

// Seeded generators for the property suites. Every suite fixes its own seed
// so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double Uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double Normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  int Bit() { return std::uniform_int_distribution<int>(0, 1)(rng_); }
  int Int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Complex RandomComplex() { return {Normal(), Normal()}; }

  Operator2 RandomOperator2() {
    Operator2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = RandomComplex();
    return m;
  }

  Operator4 RandomOperator4() {
    Operator4 m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = RandomComplex();
    return m;
  }

  // Haar-ish SU(2) from a normalized Gaussian quaternion, times a phase.
  Operator2 RandomUnitary2() {
    double q[4];
    double n = 0;
    for (double& x : q) {
      x = Normal();
      n += x * x;
    }
    n = std::sqrt(n);
    const Complex a(q[0] / n, q[3] / n), b(q[2] / n, q[1] / n);
    Operator2 u;
    u << a, b, -std::conj(b), std::conj(a);
    return std::exp(Complex(0, Uniform(0, 2 * kPi))) * u;
  }

  Operator4 RandomUnitary4() {
    Eigen::HouseholderQR<Operator4> qr(RandomOperator4());
    return qr.householderQ();
  }

  // Random density matrix A A^dagger / tr.
  Operator4 RandomDensity() {
    const Operator4 a = RandomOperator4();
    Operator4 rho = a * a.adjoint();
    return rho / rho.trace();
  }

  StrategyParams RandomParams(StrategySpace space) {
    switch (space) {
      case StrategySpace::kClassicalPure: return StrategyParams::Pure(Bit());
      case StrategySpace::kClassicalMixed: return StrategyParams::Mixed(Uniform(0, 1));
      case StrategySpace::kSu2One: return StrategyParams::Su2One(Uniform(0, kPi));
      case StrategySpace::kSu2Two:
        return StrategyParams::Su2Two(Uniform(0, kPi), Uniform(0, kPi / 2));
      case StrategySpace::kSu2Three:
        return StrategyParams::Su2Three(Uniform(0, kPi), Uniform(0, kPi / 2), Uniform(0, kPi / 2));
    }
    return {};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qgame::testing

#endif  // QGAME_TESTS_TEST_UTIL_H_
