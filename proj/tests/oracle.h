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

// Independent state-vector model of the protocol, used only by tests.
//
// Nothing here touches the library's linear algebra. Correlation states are
// ensembles of pure states, operators are plain nested arrays, and the
// entangler is written out from its action on basis kets.

#ifndef QGAME_TESTS_ORACLE_H_
#define QGAME_TESTS_ORACLE_H_

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Ket = std::array<C, 4>;
using Op = std::array<std::array<C, 2>, 2>;

inline constexpr double kPi = 3.14159265358979323846;

inline Op Su2(double theta, double phi, double varphi) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const C i(0, 1);
  return {{{std::exp(i * phi) * c, std::exp(i * varphi) * s},
           {-std::exp(-i * varphi) * s, std::exp(-i * phi) * c}}};
}

inline Op Identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
inline Op Flip() { return {{{0.0, 1.0}, {-1.0, 0.0}}}; }

inline Ket Basis(int index) {
  Ket k{};
  k[index] = 1.0;
  return k;
}

// J|fg> = (|fg> + i (-1)^(f+g) |f'g'>) / sqrt2 with primes denoting negation.
inline Ket Entangle(const Ket& in) {
  Ket out{};
  const double r = 1.0 / std::sqrt(2.0);
  for (int f = 0; f < 2; ++f) {
    for (int g = 0; g < 2; ++g) {
      const C amp = in[2 * f + g];
      const double sign = ((f + g) % 2 == 0) ? 1.0 : -1.0;
      out[2 * f + g] += amp * r;
      out[2 * (1 - f) + (1 - g)] += amp * C(0, sign * r);
    }
  }
  return out;
}

// The adjoint, obtained from the matrix of Entangle column by column.
inline Ket Disentangle(const Ket& in) {
  Ket out{};
  for (int col = 0; col < 4; ++col) {
    const Ket column = Entangle(Basis(col));
    for (int row = 0; row < 4; ++row) out[col] += std::conj(column[row]) * in[row];
  }
  return out;
}

// (a (x) b) applied to a two-qubit ket, index = 2 * (Alice bit) + (Bob bit).
inline Ket Apply(const Op& a, const Op& b, const Ket& in) {
  Ket out{};
  for (int j = 0; j < 2; ++j)
    for (int l = 0; l < 2; ++l)
      for (int jj = 0; jj < 2; ++jj)
        for (int ll = 0; ll < 2; ++ll) out[2 * j + l] += a[j][jj] * b[l][ll] * in[2 * jj + ll];
  return out;
}

using Ensemble = std::vector<std::pair<double, Ket>>;

inline Ensemble Mes(int f, int g) { return {{1.0, Entangle(Basis(2 * f + g))}}; }

// Full dephasing of J|fg><fg|J^dagger leaves an equal mixture of |fg> and its
// complement.
inline Ensemble Dephased(int f, int g) {
  return {{0.5, Basis(2 * f + g)}, {0.5, Basis(2 * (1 - f) + (1 - g))}};
}

inline Ensemble FullRank() {
  return {{0.25, Basis(0)}, {0.25, Basis(1)}, {0.25, Basis(2)}, {0.25, Basis(3)}};
}

inline Ensemble Corrupted(double p) {
  return {{p, Entangle(Basis(0))}, {1.0 - p, Entangle(Basis(1))}};
}

inline std::array<double, 4> Probabilities(const Ensemble& state, const Op& a, const Op& b) {
  std::array<double, 4> probs{};
  for (const auto& [w, ket] : state) {
    const Ket out = Disentangle(Apply(a, b, ket));
    for (int n = 0; n < 4; ++n) probs[n] += w * std::norm(out[n]);
  }
  return probs;
}

inline constexpr std::array<double, 4> kWelfareA{3, -1, -1, 0};
inline constexpr std::array<double, 4> kWelfareB{2, 3, 1, 0};

inline std::pair<double, double> WelfarePayoffs(const std::array<double, 4>& probs) {
  double pa = 0, pb = 0;
  for (int n = 0; n < 4; ++n) {
    pa += kWelfareA[n] * probs[n];
    pb += kWelfareB[n] * probs[n];
  }
  return {pa, pb};
}

}  // namespace oracle

#endif  // QGAME_TESTS_ORACLE_H_
