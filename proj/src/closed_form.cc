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

#include "qgame/closed_form.h"

#include <cmath>
#include <complex>

namespace qgame::closed_form {

Payoffs OneParam(double theta_a, double theta_b) {
  const double ca = std::cos(theta_a), cb = std::cos(theta_b);
  return {(1.0 + 3.0 * (ca + cb) + 5.0 * ca * cb) / 4.0, (3.0 + 2.0 * ca - ca * cb) / 2.0};
}

OutcomeDistribution TwoParamProbs(double theta_a, double phi_a, double theta_b, double phi_b) {
  const double ca = std::cos(theta_a / 2.0), sa = std::sin(theta_a / 2.0);
  const double cb = std::cos(theta_b / 2.0), sb = std::sin(theta_b / 2.0);
  const double x = sa * cb;
  const double y = ca * sb;
  const double c_sum = std::cos(phi_a + phi_b);
  OutcomeDistribution d;
  d.p[0] = ca * ca * cb * cb * c_sum * c_sum;
  d.p[1] = std::norm(x * std::sin(phi_b) - y * std::cos(phi_a));
  d.p[2] = std::norm(x * std::cos(phi_b) - y * std::sin(phi_a));
  d.p[3] = 1.0 - d.p[0] - d.p[1] - d.p[2];
  return d;
}

Payoffs Dephased(double theta_a, double phi_a, double theta_b, double phi_b,
                 DephasedVariant variant) {
  const double cc = std::cos(theta_a) * std::cos(theta_b);
  const double ss = std::sin(theta_a) * std::sin(theta_b);
  const double s = variant == DephasedVariant::k00 ? 1.0 : -1.0;
  const double pa = (1.0 + s * 5.0 * cc - s * 3.0 * ss * std::sin(phi_a + phi_b)) / 4.0;
  const double pb = (3.0 - s * cc - s * 2.0 * ss * std::cos(phi_a) * std::sin(phi_b)) / 2.0;
  return {pa, pb};
}

OutcomeDistribution BobClassicalMix(double theta_a, double phi_a, double varphi_a, double p) {
  const double c2 = std::pow(std::cos(theta_a / 2.0), 2);
  const double s2 = std::pow(std::sin(theta_a / 2.0), 2);
  const double cphi2 = std::pow(std::cos(phi_a), 2), sphi2 = std::pow(std::sin(phi_a), 2);
  const double cvar2 = std::pow(std::cos(varphi_a), 2), svar2 = std::pow(std::sin(varphi_a), 2);
  OutcomeDistribution d;
  d.p[0] = p * c2 * cphi2 + (1.0 - p) * s2 * svar2;
  d.p[1] = (1.0 - p) * c2 * cphi2 + p * s2 * svar2;
  d.p[2] = (1.0 - p) * c2 * sphi2 + p * s2 * cvar2;
  d.p[3] = 1.0 - d.p[0] - d.p[1] - d.p[2];
  return d;
}

}  // namespace qgame::closed_form
