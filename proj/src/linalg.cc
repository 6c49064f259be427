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

#include "qgame/linalg.h"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/tolerances.h"

namespace qgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonUnitary: return "NonUnitary";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kMixedHasNoMatrix: return "MixedHasNoMatrix";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kBadResolution: return "BadResolution";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

Operator4 TensorProduct(const Operator2& a, const Operator2& b) {
  Operator4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double UnitarityDefect(const Operator2& u) {
  return MaxAbs(u * u.adjoint() - Operator2::Identity());
}

double UnitarityDefect(const Operator4& u) {
  return MaxAbs(u * u.adjoint() - Operator4::Identity());
}

bool IsUnitary(const Operator2& u, double tol) {
  return UnitarityDefect(u) <= tol;
}

bool IsUnitary(const Operator4& u, double tol) {
  return UnitarityDefect(u) <= tol;
}

namespace pauli {

Operator2 Identity() { return Operator2::Identity(); }

Operator2 X() {
  Operator2 m;
  m << 0, 1, 1, 0;
  return m;
}

Operator2 Y() {
  Operator2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Operator2 Z() {
  Operator2 m;
  m << 1, 0, 0, -1;
  return m;
}

Operator2 IY() {
  Operator2 m;
  m << 0, 1, -1, 0;
  return m;
}

Operator2 IZ() {
  Operator2 m;
  m << kI, 0, 0, -kI;
  return m;
}

}  // namespace pauli

DensityMatrix::DensityMatrix(const Operator4& m) : m_(m) {
  if (!m_.allFinite())
    throw Error(ErrorCode::kNotNormalized, "density matrix has non-finite entries");
  const double herm = MaxAbs(m_ - m_.adjoint());
  if (herm > Tolerances::kDensity)
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("density matrix not Hermitian (defect {:.3g})", herm));
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > Tolerances::kDensity)
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("density matrix trace {:.12g}{:+.3g}i", tr.real(), tr.imag()));
  for (int i = 0; i < 4; ++i) {
    if (m_(i, i).real() < -Tolerances::kProbClamp)
      throw Error(ErrorCode::kNotNormalized,
                  fmt::format("negative diagonal entry {} = {:.3g}", i, m_(i, i).real()));
  }
}

DensityMatrix DensityMatrix::BasisState(int index) {
  Operator4 m = Operator4::Zero();
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::FromPure(const Eigen::Vector4cd& psi) {
  const Eigen::Vector4cd v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::MaximallyMixed() {
  return DensityMatrix(Operator4::Identity() * 0.25);
}

DensityMatrix DensityMatrix::Dephased() const {
  Operator4 d = Operator4::Zero();
  d.diagonal() = m_.diagonal();
  return DensityMatrix(d);
}

DensityMatrix DensityMatrix::Mix(const DensityMatrix& other, double weight) const {
  if (!(weight >= 0.0 && weight <= 1.0))
    throw Error(ErrorCode::kBadProbability,
                fmt::format("mixing weight {} outside [0, 1]", weight));
  return DensityMatrix(weight * m_ + (1.0 - weight) * other.m_);
}

DensityMatrix ConjugateBy(const DensityMatrix& rho, const Operator4& u) {
  const double defect = UnitarityDefect(u);
  if (defect > Tolerances::kUnitarityCheck)
    throw Error(ErrorCode::kNonUnitary,
                fmt::format("conjugating operator defect {:.3g}", defect));
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

std::array<double, 4> DiagonalProbabilities(const DensityMatrix& rho) {
  std::array<double, 4> p{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = rho(i, i).real();
    if (d < -Tolerances::kProbClamp)
      throw Error(ErrorCode::kNotNormalized,
                  fmt::format("probability {} is {:.3g}", i, d));
    p[i] = std::clamp(d, 0.0, 1.0);
    sum += p[i];
  }
  if (std::abs(sum - 1.0) >= Tolerances::kNorm)
    throw Error(ErrorCode::kNotNormalized,
                fmt::format("probabilities sum to {:.12g}", sum));
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace qgame
