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

#ifndef QGAME_LINALG_H_
#define QGAME_LINALG_H_

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qgame {

using Complex = std::complex<double>;

// Single-qubit operator (strategy matrices, Pauli operators).
using Operator2 = Eigen::Matrix2cd;
// Two-qubit operator (entangler, U_A (x) U_B).
using Operator4 = Eigen::Matrix4cd;

inline constexpr Complex kI{0.0, 1.0};

// Max-abs entry norm, the norm every tolerance in this library is stated in.
template <typename Derived>
double MaxAbs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

// Kronecker product, row-major blocks: out(2i+k, 2j+l) = a(i,j) * b(k,l).
Operator4 TensorProduct(const Operator2& a, const Operator2& b);

inline Operator2 Dagger(const Operator2& m) { return m.adjoint(); }
inline Operator4 Dagger(const Operator4& m) { return m.adjoint(); }

// Distance of U U^dagger from the identity in the max-abs norm.
double UnitarityDefect(const Operator2& u);
double UnitarityDefect(const Operator4& u);

bool IsUnitary(const Operator2& u, double tol);
bool IsUnitary(const Operator4& u, double tol);

namespace pauli {
Operator2 Identity();   // sigma_0
Operator2 X();          // sigma_x
Operator2 Y();          // sigma_y
Operator2 Z();          // sigma_z
Operator2 IY();         // i sigma_y = [[0, 1], [-1, 0]], the bit flip
Operator2 IZ();         // i sigma_z = diag(i, -i)
}  // namespace pauli

// A two-qubit density operator. Construction validates Hermiticity, unit
// trace and non-negative diagonal (down to -kProbClamp); the stored matrix is
// never modified afterwards.
class DensityMatrix {
 public:
  // Validates m; throws Error(kNotNormalized) when an invariant fails.
  explicit DensityMatrix(const Operator4& m);

  // |index><index| for a computational basis state, index = 2f + g.
  static DensityMatrix BasisState(int index);
  // The normalized projector onto a pure state vector.
  static DensityMatrix FromPure(const Eigen::Vector4cd& psi);
  // I/4.
  static DensityMatrix MaximallyMixed();

  const Operator4& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  Complex Trace() const { return m_.trace(); }

  // Copy with every computational-basis off-diagonal entry set to zero.
  DensityMatrix Dephased() const;

  // weight * this + (1 - weight) * other.
  DensityMatrix Mix(const DensityMatrix& other, double weight) const;

 private:
  Operator4 m_;
};

// u rho u^dagger. Throws Error(kNonUnitary) if u fails the unitarity check.
DensityMatrix ConjugateBy(const DensityMatrix& rho, const Operator4& u);

// Real parts of the diagonal, clamped to [0, 1]. A raw sum within kNorm of
// one is renormalized to sum exactly to one; anything further off throws
// Error(kNotNormalized), as does a diagonal entry below -kProbClamp.
std::array<double, 4> DiagonalProbabilities(const DensityMatrix& rho);

}  // namespace qgame

#endif  // QGAME_LINALG_H_
