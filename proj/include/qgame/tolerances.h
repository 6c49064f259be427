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

#ifndef QGAME_TOLERANCES_H_
#define QGAME_TOLERANCES_H_

namespace qgame {

// Shared numeric tolerances. Tests and the acceptance suite refer to these by
// name rather than repeating literals.
struct Tolerances {
  // ||U U^dagger - I||_inf for operators we construct ourselves.
  static constexpr double kUnitarity = 1e-10;
  // Looser bound applied to caller-supplied operators before conjugation.
  static constexpr double kUnitarityCheck = 1e-8;
  // Hermiticity and unit trace of density matrices.
  static constexpr double kDensity = 1e-10;
  // Diagonal entries down to -kProbClamp are roundoff and read as zero.
  static constexpr double kProbClamp = 1e-12;
  // Maximum deviation of an outcome distribution's sum from one.
  static constexpr double kNorm = 1e-9;
};

}  // namespace qgame

#endif  // QGAME_TOLERANCES_H_
