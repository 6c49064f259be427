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

#ifndef QGAME_EQUILIBRIUM_H_
#define QGAME_EQUILIBRIUM_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgame/game.h"
#include "qgame/protocol.h"
#include "qgame/strategy.h"

namespace qgame {

struct SearchConfig {
  // Points per free parameter of the search grid.
  int grid_resolution = 33;
  // Passes of coordinate ascent when refining a best response.
  int refine_iters = 80;
  // Certification threshold on either player's deviation gap (payoff units).
  double epsilon = 1e-6;
  // Phase-invariant operator distance under which two equilibria merge.
  double dedupe_radius = 1e-3;
  // Grid points whose grid deviation gap is a local minimum below this value
  // are refined towards an equilibrium (off-grid equilibria sit between grid
  // points, where the grid gap is of order slope * spacing).
  double candidate_tolerance = 0.2;
  // Upper bound on such refinements per search.
  int max_refinements = 128;
  // Cap on |grid_a| * |grid_b|; larger searches raise SearchBudgetExceeded.
  std::size_t max_profiles = std::size_t{1} << 22;
  // Worker threads; 0 picks QGAME_THREADS or the hardware concurrency.
  int threads = 0;

  // Throws Error(kBadParameter) unless epsilon > 0 and resolution >= 9.
  void Validate() const;
};

// Where the verification grid sits relative to the search grid.
int VerificationResolution(const SearchConfig& cfg);

struct CandidateNE {
  StrategyParams a;
  StrategyParams b;
  Payoffs payoffs{0.0, 0.0};
  // Largest unilateral improvement found for each player.
  double gap_a = 0.0;
  double gap_b = 0.0;
  bool certified = false;
};

struct SearchStats {
  std::size_t profiles = 0;        // joint grid size
  std::size_t grid_equilibria = 0; // grid points already within epsilon
  std::size_t refined = 0;         // off-grid candidates refined
  std::size_t rejected = 0;        // candidates that failed certification
};

struct NEReport {
  std::vector<CandidateNE> equilibria;  // certified, phase-deduplicated
  bool unique = false;
  // Every profile yields the same payoffs within epsilon.
  bool flat = false;
  std::optional<Payoffs> flat_payoffs;
  DilemmaCase dilemma = DilemmaCase::kNotApplicable;
  SearchStats stats;
};

struct ScoredStrategy {
  StrategyParams params;
  double payoff = 0.0;
};

// All of `side`'s strategies in `space` within epsilon of the best payoff
// against `opponent`: grid scan, then coordinate ascent from every near-best
// grid point. Sorted by grid order.
std::vector<ScoredStrategy> BestResponse(StrategySpace space, const StrategyParams& opponent,
                                         const CorrelationState& state, const PayoffMatrix2x2& m,
                                         const SearchConfig& cfg, Player side);

// Deviation gaps of a profile, measured on the verification grid (twice the
// search resolution) plus local refinement, through the reference pipeline.
struct DeviationGaps {
  double gap_a = 0.0;
  double gap_b = 0.0;
};
DeviationGaps VerifyNe(const StrategyParams& a, const StrategyParams& b,
                       const CorrelationState& state, const PayoffMatrix2x2& m,
                       const SearchConfig& cfg);

NEReport FindNash(StrategySpace space_a, StrategySpace space_b, const CorrelationState& state,
                  const PayoffMatrix2x2& m, const SearchConfig& cfg);

std::vector<NEReport> CorruptedSweep(std::span<const double> p_values, StrategySpace space_a,
                                     StrategySpace space_b, const PayoffMatrix2x2& m,
                                     const SearchConfig& cfg);

struct NamedOperator {
  std::string name;
  Operator2 op;
};

struct ExtendedMatrix {
  std::vector<std::string> row_ops;
  std::vector<std::string> col_ops;
  std::vector<std::vector<Payoffs>> cells;
  std::vector<std::vector<bool>> ne_cells;

  std::size_t rows() const { return row_ops.size(); }
  std::size_t cols() const { return col_ops.size(); }
};

// Rows are the classical embeddings of the game's two moves followed by
// extra_a; columns likewise with extra_b. Cells go through PlayRound, and a
// cell is marked when it is a mutual best response inside the finite matrix.
ExtendedMatrix BuildExtendedMatrix(const PayoffMatrix2x2& m, std::span<const NamedOperator> extra_a,
                                   std::span<const NamedOperator> extra_b,
                                   const CorrelationState& state, ProductState initial);

// Coordinate ascent with step halving. Exposed for tests. `trace`, when
// given, receives the objective after every pass.
struct AscentResult {
  std::vector<double> x;
  double value = 0.0;
};
AscentResult CoordinateAscent(const std::function<double(std::span<const double>)>& f,
                              std::vector<double> x0, std::span<const ParameterRange> ranges,
                              std::vector<double> steps, int passes,
                              std::vector<double>* trace = nullptr);

}  // namespace qgame

#endif  // QGAME_EQUILIBRIUM_H_
