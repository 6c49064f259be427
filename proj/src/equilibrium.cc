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

#include "qgame/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/parallel.h"
#include "qgame/payoff_kernel.h"

namespace qgame {
namespace {

// Best-response refinement starts from this many of the top grid points.
constexpr int kRefineStarts = 3;
// Relative step size at which coordinate ascent stops.
constexpr double kMinRelativeStep = 1e-13;
// Coordinate ascent ignores gains below this, relative to the payoff scale,
// so flat directions do not random-walk on roundoff.
constexpr double kMinRelativeGain = 1e-14;
// Compass search over joint profiles stops earlier: gaps near an equilibrium
// shrink at least linearly with distance, so this is far below epsilon.
constexpr double kMinCompassStep = 1e-10;
constexpr int kMaxCompassIters = 600;

struct SpaceGrid {
  StrategySpace space;
  int resolution = 0;
  int dims = 0;
  std::vector<StrategyParams> points;
  std::vector<Realization> realized;
  std::vector<ParameterRange> ranges;
  std::vector<double> steps;
};

SpaceGrid MakeGrid(StrategySpace space, int resolution) {
  SpaceGrid g;
  g.space = space;
  g.resolution = resolution;
  g.dims = FreeParameterCount(space);
  g.points = Grid(space, resolution);
  g.realized.reserve(g.points.size());
  for (const auto& p : g.points) g.realized.push_back(Realize(p));
  for (int d = 0; d < g.dims; ++d) {
    g.ranges.push_back(FreeParameterRange(space, d));
    g.steps.push_back((g.ranges[d].hi - g.ranges[d].lo) / (resolution - 1));
  }
  return g;
}

// Multi-index of a grid point (theta outermost).
std::vector<int> GridCoords(const SpaceGrid& g, std::size_t index) {
  std::vector<int> c(g.dims);
  for (int d = g.dims - 1; d >= 0; --d) {
    c[d] = static_cast<int>(index % g.resolution);
    index /= g.resolution;
  }
  return c;
}

std::size_t GridIndex(const SpaceGrid& g, const std::vector<int>& c) {
  std::size_t idx = 0;
  for (int d = 0; d < g.dims; ++d) idx = idx * g.resolution + c[d];
  return idx;
}

// Indices of the top-k values, highest first, ties broken by index.
std::vector<std::size_t> TopK(const std::vector<double>& values, int k) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = std::min<std::size_t>(k, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + n, idx.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  });
  idx.resize(n);
  return idx;
}

// Best payoff `grid`'s owner can reach, given a kernel built for the fixed
// opponent: grid scan plus coordinate ascent from the best few points.
double BestResponseValue(const SpaceGrid& grid, const PayoffKernel& kernel, int passes) {
  std::vector<double> values(grid.points.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = kernel.EvaluateOwn(grid.realized[i]);
  double best = *std::max_element(values.begin(), values.end());
  if (grid.dims == 0) return best;
  auto f = [&](std::span<const double> x) {
    return kernel.EvaluateOwn(Realize(grid.points[0].WithFree(x)));
  };
  for (std::size_t start : TopK(values, kRefineStarts)) {
    const AscentResult r =
        CoordinateAscent(f, grid.points[start].Free(), grid.ranges, grid.steps, passes);
    best = std::max(best, r.value);
  }
  return best;
}

Realization RealizeOf(const StrategyParams& p) { return Realize(p); }

struct Profile {
  StrategyParams a;
  StrategyParams b;
};

// Minimizes gap_a + gap_b over the joint parameters with a compass search
// (axis moves, step halving on failure), starting at a grid profile.
Profile RefineTowardsEquilibrium(const Profile& start, const SpaceGrid& ga, const SpaceGrid& gb,
                                 const CorrelationState& state, const PayoffMatrix2x2& m,
                                 const SearchConfig& cfg) {
  const int da = ga.dims, db = gb.dims;
  std::vector<double> x = start.a.Free();
  const std::vector<double> xb = start.b.Free();
  x.insert(x.end(), xb.begin(), xb.end());
  std::vector<ParameterRange> ranges = ga.ranges;
  ranges.insert(ranges.end(), gb.ranges.begin(), gb.ranges.end());
  std::vector<double> steps = ga.steps;
  steps.insert(steps.end(), gb.steps.begin(), gb.steps.end());

  auto split = [&](std::span<const double> v) {
    return Profile{start.a.WithFree(v.subspan(0, da)), start.b.WithFree(v.subspan(da, db))};
  };
  auto exploitability = [&](std::span<const double> v) {
    const Profile p = split(v);
    const Realization ra = RealizeOf(p.a), rb = RealizeOf(p.b);
    const PayoffKernel ka(state, m, Player::kAlice, rb);
    const PayoffKernel kb(state, m, Player::kBob, ra);
    const double gap_a = BestResponseValue(ga, ka, cfg.refine_iters) - ka.EvaluateOwn(ra);
    const double gap_b = BestResponseValue(gb, kb, cfg.refine_iters) - kb.EvaluateOwn(rb);
    return std::max(0.0, gap_a) + std::max(0.0, gap_b);
  };

  double value = exploitability(x);
  const double target = cfg.epsilon * 1e-3;
  for (int iter = 0; iter < kMaxCompassIters && value > target; ++iter) {
    bool moved = false;
    for (std::size_t d = 0; d < x.size() && !moved; ++d) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[d] = std::clamp(x[d] + dir * steps[d], ranges[d].lo, ranges[d].hi);
        if (y[d] == x[d]) continue;
        const double vy = exploitability(y);
        if (vy < value) {
          x = std::move(y);
          value = vy;
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      bool tiny = true;
      for (std::size_t d = 0; d < steps.size(); ++d) {
        steps[d] *= 0.5;
        if (steps[d] > kMinCompassStep * (ranges[d].hi - ranges[d].lo)) tiny = false;
      }
      if (tiny) break;
    }
  }
  return split(x);
}

// Largest improvement `side` can make over `own` on the verification grid.
// The grid is scanned with the payoff kernel; the current payoff and the
// refinement of the best grid points go through the reference pipeline.
double DeviationGap(const SpaceGrid& fine, const StrategyParams& own, const StrategyParams& other,
                    const CorrelationState& state, const PayoffMatrix2x2& m,
                    const SearchConfig& cfg, Player side) {
  const Realization r_other = Realize(other);
  auto payoff = [&](const Realization& mine) {
    const Payoffs p = side == Player::kAlice ? PipelinePayoffs(state, m, mine, r_other)
                                             : PipelinePayoffs(state, m, r_other, mine);
    return side == Player::kAlice ? p.first : p.second;
  };
  const double current = payoff(Realize(own));
  const PayoffKernel kernel(state, m, side, r_other);
  std::vector<double> values(fine.points.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = kernel.EvaluateOwn(fine.realized[i]);
  double best = -INFINITY;
  auto f = [&](std::span<const double> x) { return payoff(Realize(fine.points[0].WithFree(x))); };
  for (std::size_t start : TopK(values, kRefineStarts)) {
    if (fine.dims == 0) {
      best = std::max(best, payoff(fine.realized[start]));
      continue;
    }
    best = std::max(best, CoordinateAscent(f, fine.points[start].Free(), fine.ranges, fine.steps,
                                           cfg.refine_iters)
                              .value);
  }
  return std::max(0.0, best - current);
}

bool SameProfile(const CandidateNE& e, const Profile& p, double radius) {
  return StrategyDistance(e.a, p.a) <= radius && StrategyDistance(e.b, p.b) <= radius;
}

}  // namespace

void SearchConfig::Validate() const {
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::kBadParameter, fmt::format("epsilon {} must be positive", epsilon));
  if (grid_resolution < 9)
    throw Error(ErrorCode::kBadResolution,
                fmt::format("grid resolution {} below the minimum of 9", grid_resolution));
  if (refine_iters < 0 || max_refinements < 0 || !(dedupe_radius >= 0.0) ||
      !(candidate_tolerance >= 0.0))
    throw Error(ErrorCode::kBadParameter, "search limits must be non-negative");
}

int VerificationResolution(const SearchConfig& cfg) { return 2 * cfg.grid_resolution - 1; }

AscentResult CoordinateAscent(const std::function<double(std::span<const double>)>& f,
                              std::vector<double> x0, std::span<const ParameterRange> ranges,
                              std::vector<double> steps, int passes, std::vector<double>* trace) {
  AscentResult r{std::move(x0), 0.0};
  r.value = f(r.x);
  for (int pass = 0; pass < passes; ++pass) {
    bool moved = false;
    for (std::size_t d = 0; d < r.x.size(); ++d) {
      for (double dir : {1.0, -1.0}) {
        std::vector<double> y = r.x;
        y[d] = std::clamp(r.x[d] + dir * steps[d], ranges[d].lo, ranges[d].hi);
        if (y[d] == r.x[d]) continue;
        const double v = f(y);
        if (v > r.value + kMinRelativeGain * std::max(1.0, std::abs(r.value))) {
          r.x = std::move(y);
          r.value = v;
          moved = true;
          break;
        }
      }
    }
    if (trace) trace->push_back(r.value);
    if (!moved) {
      bool tiny = true;
      for (std::size_t d = 0; d < steps.size(); ++d) {
        steps[d] *= 0.5;
        if (steps[d] > kMinRelativeStep * (ranges[d].hi - ranges[d].lo)) tiny = false;
      }
      if (tiny) break;
    }
  }
  return r;
}

std::vector<ScoredStrategy> BestResponse(StrategySpace space, const StrategyParams& opponent,
                                         const CorrelationState& state, const PayoffMatrix2x2& m,
                                         const SearchConfig& cfg, Player side) {
  cfg.Validate();
  const SpaceGrid grid = MakeGrid(space, cfg.grid_resolution);
  const PayoffKernel kernel(state, m, side, Realize(opponent));
  std::vector<double> values(grid.points.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = kernel.EvaluateOwn(grid.realized[i]);
  const double grid_best = *std::max_element(values.begin(), values.end());

  std::vector<ScoredStrategy> refined;
  auto f = [&](std::span<const double> x) {
    return kernel.EvaluateOwn(Realize(grid.points[0].WithFree(x)));
  };
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < grid_best - cfg.epsilon) continue;
    if (grid.dims == 0) {
      refined.push_back({grid.points[i], values[i]});
      continue;
    }
    const AscentResult r =
        CoordinateAscent(f, grid.points[i].Free(), grid.ranges, grid.steps, cfg.refine_iters);
    refined.push_back({grid.points[i].WithFree(r.x), r.value});
  }
  double best = grid_best;
  for (const auto& s : refined) best = std::max(best, s.payoff);
  std::erase_if(refined, [&](const ScoredStrategy& s) { return s.payoff < best - cfg.epsilon; });
  return refined;
}

DeviationGaps VerifyNe(const StrategyParams& a, const StrategyParams& b,
                       const CorrelationState& state, const PayoffMatrix2x2& m,
                       const SearchConfig& cfg) {
  const int res = VerificationResolution(cfg);
  const SpaceGrid fa = MakeGrid(a.space, res);
  const SpaceGrid fb = MakeGrid(b.space, res);
  return {DeviationGap(fa, a, b, state, m, cfg, Player::kAlice),
          DeviationGap(fb, b, a, state, m, cfg, Player::kBob)};
}

NEReport FindNash(StrategySpace space_a, StrategySpace space_b, const CorrelationState& state,
                  const PayoffMatrix2x2& m, const SearchConfig& cfg) {
  cfg.Validate();
  const SpaceGrid ga = MakeGrid(space_a, cfg.grid_resolution);
  const SpaceGrid gb = MakeGrid(space_b, cfg.grid_resolution);
  const std::size_t na = ga.points.size(), nb = gb.points.size();
  if (na * nb > cfg.max_profiles)
    throw Error(ErrorCode::kSearchBudgetExceeded,
                fmt::format("{} x {} = {} profiles exceeds the cap of {}", na, nb, na * nb,
                            cfg.max_profiles));
  const int threads = ResolveThreadCount(cfg.threads);

  NEReport report;
  report.stats.profiles = na * nb;

  // Payoff tables, row i = Alice's grid point.
  std::vector<double> pay_a(na * nb), pay_b(na * nb);
  ParallelFor(na, threads, [&](std::size_t i) {
    const PayoffKernel kernel(state, m, Player::kBob, ga.realized[i]);
    for (std::size_t j = 0; j < nb; ++j) {
      const auto [bob, alice] = kernel.Evaluate(gb.realized[j]);
      pay_a[i * nb + j] = alice;
      pay_b[i * nb + j] = bob;
    }
  });

  const auto [min_a, max_a] = std::minmax_element(pay_a.begin(), pay_a.end());
  const auto [min_b, max_b] = std::minmax_element(pay_b.begin(), pay_b.end());
  if (*max_a - *min_a <= cfg.epsilon && *max_b - *min_b <= cfg.epsilon) {
    report.flat = true;
    report.flat_payoffs = Payoffs{pay_a[0], pay_b[0]};
    report.dilemma = GetDilemmaCase(*report.flat_payoffs, true);
    return report;
  }

  // Grid deviation gap of every profile.
  std::vector<double> col_best_a(nb, -INFINITY), row_best_b(na, -INFINITY);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      col_best_a[j] = std::max(col_best_a[j], pay_a[i * nb + j]);
      row_best_b[i] = std::max(row_best_b[i], pay_b[i * nb + j]);
    }
  }
  std::vector<double> gap(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      gap[i * nb + j] = std::max(col_best_a[j] - pay_a[i * nb + j], row_best_b[i] - pay_b[i * nb + j]);

  // Joint-grid neighbours along each continuous axis.
  auto neighbours = [&](std::size_t idx, int reach) {
    const std::vector<int> ca = GridCoords(ga, idx / nb), cb = GridCoords(gb, idx % nb);
    std::vector<int> c = ca;
    c.insert(c.end(), cb.begin(), cb.end());
    const int dims = ga.dims + gb.dims;
    std::vector<std::size_t> out;
    // Enumerate offsets in {-reach..reach}^dims (reach 1 => Chebyshev ball).
    std::vector<int> off(dims, -reach);
    while (dims > 0) {
      bool zero = std::all_of(off.begin(), off.end(), [](int o) { return o == 0; });
      bool inside = true;
      std::vector<int> n(dims);
      for (int d = 0; d < dims; ++d) {
        n[d] = c[d] + off[d];
        const int res = d < ga.dims ? ga.resolution : gb.resolution;
        if (n[d] < 0 || n[d] >= res) inside = false;
      }
      if (!zero && inside) {
        const std::vector<int> na_c(n.begin(), n.begin() + ga.dims), nb_c(n.begin() + ga.dims, n.end());
        const std::size_t ia = ga.dims ? GridIndex(ga, na_c) : idx / nb;
        const std::size_t ib = gb.dims ? GridIndex(gb, nb_c) : idx % nb;
        out.push_back(ia * nb + ib);
      }
      int d = 0;
      while (d < dims && ++off[d] > reach) off[d++] = -reach;
      if (d == dims) break;
    }
    return out;
  };

  std::vector<std::size_t> exact;
  std::vector<std::size_t> local_minima;
  for (std::size_t idx = 0; idx < na * nb; ++idx) {
    if (gap[idx] <= cfg.epsilon) {
      exact.push_back(idx);
    } else if (gap[idx] <= cfg.candidate_tolerance && ga.dims + gb.dims > 0) {
      const auto nbrs = neighbours(idx, 1);
      if (std::all_of(nbrs.begin(), nbrs.end(), [&](std::size_t n) { return gap[n] >= gap[idx]; }))
        local_minima.push_back(idx);
    }
  }
  report.stats.grid_equilibria = exact.size();

  // Keep the lowest-gap minimum of each plateau, up to the refinement budget.
  std::stable_sort(local_minima.begin(), local_minima.end(),
                   [&](std::size_t x, std::size_t y) { return gap[x] < gap[y]; });
  std::vector<std::size_t> to_refine;
  std::vector<char> claimed(na * nb, 0);
  for (std::size_t idx : local_minima) {
    if (static_cast<int>(to_refine.size()) >= cfg.max_refinements) break;
    if (claimed[idx]) continue;
    to_refine.push_back(idx);
    claimed[idx] = 1;
    for (std::size_t n : neighbours(idx, 1)) claimed[n] = 1;
  }
  std::sort(to_refine.begin(), to_refine.end());
  report.stats.refined = to_refine.size();

  std::vector<Profile> refined(to_refine.size());
  ParallelFor(to_refine.size(), threads, [&](std::size_t k) {
    const std::size_t idx = to_refine[k];
    refined[k] = RefineTowardsEquilibrium({ga.points[idx / nb], gb.points[idx % nb]}, ga, gb,
                                          state, m, cfg);
  });

  // Certify in grid order: exact grid equilibria and refined candidates
  // interleaved by their originating index.
  struct Pending {
    std::size_t origin;
    Profile profile;
  };
  std::vector<Pending> pending;
  for (std::size_t idx : exact) pending.push_back({idx, {ga.points[idx / nb], gb.points[idx % nb]}});
  for (std::size_t k = 0; k < to_refine.size(); ++k) pending.push_back({to_refine[k], refined[k]});
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& x, const Pending& y) { return x.origin < y.origin; });

  for (const Pending& cand : pending) {
    const bool duplicate = std::any_of(
        report.equilibria.begin(), report.equilibria.end(),
        [&](const CandidateNE& e) { return SameProfile(e, cand.profile, cfg.dedupe_radius); });
    if (duplicate) continue;
    const DeviationGaps gaps = VerifyNe(cand.profile.a, cand.profile.b, state, m, cfg);
    if (gaps.gap_a > cfg.epsilon || gaps.gap_b > cfg.epsilon) {
      ++report.stats.rejected;
      continue;
    }
    CandidateNE ne;
    ne.a = cand.profile.a;
    ne.b = cand.profile.b;
    ne.payoffs = PipelinePayoffs(state, m, Realize(ne.a), Realize(ne.b));
    ne.gap_a = gaps.gap_a;
    ne.gap_b = gaps.gap_b;
    ne.certified = true;
    report.equilibria.push_back(ne);
  }

  report.unique = report.equilibria.size() == 1;
  report.dilemma = report.unique ? GetDilemmaCase(report.equilibria.front().payoffs, true)
                                 : DilemmaCase::kNotApplicable;
  return report;
}

std::vector<NEReport> CorruptedSweep(std::span<const double> p_values, StrategySpace space_a,
                                     StrategySpace space_b, const PayoffMatrix2x2& m,
                                     const SearchConfig& cfg) {
  std::vector<NEReport> out;
  out.reserve(p_values.size());
  for (double p : p_values)
    out.push_back(FindNash(space_a, space_b, CorrelationState::Corrupted(p), m, cfg));
  return out;
}

}  // namespace qgame
