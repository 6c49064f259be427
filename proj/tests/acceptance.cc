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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#define DOCTEST_CONFIG_DISABLE

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracle.h"
#include "qgame/closed_form.h"
#include "qgame/equilibrium.h"
#include "qgame/fixtures.h"
#include "qgame/game.h"
#include "qgame/payoff_kernel.h"
#include "qgame/protocol.h"
#include "qgame/strategy.h"
#include "qgame/tolerances.h"
#include "test_util.h"

namespace qgame {
namespace {

using testing::Gen;

// Collects the failed checks of one criterion.
class Criterion {
 public:
  void Check(bool ok, std::string what) {
    ++checks_;
    if (!ok) failures_.push_back(std::move(what));
  }
  void Near(double actual, double expected, double tol, const std::string& what) {
    Check(std::abs(actual - expected) <= tol,
          fmt::format("{}: got {:.12g}, want {:.12g} (tol {:g})", what, actual, expected, tol));
  }
  bool ok() const { return failures_.empty() && checks_ > 0; }
  const std::vector<std::string>& failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

const PayoffMatrix2x2 kWelfare = WelfareGame();
const SearchConfig kDefault{};

CorrelationState Mes(int f, int g) { return CorrelationState::Mes(ProductState::Make(f, g)); }
CorrelationState Dephased(int f, int g) { return CorrelationState::Dephased(ProductState::Make(f, g)); }

double Rotation(const StrategyParams& x, const StrategyParams& y) {
  if (x.space == StrategySpace::kClassicalMixed) return std::abs(x.p - y.p);
  return RotationAngle(ToMatrix(x), ToMatrix(y));
}

// Closest certified equilibrium to (a, b) by the larger per-player deviation.
const CandidateNE* Closest(const NEReport& r, const StrategyParams& a, const StrategyParams& b,
                           double* deviation) {
  const CandidateNE* best = nullptr;
  *deviation = INFINITY;
  for (const auto& ne : r.equilibria) {
    const double d = std::max(Rotation(ne.a, a), Rotation(ne.b, b));
    if (d < *deviation) {
      *deviation = d;
      best = &ne;
    }
  }
  return best;
}

void ExpectMember(Criterion& c, const NEReport& r, const StrategyParams& a, const StrategyParams& b,
                  Payoffs pay, double loc_tol, const std::string& label) {
  double dev = 0;
  const CandidateNE* ne = Closest(r, a, b, &dev);
  c.Check(ne != nullptr, label + ": no certified equilibrium");
  if (!ne) return;
  c.Near(dev, 0.0, loc_tol, label + " location");
  c.Check(ne->certified, label + " not certified");
  c.Near(ne->payoffs.first, pay.first, 1e-6, label + " payoff_a");
  c.Near(ne->payoffs.second, pay.second, 1e-6, label + " payoff_b");
}

// ---------------------------------------------------------------------------

void Ac1(Criterion& c) {
  c.Check(PureNash(kWelfare).empty(), "pure NE set not empty");
  const MixedNashResult r = MixedNash2x2(kWelfare);
  c.Check(r.interior.has_value(), "no interior mixed NE");
  if (!r.interior) return;
  c.Near(r.interior->p, 0.5, 1e-12, "p");
  c.Near(r.interior->q, 0.2, 1e-12, "q");
  c.Near(r.payoffs.first, -0.2, 1e-12, "payoff_a");
  c.Near(r.payoffs.second, 1.5, 1e-12, "payoff_b");
}

void Ac2(Criterion& c) {
  const auto one = StrategySpace::kSu2One;
  const NEReport r00 = FindNash(one, one, Mes(0, 0), kWelfare, kDefault);
  ExpectMember(c, r00, StrategyParams::Su2One(kPi / 2), StrategyParams::Su2One(std::acos(-0.6)),
               {-0.2, 1.5}, 1e-3, "|00>");
  const NEReport r01 = FindNash(one, one, Mes(0, 1), kWelfare, kDefault);
  ExpectMember(c, r01, StrategyParams::Su2One(kPi / 2), StrategyParams::Su2One(std::acos(0.6)),
               {-0.2, 1.5}, 1e-3, "|01>");
}

void Ac3(Criterion& c) {
  const auto two = StrategySpace::kSu2Two;
  const NEReport r = FindNash(two, two, Mes(0, 0), kWelfare, kDefault);
  c.Check(r.equilibria.size() == 1, fmt::format("{} equilibria, want 1", r.equilibria.size()));
  c.Check(r.unique, "not unique");
  const auto iz = StrategyParams::Su2Two(0, kPi / 2);
  ExpectMember(c, r, iz, iz, {3, 2}, 1e-3, "(i sz, i sz)");
  c.Check(r.dilemma == DilemmaCase::kCaseIII,
          fmt::format("dilemma {}, want CASE_III", DilemmaCaseName(r.dilemma)));
}

void Ac4(Criterion& c) {
  const auto two = StrategySpace::kSu2Two;
  const NEReport r = FindNash(two, two, Mes(0, 1), kWelfare, kDefault);
  c.Check(r.equilibria.size() == 4, fmt::format("{} equilibria, want 4", r.equilibria.size()));
  for (const auto& ne : r.equilibria) {
    c.Near(ne.payoffs.first, 3, 1e-6, "an equilibrium payoff_a");
    c.Near(ne.payoffs.second, 2, 1e-6, "an equilibrium payoff_b");
  }
  const char* names[][2] = {{"N", "P"}, {"T", "Q"}, {"Y", "R"}, {"Z", "S"}};
  for (const auto& [na, nb] : names) {
    const Operator2 ua = ReferenceOperator(na).op, ub = ReferenceOperator(nb).op;
    double best = INFINITY;
    for (const auto& ne : r.equilibria)
      best = std::min(best, std::max(RotationAngle(ToMatrix(ne.a), ua), RotationAngle(ToMatrix(ne.b), ub)));
    c.Near(best, 0, 1e-3, fmt::format("({},{}) location", na, nb));
  }
}

void ExpectCells(Criterion& c, const ExtendedMatrix& em, const std::vector<std::vector<Payoffs>>& want,
                 const std::vector<std::pair<int, int>>& boxed, const std::string& label) {
  c.Check(em.rows() == want.size() && em.cols() == want[0].size(), label + " shape");
  if (em.rows() != want.size() || em.cols() != want[0].size()) return;
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      const std::string cell = fmt::format("{} ({},{})", label, em.row_ops[i], em.col_ops[j]);
      c.Near(em.cells[i][j].first, want[i][j].first, 1e-9, cell + " payoff_a");
      c.Near(em.cells[i][j].second, want[i][j].second, 1e-9, cell + " payoff_b");
      const bool mark = std::find(boxed.begin(), boxed.end(), std::pair<int, int>(i, j)) != boxed.end();
      c.Check(em.ne_cells[i][j] == mark, cell + " NE mark");
    }
}

std::vector<NamedOperator> Ops(std::initializer_list<const char*> names) {
  std::vector<NamedOperator> out;
  for (const char* n : names) out.push_back(ReferenceOperator(n));
  return out;
}

void Ac5(Criterion& c) {
  const auto m = Ops({"M"});
  ExpectCells(c, BuildExtendedMatrix(kWelfare, m, m, Mes(0, 0), ProductState{}),
              {{{3, 2}, {-1, 3}, {0, 0}}, {{-1, 1}, {0, 0}, {-1, 3}}, {{0, 0}, {-1, 1}, {3, 2}}},
              {{2, 2}}, "3x3");
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r23 = std::sqrt(2 + r3);
  const Payoffs s2p{1 + r2, (6 + r2) / 4}, s2m{1 - r2, (6 - r2) / 4};
  const Payoffs s3p{1 + r3, (6 + r3) / 4}, s23{1 + r23, (6 + r23) / 4};
  ExpectCells(c,
              BuildExtendedMatrix(kWelfare, Ops({"T", "Y", "Z"}), Ops({"P", "Q", "R", "S"}), Mes(0, 1),
                                  ProductState::Make(0, 1)),
              {
                  {{3, 2}, {-1, 3}, {-1, 1}, {1, 1.5}, {0, 1.25}, s2m},
                  {{-1, 1}, {0, 0}, {3, 2}, {1, 1.5}, {2, 1.75}, s2p},
                  {{1, 1.5}, {-0.5, 1.5}, {1, 1.5}, {3, 2}, s3p, s2p},
                  {{0, 1.25}, {-0.25, 0.75}, {2, 1.75}, s3p, {3, 2}, s23},
                  {s2m, {(r2 - 2) / 4, 3 * (2 - r2) / 4}, s2p, s2p, s23, {3, 2}},
              },
              {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, "5x6");
}

void Ac6(Criterion& c) {
  const auto s0 = StrategyParams::Su2Two(0, 0), isy = StrategyParams::Su2Two(kPi, 0),
             isz = StrategyParams::Su2Two(0, kPi / 2);
  const double ps[] = {0.25, 0.5, 0.75};
  const auto reports = CorruptedSweep(ps, StrategySpace::kSu2Two, StrategySpace::kSu2Two, kWelfare, kDefault);
  struct Row {
    int k;
    StrategyParams a, b;
    Payoffs pay;
    const char* label;
  };
  const Row rows[] = {
      {0, s0, s0, {0, 2.75}, "p=1/4 (s0,s0)"},    {0, isy, isz, {2, 2.25}, "p=1/4 (i sy,i sz)"},
      {1, s0, isy, {1, 2.5}, "p=1/2 (s0,i sy)"},  {1, isy, isz, {1, 2.5}, "p=1/2 (i sy,i sz)"},
      {1, isz, isz, {1, 2.5}, "p=1/2 (i sz,i sz)"}, {2, s0, isy, {0, 2.75}, "p=3/4 (s0,i sy)"},
      {2, isz, isz, {2, 2.25}, "p=3/4 (i sz,i sz)"},
  };
  for (const Row& r : rows) ExpectMember(c, reports[r.k], r.a, r.b, r.pay, 1e-3, r.label);
}

void Ac7(Criterion& c) {
  const auto two = StrategySpace::kSu2Two;
  const NEReport d00 = FindNash(two, two, Dephased(0, 0), kWelfare, kDefault);
  c.Check(!d00.equilibria.empty(), "dephased |00>: no equilibrium");
  for (const auto& ne : d00.equilibria) {
    c.Near(ne.payoffs.first, 0.25, 1e-6, "dephased |00> payoff_a");
    c.Near(ne.payoffs.second, 1.5, 1e-6, "dephased |00> payoff_b");
  }
  const NEReport d01 = FindNash(two, two, Dephased(0, 1), kWelfare, kDefault);
  bool found = false;
  std::string seen;
  for (const auto& ne : d01.equilibria) {
    found |= std::abs(ne.payoffs.first - 2.5) <= 1e-6 && std::abs(ne.payoffs.second - 1.0) <= 1e-6;
    seen += fmt::format(" ({:.6g}, {:.6g})", ne.payoffs.first, ne.payoffs.second);
  }
  c.Check(found, "dephased |01>: no equilibrium with payoffs (2.5, 1); found" + seen);

  Gen gen(701);
  const auto full = CorrelationState::FullRank();
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Payoffs p = ExpectedPayoffs(PlayRound(full, gen.RandomUnitary2(), gen.RandomUnitary2()), kWelfare);
    worst = std::max({worst, std::abs(p.first - 0.25), std::abs(p.second - 1.5)});
  }
  c.Near(worst, 0, 1e-10, "full rank deviation from (0.25, 1.5)");
}

void Ac8(Criterion& c) {
  const ExtendedMatrix em = BuildExtendedMatrix(kWelfare, {}, {}, Dephased(0, 0), ProductState{});
  const Payoffs want[2][2] = {{{1.5, 1}, {-1, 2}}, {{-1, 2}, {1.5, 1}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      c.Near(em.cells[i][j].first, want[i][j].first, 1e-12, fmt::format("cell ({},{}) payoff_a", i, j));
      c.Near(em.cells[i][j].second, want[i][j].second, 1e-12, fmt::format("cell ({},{}) payoff_b", i, j));
    }
  const auto mixed = StrategySpace::kClassicalMixed;
  const NEReport r = FindNash(mixed, mixed, Dephased(0, 0), kWelfare, kDefault);
  c.Check(r.equilibria.size() == 1, fmt::format("{} equilibria, want 1", r.equilibria.size()));
  for (const auto& ne : r.equilibria)
    c.Check(true, fmt::format("found (p, q) = ({:.6g}, {:.6g})", ne.a.p, ne.b.p));
  ExpectMember(c, r, StrategyParams::Mixed(0.5), StrategyParams::Mixed(0.2), {0.25, 1.5}, 1e-3,
               "(p, q) = (0.5, 0.2)");
  if (!r.equilibria.empty())
    c.Check(std::abs(r.equilibria[0].b.p - 0.2) <= 1e-3,
            fmt::format("equilibrium sits at (p, q) = ({:.6g}, {:.6g})", r.equilibria[0].a.p,
                        r.equilibria[0].b.p));
}

void Ac9(Criterion& c) {
  for (int g = 0; g < 2; ++g) {
    const ProductState s = ProductState::Make(0, g);
    const auto mes = CorrelationState::Mes(s);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Operator2 ua = ClassicalOpMatrix(ClassicalEmbedding(Player::kAlice, i, s));
        const Operator2 ub = ClassicalOpMatrix(ClassicalEmbedding(Player::kBob, j, s));
        const Payoffs p = ExpectedPayoffs(PlayRound(mes, ua, ub), kWelfare);
        const std::string cell = fmt::format("|0{}> ({},{})", g, kWelfare.row_labels[i], kWelfare.col_labels[j]);
        c.Near(p.first, kWelfare.AliceAt(i, j), 1e-12, cell + " payoff_a");
        c.Near(p.second, kWelfare.BobAt(i, j), 1e-12, cell + " payoff_b");
      }
  }
}

void Ac10(Criterion& c) {
  const auto mixed = StrategySpace::kClassicalMixed;
  const auto mes = Mes(0, 0);
  const NEReport a = FindNash(StrategySpace::kSu2One, mixed, mes, kWelfare, kDefault);
  ExpectMember(c, a, StrategyParams::Su2One(kPi / 2), StrategyParams::Mixed(0.2), {-0.2, 1.5}, 1e-3,
               "(a) one-parameter Alice");

  const NEReport b = FindNash(StrategySpace::kSu2Two, mixed, mes, kWelfare, kDefault);
  std::string seen;
  for (const auto& ne : b.equilibria)
    seen += fmt::format(" [{} vs {}: ({:.6g}, {:.6g})]", ne.a.Describe(), ne.b.Describe(),
                        ne.payoffs.first, ne.payoffs.second);
  c.Check(b.equilibria.empty(), "(b) two-parameter Alice: certified set not empty:" + seen);

  const double ps[] = {0, 0.25, 0.5, 0.75, 1};
  struct Fixed {
    double t, f, v;
    std::function<Payoffs(double)> want;
    const char* label;
  };
  const Fixed fixed[] = {
      {kPi / 2, kPi / 4, kPi / 4, [](double) { return Payoffs{0.25, 1.5}; }, "(c) (pi/2, pi/4, pi/4)"},
      {kPi / 2, 0, kPi / 2, [](double) { return Payoffs{1, 2.5}; }, "(c) (pi/2, 0, pi/2)"},
      {kPi / 2, 0, kPi / 4, [](double p) { return Payoffs{(1 + 3 * p) / 4, 2}; }, "(d) (pi/2, 0, pi/4)"},
  };
  for (const Fixed& f : fixed) {
    const Operator2 ua = ToMatrix(StrategyParams::Su2Three(f.t, f.f, f.v));
    for (double p : ps) {
      const Payoffs got = ExpectedPayoffs(PlayRoundMixedBob(mes, ua, p), kWelfare);
      c.Near(got.first, f.want(p).first, 1e-9, fmt::format("{} p={} payoff_a", f.label, p));
      c.Near(got.second, f.want(p).second, 1e-9, fmt::format("{} p={} payoff_b", f.label, p));
    }
  }
}

void Ac11(Criterion& c) {
  Gen gen(1101);
  const auto mes = Mes(0, 0), d00 = Dephased(0, 0);
  double e6 = 0, e7 = 0, e8 = 0, e12 = 0;
  for (int i = 0; i < 10000; ++i) {
    const double ta = gen.Uniform(0, kPi), tb = gen.Uniform(0, kPi);
    const Payoffs pipe = ExpectedPayoffs(
        PlayRound(mes, ToMatrix(StrategyParams::Su2One(ta)), ToMatrix(StrategyParams::Su2One(tb))), kWelfare);
    const Payoffs cf = closed_form::OneParam(ta, tb);
    e6 = std::max({e6, std::abs(pipe.first - cf.first), std::abs(pipe.second - cf.second)});
  }
  for (int i = 0; i < 10000; ++i) {
    const auto a = gen.RandomParams(StrategySpace::kSu2Two), b = gen.RandomParams(StrategySpace::kSu2Two);
    const OutcomeDistribution pipe = PlayRound(mes, ToMatrix(a), ToMatrix(b));
    const OutcomeDistribution cf = closed_form::TwoParamProbs(a.theta, a.phi, b.theta, b.phi);
    for (int n = 0; n < 4; ++n) e7 = std::max(e7, std::abs(pipe[n] - cf[n]));
  }
  for (int i = 0; i < 10000; ++i) {
    const auto a = gen.RandomParams(StrategySpace::kSu2Two), b = gen.RandomParams(StrategySpace::kSu2Two);
    const Payoffs pipe = ExpectedPayoffs(PlayRound(d00, ToMatrix(a), ToMatrix(b)), kWelfare);
    const Payoffs cf = closed_form::Dephased(a.theta, a.phi, b.theta, b.phi, closed_form::DephasedVariant::k00);
    e8 = std::max({e8, std::abs(pipe.first - cf.first), std::abs(pipe.second - cf.second)});
  }
  for (int i = 0; i < 10000; ++i) {
    const auto a = gen.RandomParams(StrategySpace::kSu2Three);
    const double p = gen.Uniform(0, 1);
    const OutcomeDistribution pipe = PlayRoundMixedBob(mes, ToMatrix(a), p);
    const OutcomeDistribution cf = closed_form::BobClassicalMix(a.theta, a.phi, a.varphi, p);
    for (int n = 0; n < 4; ++n) e12 = std::max(e12, std::abs(pipe[n] - cf[n]));
  }
  c.Near(e6, 0, 1e-9, "one-parameter payoffs");
  c.Near(e7, 0, 1e-9, "two-parameter probabilities");
  c.Near(e8, 0, 1e-9, "dephased |00> payoffs");
  c.Near(e12, 0, 1e-9, "Bob classical mixture probabilities");
}

void Ac12(Criterion& c) {
  Gen gen(1201);
  double unitary = 0, det = 0, trace = 0, herm = 0, norm = 0, linear = 0, oracle_err = 0;
  const StrategySpace spaces[] = {StrategySpace::kSu2One, StrategySpace::kSu2Two, StrategySpace::kSu2Three};
  const auto m00 = Mes(0, 0), m01 = Mes(0, 1);
  for (int i = 0; i < 10000; ++i) {
    const auto pa = gen.RandomParams(spaces[gen.Int(0, 2)]), pb = gen.RandomParams(spaces[gen.Int(0, 2)]);
    const Operator2 ua = ToMatrix(pa), ub = ToMatrix(pb);
    unitary = std::max({unitary, UnitarityDefect(ua), UnitarityDefect(ub)});
    det = std::max(det, std::abs(std::abs(ua.determinant()) - 1.0));

    const int f = gen.Bit(), g = gen.Bit();
    const double p = gen.Uniform(0, 1);
    const CorrelationState states[] = {Mes(f, g), Dephased(f, g), CorrelationState::FullRank(),
                                       CorrelationState::Corrupted(p)};
    const oracle::Ensemble ensembles[] = {oracle::Mes(f, g), oracle::Dephased(f, g), oracle::FullRank(),
                                          oracle::Corrupted(p)};
    const Operator4 joint = TensorProduct(ua, ub);
    for (int k = 0; k < 4; ++k) {
      const DensityMatrix out = ConjugateBy(states[k].rho, joint);
      trace = std::max(trace, std::abs(out.Trace() - 1.0));
      herm = std::max(herm, MaxAbs(out.matrix() - out.matrix().adjoint()));
      const OutcomeDistribution d = PlayRound(states[k], ua, ub);
      norm = std::max(norm, std::abs(d.Sum() - 1.0));
      const oracle::Op oa{{{ua(0, 0), ua(0, 1)}, {ua(1, 0), ua(1, 1)}}};
      const oracle::Op ob{{{ub(0, 0), ub(0, 1)}, {ub(1, 0), ub(1, 1)}}};
      const auto ref = oracle::Probabilities(ensembles[k], oa, ob);
      for (int n = 0; n < 4; ++n) oracle_err = std::max(oracle_err, std::abs(d[n] - ref[n]));
    }
    const Payoffs mix = ExpectedPayoffs(PlayRound(CorrelationState::Corrupted(p), ua, ub), kWelfare);
    const Payoffs x = ExpectedPayoffs(PlayRound(m00, ua, ub), kWelfare);
    const Payoffs y = ExpectedPayoffs(PlayRound(m01, ua, ub), kWelfare);
    linear = std::max({linear, std::abs(mix.first - (p * x.first + (1 - p) * y.first)),
                       std::abs(mix.second - (p * x.second + (1 - p) * y.second))});
  }
  c.Near(unitary, 0, Tolerances::kUnitarity, "strategy operator unitarity");
  c.Near(det, 0, 1e-12, "determinant modulus");
  c.Near(trace, 0, Tolerances::kDensity, "trace preservation");
  c.Near(herm, 0, Tolerances::kDensity, "hermiticity");
  c.Near(norm, 0, Tolerances::kNorm, "outcome normalization");
  c.Near(linear, 0, 1e-12, "corrupted-source linearity");
  c.Near(oracle_err, 0, 1e-12, "state-vector oracle agreement");
  const Operator4 j = BuildEntangler();
  c.Near(MaxAbs(j.adjoint() * j - Operator4::Identity()), 0, Tolerances::kUnitarity, "entangler unitarity");
}

}  // namespace
}  // namespace qgame

int main() {
  using namespace qgame;
  struct Entry {
    int id;
    const char* title;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {1, "classical analysis of the welfare game", Ac1},
      {2, "one-parameter equilibria under |00> and |01>", Ac2},
      {3, "unique two-parameter equilibrium under |00>", Ac3},
      {4, "four two-parameter equilibria under |01>", Ac4},
      {5, "extended 3x3 and 5x6 matrices", Ac5},
      {6, "corrupted-source equilibria", Ac6},
      {7, "classical correlations and full rank", Ac7},
      {8, "classical operators with dephased correlation", Ac8},
      {9, "classical operators with quantum correlation", Ac9},
      {10, "Bob restricted to classical mixtures", Ac10},
      {11, "closed forms against the pipeline", Ac11},
      {12, "protocol invariants", Ac12},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Entry& e : entries) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.Check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] AC %d: %s (%d checks, %.2fs)\n", c.ok() ? "PASS" : "FAIL", e.id, e.title,
                c.checks(), secs);
    for (const auto& f : c.failures()) std::printf("       - %s\n", f.c_str());
    failed += !c.ok();
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 12 criteria passed in %.1fs\n", 12 - failed, total);
  return failed == 0 ? 0 : 1;
}
