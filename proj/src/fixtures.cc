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

#include "qgame/fixtures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/payoff_kernel.h"
#include "qgame/scenario.h"

namespace qgame {
namespace {

constexpr double kExact = 1e-12;
constexpr double kCell = 1e-9;
constexpr double kPayoff = 1e-6;
constexpr double kLocation = 1e-3;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Checker {
 public:
  explicit Checker(FixtureOutcome* out) : out_(out) {}

  void Near(std::string quantity, double expected, double actual, double tol,
            std::string location) {
    Comparison c;
    c.quantity = std::move(quantity);
    c.location = std::move(location);
    c.expected = RoundSignificant(expected);
    c.actual = std::isfinite(actual) ? FieldValue(RoundSignificant(actual)) : FieldValue("nan");
    const double dev = std::abs(actual - expected);
    c.deviation = dev;
    c.tolerance = tol;
    c.pass = dev <= tol;
    out_->comparisons.push_back(std::move(c));
  }

  void Same(std::string quantity, std::string expected, std::string actual, std::string location) {
    Comparison c;
    c.quantity = std::move(quantity);
    c.location = std::move(location);
    c.pass = expected == actual;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    out_->comparisons.push_back(std::move(c));
  }

  void Count(std::string quantity, std::int64_t expected, std::int64_t actual,
             std::string location) {
    Comparison c;
    c.quantity = std::move(quantity);
    c.location = std::move(location);
    c.expected = expected;
    c.actual = actual;
    c.pass = expected == actual;
    out_->comparisons.push_back(std::move(c));
  }

  void Flag(std::string quantity, bool expected, bool actual, std::string location) {
    Comparison c;
    c.quantity = std::move(quantity);
    c.location = std::move(location);
    c.expected = expected;
    c.actual = actual;
    c.pass = expected == actual;
    out_->comparisons.push_back(std::move(c));
  }

 private:
  FixtureOutcome* out_;
};

const PayoffMatrix2x2& Welfare() {
  static const PayoffMatrix2x2 m = WelfareGame();
  return m;
}

CorrelationState Mes(int f, int g) { return CorrelationState::Mes(ProductState::Make(f, g)); }
CorrelationState Dephased(int f, int g) {
  return CorrelationState::Dephased(ProductState::Make(f, g));
}

std::string Case(DilemmaCase c) { return std::string(DilemmaCaseName(c)); }

double ProfileDeviation(const StrategyParams& x, const StrategyParams& y) {
  if (x.space != y.space) return kNaN;
  switch (x.space) {
    case StrategySpace::kClassicalMixed: return std::abs(x.p - y.p);
    case StrategySpace::kClassicalPure: return x.pure_move == y.pure_move ? 0.0 : kPi;
    default: return RotationAngle(ToMatrix(x), ToMatrix(y));
  }
}

struct Match {
  const CandidateNE* ne = nullptr;
  double deviation = kNaN;
};

// The certified equilibrium closest to (a, b), measured by the larger of the
// two players' deviations.
Match Closest(const NEReport& report, const StrategyParams& a, const StrategyParams& b) {
  Match best;
  for (const auto& ne : report.equilibria) {
    const double d = std::max(ProfileDeviation(ne.a, a), ProfileDeviation(ne.b, b));
    if (!best.ne || d < best.deviation) best = {&ne, d};
  }
  return best;
}

// Checks that (a, b) is in the certified set with the stated payoffs.
void ExpectMember(Checker& ck, const NEReport& report, const std::string& label,
                  const StrategyParams& a, const StrategyParams& b, Payoffs expected,
                  const std::string& location) {
  const Match m = Closest(report, a, b);
  ck.Near(label + " location", 0.0, m.deviation, kLocation, location);
  ck.Near(label + " payoff_a", expected.first, m.ne ? m.ne->payoffs.first : kNaN, kPayoff, location);
  ck.Near(label + " payoff_b", expected.second, m.ne ? m.ne->payoffs.second : kNaN, kPayoff,
          location);
}

// Checks that (a, b) is an equilibrium of the given spaces by direct
// certification, and its payoffs.
void ExpectCertified(Checker& ck, const std::string& label, const StrategyParams& a,
                     const StrategyParams& b, const CorrelationState& state, Payoffs expected,
                     const SearchConfig& cfg, const std::string& location) {
  const DeviationGaps gaps = VerifyNe(a, b, state, Welfare(), cfg);
  ck.Near(label + " gap_a", 0.0, gaps.gap_a, cfg.epsilon, location);
  ck.Near(label + " gap_b", 0.0, gaps.gap_b, cfg.epsilon, location);
  const Payoffs p = PipelinePayoffs(state, Welfare(), Realize(a), Realize(b));
  ck.Near(label + " payoff_a", expected.first, p.first, kPayoff, location);
  ck.Near(label + " payoff_b", expected.second, p.second, kPayoff, location);
}

void ExpectMatrix(Checker& ck, const ExtendedMatrix& em,
                  const std::vector<std::vector<Payoffs>>& expected,
                  const std::vector<std::pair<int, int>>& boxed, const std::string& location) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected[i].size(); ++j) {
      const std::string cell = fmt::format("({},{})", em.row_ops[i], em.col_ops[j]);
      ck.Near(cell + " payoff_a", expected[i][j].first, em.cells[i][j].first, kCell, location);
      ck.Near(cell + " payoff_b", expected[i][j].second, em.cells[i][j].second, kCell, location);
      const bool want = std::find(boxed.begin(), boxed.end(),
                                  std::pair<int, int>(static_cast<int>(i), static_cast<int>(j))) !=
                        boxed.end();
      ck.Flag(cell + " marked NE", want, em.ne_cells[i][j], location);
    }
  }
}

SearchConfig Config(const SearchConfig& base) { return base; }

std::vector<NamedOperator> Ops(std::initializer_list<const char*> names) {
  std::vector<NamedOperator> out;
  for (const char* n : names) out.push_back(ReferenceOperator(n));
  return out;
}

// --------------------------------------------------------------------------

void Table2(Checker& ck, const SearchConfig&) {
  const std::string loc = "Table II, payoff matrix of the Welfare game";
  const PayoffMatrix2x2& m = Welfare();
  const std::array<double, 4> a{3, -1, -1, 0}, b{2, 3, 1, 0};
  const char* cells[] = {"(A,W)", "(A,L)", "(N,W)", "(N,L)"};
  for (int n = 0; n < 4; ++n) {
    ck.Near(fmt::format("{} payoff_a", cells[n]), a[n], m.alice[n], kExact, loc);
    ck.Near(fmt::format("{} payoff_b", cells[n]), b[n], m.bob[n], kExact, loc);
  }
  ck.Count("pure NE count", 0, static_cast<std::int64_t>(PureNash(m).size()),
           "Section II, \"there is no NE in pure strategies\"");
}

void Section2(Checker& ck, const SearchConfig&) {
  const std::string loc = "Section II, \"p=0.5 and q=0.2 correspond to the NE\"";
  const MixedNashResult r = MixedNash2x2(Welfare());
  ck.Count("pure NE count", 0, static_cast<std::int64_t>(r.pure.size()), loc);
  ck.Near("mixed NE p", 0.5, r.interior ? r.interior->p : kNaN, kExact, loc);
  ck.Near("mixed NE q", 0.2, r.interior ? r.interior->q : kNaN, kExact, loc);
  ck.Near("payoff_a", -0.2, r.payoffs.first, kExact, "Section II, \"$_{A}=-0.2\"");
  ck.Near("payoff_b", 1.5, r.payoffs.second, kExact, loc);
  ck.Same("dilemma", "CASE_I", Case(GetDilemmaCase(r.payoffs, r.pure.empty())), loc);
}

void Eq6Ne(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Section III.A.1, \"(theta_A=pi/2, cos theta_B=-3/5)\"";
  const NEReport r00 = FindNash(StrategySpace::kSu2One, StrategySpace::kSu2One, Mes(0, 0),
                                Welfare(), cfg);
  ExpectMember(ck, r00, "|00> NE", StrategyParams::Su2One(kPi / 2),
               StrategyParams::Su2One(std::acos(-0.6)), {-0.2, 1.5}, loc);
  ck.Same("|00> dilemma", "CASE_I", Case(r00.dilemma), loc);

  const std::string loc01 = "Section III.A.1, mirror case for |01>, cos theta_B = 3/5";
  const NEReport r01 = FindNash(StrategySpace::kSu2One, StrategySpace::kSu2One, Mes(0, 1),
                                Welfare(), cfg);
  ExpectMember(ck, r01, "|01> NE", StrategyParams::Su2One(kPi / 2),
               StrategyParams::Su2One(std::acos(0.6)), {-0.2, 1.5}, loc01);
}

void Table3(Checker& ck, const SearchConfig&) {
  const std::string loc = "Table III, \"new payoff matrix for the Welfare\"";
  const auto extra = Ops({"M"});
  const ExtendedMatrix em = BuildExtendedMatrix(Welfare(), extra, extra, Mes(0, 0), ProductState{});
  ExpectMatrix(ck, em,
               {{{3, 2}, {-1, 3}, {0, 0}}, {{-1, 1}, {0, 0}, {-1, 3}}, {{0, 0}, {-1, 1}, {3, 2}}},
               {{2, 2}}, loc);
}

void Section3a2(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Section III.A.2, \"unique NE which appears at\"";
  const NEReport r00 = FindNash(StrategySpace::kSu2Two, StrategySpace::kSu2Two, Mes(0, 0),
                                Welfare(), cfg);
  const auto isz = StrategyParams::Su2Two(0, kPi / 2);
  ck.Count("|00> equilibria", 1, static_cast<std::int64_t>(r00.equilibria.size()), loc);
  ExpectMember(ck, r00, "|00> (i sz, i sz)", isz, isz, {3, 2}, loc);
  ck.Same("|00> dilemma", "CASE_III", Case(r00.dilemma),
          "Section III.A.2, \"resolved in the stronger sense (CASE III)\"");

  const std::string loc01 = "Section III.A.2, \"we found four NE's with equal payoffs\"";
  const NEReport r01 = FindNash(StrategySpace::kSu2Two, StrategySpace::kSu2Two, Mes(0, 1),
                                Welfare(), cfg);
  ck.Count("|01> equilibria", 4, static_cast<std::int64_t>(r01.equilibria.size()), loc01);
  const std::pair<double, double> pairs[] = {
      {kPi, 0.0}, {kPi / 2, kPi / 2}, {2 * kPi / 3, kPi / 3}, {3 * kPi / 4, kPi / 4}};
  const char* names[] = {"(N,P)", "(T,Q)", "(Y,R)", "(Z,S)"};
  for (int k = 0; k < 4; ++k) {
    const auto a = StrategyParams::Su2Two(pairs[k].first, 0.0);
    const auto b = StrategyParams::Su2Two(pairs[k].second, kPi / 2);
    ExpectCertified(ck, fmt::format("|01> {}", names[k]), a, b, Mes(0, 1), {3, 2}, cfg, loc01);
  }
  ck.Same("|01> dilemma", "NOT_APPLICABLE", Case(r01.dilemma),
          "Table IX, \"n.a which stands for\"");
}

void Table4(Checker& ck, const SearchConfig&) {
  const std::string loc = "Table IV, \"share the quantum correlation\"";
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r23 = std::sqrt(2.0 + std::sqrt(3.0));
  const ExtendedMatrix em = BuildExtendedMatrix(Welfare(), Ops({"T", "Y", "Z"}),
                                                Ops({"P", "Q", "R", "S"}), Mes(0, 1),
                                                ProductState::Make(0, 1));
  const Payoffs s2p{1 + r2, (6 + r2) / 4}, s2m{1 - r2, (6 - r2) / 4};
  const Payoffs s3p{1 + r3, (6 + r3) / 4}, s23{1 + r23, (6 + r23) / 4};
  ExpectMatrix(ck, em,
               {
                   {{3, 2}, {-1, 3}, {-1, 1}, {1, 1.5}, {0, 1.25}, s2m},
                   {{-1, 1}, {0, 0}, {3, 2}, {1, 1.5}, {2, 1.75}, s2p},
                   {{1, 1.5}, {-0.5, 1.5}, {1, 1.5}, {3, 2}, s3p, s2p},
                   {{0, 1.25}, {-0.25, 0.75}, {2, 1.75}, s3p, {3, 2}, s23},
                   {s2m, {(r2 - 2) / 4, 3 * (2 - r2) / 4}, s2p, s2p, s23, {3, 2}},
               },
               {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, loc);
}

void Table5(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Table V, \"when the source is corrupted\"";
  const auto s0 = StrategyParams::Su2Two(0, 0);
  const auto isy = StrategyParams::Su2Two(kPi, 0);
  const auto isz = StrategyParams::Su2Two(0, kPi / 2);
  struct Row {
    double p;
    const char* label;
    StrategyParams a, b;
    Payoffs pay;
  };
  const Row rows[] = {
      {0.25, "(s0,s0)", s0, s0, {0, 2.75}},      {0.25, "(i sy,i sz)", isy, isz, {2, 2.25}},
      {0.5, "(s0,i sy)", s0, isy, {1, 2.5}},     {0.5, "(i sy,i sz)", isy, isz, {1, 2.5}},
      {0.5, "(i sz,i sz)", isz, isz, {1, 2.5}},  {0.75, "(s0,i sy)", s0, isy, {0, 2.75}},
      {0.75, "(i sz,i sz)", isz, isz, {2, 2.25}},
  };
  const double ps[] = {0.25, 0.5, 0.75};
  const auto reports =
      CorruptedSweep(ps, StrategySpace::kSu2Two, StrategySpace::kSu2Two, Welfare(), cfg);
  for (const Row& row : rows) {
    const std::size_t k = row.p == 0.25 ? 0 : row.p == 0.5 ? 1 : 2;
    ExpectMember(ck, reports[k], fmt::format("p={} {}", row.p, row.label), row.a, row.b, row.pay,
                 loc);
  }
}

void Section3b(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const auto two = StrategySpace::kSu2Two;
  const auto t2 = StrategyParams::Su2Two(kPi / 2, 0);

  const std::string loc00 = "Section III.B, \"there appears an NE with a payoff (0.25,1.5)\"";
  const NEReport d00 = FindNash(two, two, Dephased(0, 0), Welfare(), cfg);
  ExpectMember(ck, d00, "dephased |00> (T,T)", t2, t2, {0.25, 1.5}, loc00);

  const std::string loc01 = "Section III.B, \"gives the payoffs as (2.5,1)\"";
  const NEReport d01 = FindNash(two, two, Dephased(0, 1), Welfare(), cfg);
  ExpectMember(ck, d01, "dephased |01> (T, i(sy+sz)/sqrt2)", t2, StrategyParams::Su2Two(kPi / 2, kPi / 2),
               {2.5, 1.0}, loc01);
  ck.Same("dephased |01> dilemma", "CASE_III", Case(d01.dilemma),
          "Section III.B, \"Therefore dilemma is resolved (CASE III)\"");

  const std::string locf = "Section III.B, \"constant payoff (0.25, 1.5)\"";
  const NEReport full = FindNash(two, two, CorrelationState::FullRank(), Welfare(), cfg);
  ck.Flag("full rank flat", true, full.flat, locf);
  ck.Near("full rank payoff_a", 0.25, full.flat_payoffs ? full.flat_payoffs->first : kNaN, kCell, locf);
  ck.Near("full rank payoff_b", 1.5, full.flat_payoffs ? full.flat_payoffs->second : kNaN, kCell, locf);
  ck.Same("full rank dilemma", "CASE_II", Case(full.dilemma), locf);

  const std::string loc1 = "Section III.B, \"independent of the classical correlation they share\"";
  const auto t1 = StrategyParams::Su2One(kPi / 2);
  for (int g = 0; g < 2; ++g) {
    const NEReport r = FindNash(StrategySpace::kSu2One, StrategySpace::kSu2One, Dephased(0, g),
                                Welfare(), cfg);
    ExpectMember(ck, r, fmt::format("one-parameter dephased |0{}> (T,T)", g), t1, t1, {0.25, 1.5},
                 loc1);
  }
}

void Section3d(Checker& ck, const SearchConfig&) {
  const std::string loc = "Section III.D, \"reduces to players' application of\"";
  for (int g = 0; g < 2; ++g) {
    const ProductState init = ProductState::Make(0, g);
    const ExtendedMatrix em = BuildExtendedMatrix(Welfare(), {}, {}, CorrelationState::Mes(init), init);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const std::string cell = fmt::format("|0{}> ({},{})", g, em.row_ops[i], em.col_ops[j]);
        ck.Near(cell + " payoff_a", Welfare().AliceAt(i, j), em.cells[i][j].first, kExact, loc);
        ck.Near(cell + " payoff_b", Welfare().BobAt(i, j), em.cells[i][j].second, kExact, loc);
      }
    }
  }
}

void Table6(Checker& ck, const SearchConfig&) {
  const std::string loc = "Table VI, classical operations with shared classical correlation";
  const ExtendedMatrix em = BuildExtendedMatrix(Welfare(), {}, {}, Dephased(0, 0), ProductState{});
  ExpectMatrix(ck, em, {{{1.5, 1}, {-1, 2}}, {{-1, 2}, {1.5, 1}}}, {}, loc);

  const std::string loc01 = "Section III.C, \"with diagonal and off-diagonal elements interchanged\"";
  // Operators (sigma_0, i sigma_y) on each side, evaluated directly.
  const Operator2 ops[2] = {pauli::Identity(), pauli::IY()};
  const Payoffs want01[2][2] = {{{-1, 2}, {1.5, 1}}, {{1.5, 1}, {-1, 2}}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Payoffs p = ExpectedPayoffs(PlayRound(Dephased(0, 1), ops[i], ops[j]), Welfare());
      const std::string cell = fmt::format("|01> ({},{})", i ? "i sy" : "s0", j ? "i sy" : "s0");
      ck.Near(cell + " payoff_a", want01[i][j].first, p.first, kExact, loc01);
      ck.Near(cell + " payoff_b", want01[i][j].second, p.second, kExact, loc01);
    }
  }
}

void Table7(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Table VII, strategies where NE points emerge";
  const auto one = [](double t) { return StrategyParams::Su2One(t); };
  const auto two = [](double t, double f) { return StrategyParams::Su2Two(t, f); };
  const double tb00 = 2 * std::acos(1 / std::sqrt(5.0));  // (s0 + 2i sy)/sqrt5
  const double tb01 = 2 * std::acos(2 / std::sqrt(5.0));  // (2 s0 + i sy)/sqrt5

  {
    // Without shared correlation U(theta) on |0> is the classical mixture
    // with p = cos^2(theta/2).
    const double p = std::pow(std::cos(kPi / 4), 2), q = std::pow(std::cos(tb00 / 2), 2);
    const MixedNashResult r = MixedNash2x2(Welfare());
    const Payoffs pay = MixedPayoffs(Welfare(), {p, q});
    ck.Near("no corr (T, (s0+2i sy)/sqrt5) p", r.interior ? r.interior->p : kNaN, p, kPayoff, loc);
    ck.Near("no corr (T, (s0+2i sy)/sqrt5) q", r.interior ? r.interior->q : kNaN, q, kPayoff, loc);
    ck.Near("no corr payoff_a", -0.2, pay.first, kPayoff, loc);
    ck.Near("no corr payoff_b", 1.5, pay.second, kPayoff, loc);
  }
  ExpectCertified(ck, "|00> one-param (T, (s0+2i sy)/sqrt5)", one(kPi / 2), one(tb00), Mes(0, 0),
                  {-0.2, 1.5}, cfg, loc);
  ExpectCertified(ck, "|00> (i sz, i sz)", two(0, kPi / 2), two(0, kPi / 2), Mes(0, 0), {3, 2}, cfg,
                  loc);
  ExpectCertified(ck, "|01> one-param (T, (2s0+i sy)/sqrt5)", one(kPi / 2), one(tb01), Mes(0, 1),
                  {-0.2, 1.5}, cfg, loc);
  ExpectCertified(ck, "|01> (i sy, i sz)", two(kPi, 0), two(0, kPi / 2), Mes(0, 1), {3, 2}, cfg, loc);
  ExpectCertified(ck, "|01> (T,Q)", two(kPi / 2, 0), two(kPi / 2, kPi / 2), Mes(0, 1), {3, 2}, cfg, loc);
  ExpectCertified(ck, "|01> (Y,R)", two(2 * kPi / 3, 0), two(kPi / 3, kPi / 2), Mes(0, 1), {3, 2}, cfg,
                  loc);
  ExpectCertified(ck, "|01> (Z,S)", two(3 * kPi / 4, 0), two(kPi / 4, kPi / 2), Mes(0, 1), {3, 2}, cfg,
                  loc);
  ExpectCertified(ck, "dephased |00> one-param (T,T)", one(kPi / 2), one(kPi / 2), Dephased(0, 0),
                  {0.25, 1.5}, cfg, loc);
  ExpectCertified(ck, "dephased |00> (phi_A=0, T)", two(kPi / 2, 0), two(kPi / 2, 0), Dephased(0, 0),
                  {0.25, 1.5}, cfg, loc);
  ExpectCertified(ck, "dephased |01> one-param (T,T)", one(kPi / 2), one(kPi / 2), Dephased(0, 1),
                  {0.25, 1.5}, cfg, loc);
  ExpectCertified(ck, "dephased |01> (T, i(sy+sz)/sqrt2)", two(kPi / 2, 0), two(kPi / 2, kPi / 2),
                  Dephased(0, 1), {2.5, 1}, cfg, loc);
  // Full rank: every profile pays the same; sample a handful of them.
  const double samples[][4] = {{0, 0, 0, 0}, {kPi / 3, 0.2, 2.0, 1.1}, {kPi, kPi / 2, 0.7, 0.4}};
  for (const auto& s : samples) {
    const Payoffs p = PipelinePayoffs(CorrelationState::FullRank(), Welfare(),
                                      Realize(two(s[0], s[1])), Realize(two(s[2], s[3])));
    const std::string what = fmt::format("full rank ({:.3g},{:.3g};{:.3g},{:.3g})", s[0], s[1], s[2], s[3]);
    ck.Near(what + " payoff_a", 0.25, p.first, kCell, loc);
    ck.Near(what + " payoff_b", 1.5, p.second, kCell, loc);
  }
}

void Table8(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Table VIII, classical operators, mixed strategies (p,q)";
  const auto mixed = StrategySpace::kClassicalMixed, pure = StrategySpace::kClassicalPure;
  {
    const MixedNashResult r = MixedNash2x2(Welfare());
    ck.Near("no corr p", 0.5, r.interior ? r.interior->p : kNaN, kPayoff, loc);
    ck.Near("no corr q", 0.2, r.interior ? r.interior->q : kNaN, kPayoff, loc);
    ck.Near("no corr payoff_a", -0.2, r.payoffs.first, kPayoff, loc);
    ck.Near("no corr payoff_b", 1.5, r.payoffs.second, kPayoff, loc);
  }
  struct Row {
    const char* label;
    CorrelationState state;
    double p, q;
    Payoffs pay;
  };
  const Row rows[] = {
      {"|00> MES", Mes(0, 0), 0.5, 0.2, {-0.2, 1.5}},
      {"|01> MES", Mes(0, 1), 0.5, 0.8, {-0.2, 1.5}},
      {"dephased |00>", Dephased(0, 0), 0.5, 0.5, {0.25, 1.5}},
      {"dephased |01>", Dephased(0, 1), 0.5, 0.5, {0.25, 1.5}},
  };
  for (const Row& row : rows) {
    const NEReport r = FindNash(mixed, mixed, row.state, Welfare(), cfg);
    ck.Count(std::string(row.label) + " equilibria", 1, static_cast<std::int64_t>(r.equilibria.size()), loc);
    ExpectMember(ck, r, std::string(row.label) + " (p,q)", StrategyParams::Mixed(row.p),
                 StrategyParams::Mixed(row.q), row.pay, loc);
    const NEReport rp = FindNash(pure, pure, row.state, Welfare(), cfg);
    ck.Count(std::string(row.label) + " pure-strategy equilibria", 0,
             static_cast<std::int64_t>(rp.equilibria.size()), "Table VIII, \"In pure strategies there is no NE\"");
  }
  const NEReport full = FindNash(mixed, mixed, CorrelationState::FullRank(), Welfare(), cfg);
  ck.Flag("full rank flat", true, full.flat, loc);
  ck.Near("full rank payoff_a", 0.25, full.flat_payoffs ? full.flat_payoffs->first : kNaN, kCell, loc);
  ck.Near("full rank payoff_b", 1.5, full.flat_payoffs ? full.flat_payoffs->second : kNaN, kCell, loc);
}

void Section4(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const auto mixed = StrategySpace::kClassicalMixed;
  const CorrelationState mes = Mes(0, 0);

  const std::string loca = "Section IV, \"there is an NE for p=0.2 and theta_A=pi/2\"";
  const NEReport one = FindNash(StrategySpace::kSu2One, mixed, mes, Welfare(), cfg);
  ExpectMember(ck, one, "one-parameter Alice", StrategyParams::Su2One(kPi / 2),
               StrategyParams::Mixed(0.2), {-0.2, 1.5}, loca);

  const std::string locb = "Section IV, \"there is no NE in the game and\"";
  const NEReport two = FindNash(StrategySpace::kSu2Two, mixed, mes, Welfare(), cfg);
  ck.Count("two-parameter Alice equilibria", 0, static_cast<std::int64_t>(two.equilibria.size()), locb);

  struct Op {
    const char* label;
    double t, f, v;
    std::function<Payoffs(double)> expect;
    const char* loc;
  };
  const Op ops[] = {
      {"(pi/2, pi/4, pi/4)", kPi / 2, kPi / 4, kPi / 4, [](double) { return Payoffs{0.25, 1.5}; },
       "Section IV, \"The players get the payoffs (0.25,1.5) and (1,2.5)\""},
      {"(pi/2, 0, pi/2)", kPi / 2, 0, kPi / 2, [](double) { return Payoffs{1, 2.5}; },
       "Section IV, \"The players get the payoffs (0.25,1.5) and (1,2.5)\""},
      {"(pi/2, 0, pi/4)", kPi / 2, 0, kPi / 4, [](double p) { return Payoffs{(1 + 3 * p) / 4, 2}; },
       "Section IV, \"$_A=(1+3p)/4\""},
      {"(pi/2, pi/4, pi/2)", kPi / 2, kPi / 4, kPi / 2, [](double p) { return Payoffs{1 - 3 * p / 4, 2}; },
       "Section IV, \"$_A=1-3p/4\""},
  };
  for (const Op& op : ops) {
    const Realization a = Realize(StrategyParams::Su2Three(op.t, op.f, op.v));
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const Payoffs got = PipelinePayoffs(mes, Welfare(), a, Realize(StrategyParams::Mixed(p)));
      const Payoffs want = op.expect(p);
      ck.Near(fmt::format("{} p={} payoff_a", op.label, p), want.first, got.first, kCell, op.loc);
      ck.Near(fmt::format("{} p={} payoff_b", op.label, p), want.second, got.second, kCell, op.loc);
    }
  }
}

void Table9(Checker& ck, const SearchConfig& base) {
  const SearchConfig cfg = Config(base);
  const std::string loc = "Table IX, \"Solutions to the dilemma in\"";
  const auto mixed = StrategySpace::kClassicalMixed;
  const auto one = StrategySpace::kSu2One, two = StrategySpace::kSu2Two;

  // No shared correlation: every column reduces to the classical mixed game.
  const MixedNashResult nc = MixedNash2x2(Welfare());
  const std::string no_corr = Case(GetDilemmaCase(nc.payoffs, nc.interior && nc.pure.empty()));
  for (const char* col : {"Class. Op.", "Q1", "Q2"})
    ck.Same(fmt::format("No Corr. / {}", col), "CASE_I", no_corr, loc);

  struct Row {
    const char* label;
    CorrelationState state;
    const char* expected[3];
  };
  const Row rows[] = {
      {"Class. Corr. |00>", Dephased(0, 0), {"CASE_II", "CASE_II", "CASE_II"}},
      {"Class. Corr. |01>", Dephased(0, 1), {"CASE_II", "CASE_II", "CASE_III"}},
      {"Full rank", CorrelationState::FullRank(), {"CASE_II", "CASE_II", "CASE_II"}},
      {"Quant. Corr. |00>", Mes(0, 0), {"CASE_I", "CASE_I", "CASE_III"}},
      {"Quant. Corr. |01>", Mes(0, 1), {"CASE_I", "CASE_I", "NOT_APPLICABLE"}},
  };
  const StrategySpace spaces[] = {mixed, one, two};
  const char* cols[] = {"Class. Op.", "Q1", "Q2"};
  for (const Row& row : rows) {
    for (int c = 0; c < 3; ++c) {
      const NEReport r = FindNash(spaces[c], spaces[c], row.state, Welfare(), cfg);
      ck.Same(fmt::format("{} / {}", row.label, cols[c]), row.expected[c], Case(r.dilemma), loc);
    }
  }
}

struct FixtureDef {
  FixtureInfo info;
  std::function<void(Checker&, const SearchConfig&)> run;
};

const std::vector<FixtureDef>& Registry() {
  static const std::vector<FixtureDef> defs = {
      {{"table-2", "Welfare game payoff matrix", "Table II, payoff matrix of the Welfare game"}, Table2},
      {{"section-2", "Classical mixed equilibrium", "Section II, \"average payoffs given as $_A=-0.2\""},
       Section2},
      {{"eq6-ne", "One-parameter equilibrium under shared entanglement",
        "Section III.A.1, \"players can achieve an NE if they choose\""},
       Eq6Ne},
      {{"table-3", "Extended matrix with i sigma_z, |00>", "Table III, \"new payoff matrix for the Welfare\""},
       Table3},
      {{"section-3a2", "Two-parameter equilibria, |00> and |01>",
        "Section III.A.2, \"unique NE which appears at\""},
       Section3a2},
      {{"table-4", "Extended 5x6 matrix, |01>", "Table IV, \"share the quantum correlation\""}, Table4},
      {{"table-5", "Corrupted source equilibria", "Table V, \"when the source is corrupted\""}, Table5},
      {{"section-3b", "Quantum operations with classical correlations",
        "Section III.B, \"Quantum operations and classical correlations\""},
       Section3b},
      {{"section-3d", "Classical operations with quantum correlations",
        "Section III.D, \"reduces to players' application of\""},
       Section3d},
      {{"table-6", "Classical operations with classical correlation",
        "Table VI, classical operations with shared classical correlation"},
       Table6},
      {{"table-7", "Equilibria of quantum operations", "Table VII, strategies where NE points emerge"},
       Table7},
      {{"table-8", "Equilibria of classical operations",
        "Table VIII, classical operators, mixed strategies (p,q)"},
       Table8},
      {{"section-4", "Bob restricted to classical operations",
        "Section IV, \"Bob restricted to only classical operations\""},
       Section4},
      {{"table-9", "Dilemma grading", "Table IX, \"Solutions to the dilemma in\""}, Table9},
  };
  return defs;
}

}  // namespace

bool FixtureOutcome::passed() const { return failures() == 0 && !comparisons.empty(); }

std::size_t FixtureOutcome::failures() const {
  return std::count_if(comparisons.begin(), comparisons.end(),
                       [](const Comparison& c) { return !c.pass; });
}

std::vector<FixtureInfo> ListFixtures() {
  std::vector<FixtureInfo> out;
  for (const auto& d : Registry()) out.push_back(d.info);
  return out;
}

FixtureOutcome RunFixture(std::string_view id, const SearchConfig& base) {
  for (const auto& d : Registry()) {
    if (d.info.id != id) continue;
    FixtureOutcome out;
    out.info = d.info;
    Checker ck(&out);
    d.run(ck, base);
    return out;
  }
  throw Error(ErrorCode::kUnknownFixture, fmt::format("no fixture named '{}'", id));
}

ReportDocument FixtureReport(const FixtureOutcome& outcome) {
  ReportDocument doc;
  Record header("report");
  header.Add("tool", "qgame")
      .Add("mode", "reproduce")
      .Add("fixture", outcome.info.id)
      .Add("csv_kind", "comparison");
  doc.records.push_back(std::move(header));
  Record info("fixture");
  info.Add("id", outcome.info.id).Add("title", outcome.info.title).Add("location", outcome.info.location);
  doc.records.push_back(std::move(info));
  for (const Comparison& c : outcome.comparisons) {
    Record r("comparison");
    r.Add("fixture", outcome.info.id).Add("quantity", c.quantity);
    r.fields.emplace_back("expected", c.expected);
    r.fields.emplace_back("actual", c.actual);
    if (c.deviation) r.Add("deviation", *c.deviation);
    if (c.tolerance) r.Add("tolerance", *c.tolerance);
    r.Add("pass", c.pass).Add("location", c.location);
    doc.records.push_back(std::move(r));
  }
  Record summary("fixture_summary");
  summary.Add("fixture", outcome.info.id)
      .Add("comparisons", outcome.comparisons.size())
      .Add("failed", outcome.failures())
      .Add("status", outcome.passed() ? "pass" : "fail");
  doc.records.push_back(std::move(summary));
  return doc;
}

NamedOperator ReferenceOperator(std::string_view name) {
  const double r3 = std::sqrt(3.0);
  struct Entry {
    const char* name;
    double a0, ax, ay, az;
  };
  const Entry table[] = {
      {"M", 0, 0, 0, 1},
      {"N", 0, 0, 1, 0},
      {"T", 1, 0, 1, 0},
      {"Y", 1, 0, r3, 0},
      {"Z", std::cos(3 * kPi / 8), 0, std::sin(3 * kPi / 8), 0},
      {"P", 0, 0, 0, 1},
      {"Q", 0, 0, 1, 1},
      {"R", 0, 0, 1, r3},
      {"S", 0, 0, std::sin(kPi / 8), std::cos(kPi / 8)},
  };
  for (const Entry& e : table)
    if (e.name == name) return {e.name, QuaternionOperator(e.a0, e.ax, e.ay, e.az)};
  throw Error(ErrorCode::kUnknownLabel, fmt::format("no reference operator '{}'", name));
}

double RotationAngle(const Operator2& u, const Operator2& v) {
  const double overlap = std::min(1.0, std::abs((u.adjoint() * v).trace()) / 2.0);
  return 2.0 * std::acos(overlap);
}

}  // namespace qgame
