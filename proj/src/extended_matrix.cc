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

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "qgame/equilibrium.h"
#include "qgame/errors.h"

namespace qgame {
namespace {

constexpr double kTieTolerance = 1e-9;

std::vector<NamedOperator> Embedded(const std::array<std::string, 2>& labels, Player player,
                                    std::span<const NamedOperator> extra, ProductState initial) {
  std::vector<NamedOperator> ops;
  for (int move = 0; move < 2; ++move)
    ops.push_back({labels[move], ClassicalOpMatrix(ClassicalEmbedding(player, move, initial))});
  ops.insert(ops.end(), extra.begin(), extra.end());
  std::set<std::string> seen;
  for (const auto& op : ops) {
    if (!seen.insert(op.name).second)
      throw Error(ErrorCode::kBadParameter, fmt::format("duplicate operator name '{}'", op.name));
  }
  return ops;
}

}  // namespace

ExtendedMatrix BuildExtendedMatrix(const PayoffMatrix2x2& m, std::span<const NamedOperator> extra_a,
                                   std::span<const NamedOperator> extra_b,
                                   const CorrelationState& state, ProductState initial) {
  m.Validate();
  const auto rows = Embedded(m.row_labels, Player::kAlice, extra_a, initial);
  const auto cols = Embedded(m.col_labels, Player::kBob, extra_b, initial);

  ExtendedMatrix out;
  for (const auto& r : rows) out.row_ops.push_back(r.name);
  for (const auto& c : cols) out.col_ops.push_back(c.name);
  out.cells.assign(rows.size(), std::vector<Payoffs>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.cells[i][j] = ExpectedPayoffs(PlayRound(state, rows[i].op, cols[j].op), m);

  out.ne_cells.assign(rows.size(), std::vector<bool>(cols.size(), false));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool alice_best = true, bob_best = true;
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (out.cells[k][j].first > out.cells[i][j].first + kTieTolerance) alice_best = false;
      for (std::size_t k = 0; k < cols.size(); ++k)
        if (out.cells[i][k].second > out.cells[i][j].second + kTieTolerance) bob_best = false;
      out.ne_cells[i][j] = alice_best && bob_best;
    }
  }
  return out;
}

}  // namespace qgame
