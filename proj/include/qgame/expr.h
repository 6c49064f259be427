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

#ifndef QGAME_EXPR_H_
#define QGAME_EXPR_H_

#include <string_view>

namespace qgame {

// Evaluates a small arithmetic expression used for angles and probabilities
// in scenario files: numbers, `pi`, + - * /, parentheses, juxtaposition as
// multiplication ("1/2 pi"), and sqrt, sin, cos, tan, asin, acos, atan.
// Throws Error(kConfigError) on malformed input or a non-finite result.
double EvaluateExpression(std::string_view text);

}  // namespace qgame

#endif  // QGAME_EXPR_H_
