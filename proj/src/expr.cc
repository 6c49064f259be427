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

#include "qgame/expr.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "qgame/errors.h"
#include "qgame/strategy.h"

namespace qgame {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double Parse() {
    const double v = Sum();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected trailing input");
    if (!std::isfinite(v)) Fail("value is not finite");
    return v;
  }

 private:
  [[noreturn]] void Fail(std::string_view why) const {
    throw Error(ErrorCode::kConfigError,
                fmt::format("bad expression '{}' at offset {}: {}", text_, pos_, why));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  double Sum() {
    double v = Product();
    for (char c = Peek(); c == '+' || c == '-'; c = Peek()) {
      ++pos_;
      v = c == '+' ? v + Product() : v - Product();
    }
    return v;
  }

  double Product() {
    double v = Unary();
    while (true) {
      const char c = Peek();
      if (c == '*') {
        ++pos_;
        v *= Unary();
      } else if (c == '/') {
        ++pos_;
        const double d = Unary();
        if (d == 0.0) Fail("division by zero");
        v /= d;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        // Juxtaposition ("1/2 pi", "3(1+2)"); two adjacent numbers are an error.
        v *= Unary();
      } else {
        return v;
      }
    }
  }

  double Unary() {
    const char c = Peek();
    if (c == '-') {
      ++pos_;
      return -Unary();
    }
    if (c == '+') {
      ++pos_;
      return Unary();
    }
    return Primary();
  }

  double Primary() {
    const char c = Peek();
    if (c == '(') {
      ++pos_;
      const double v = Sum();
      if (Peek() != ')') Fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Number();
    if (std::isalpha(static_cast<unsigned char>(c))) return Identifier();
    Fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  double Number() {
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc()) Fail("bad number");
    pos_ += end - begin;
    return v;
  }

  double Identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "pi") return kPi;
    if (Peek() != '(') Fail(fmt::format("unknown name '{}'", name));
    const double x = Primary();
    if (name == "sqrt") {
      if (x < 0.0) Fail("sqrt of a negative number");
      return std::sqrt(x);
    }
    if (name == "sin") return std::sin(x);
    if (name == "cos") return std::cos(x);
    if (name == "tan") return std::tan(x);
    if (name == "atan") return std::atan(x);
    if (name == "asin" || name == "acos") {
      if (x < -1.0 || x > 1.0) Fail(fmt::format("{} argument outside [-1, 1]", name));
      return name == "asin" ? std::asin(x) : std::acos(x);
    }
    Fail(fmt::format("unknown function '{}'", name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double EvaluateExpression(std::string_view text) { return Parser(text).Parse(); }

}  // namespace qgame
