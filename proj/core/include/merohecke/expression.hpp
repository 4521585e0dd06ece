// Copyright 2026 The merohecke Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEROHECKE_EXPRESSION_HPP
#define MEROHECKE_EXPRESSION_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "merohecke/forms.hpp"
#include "merohecke/laurent_series.hpp"

namespace merohecke {

// Weight bookkeeping for formulas: bare numbers are weightless scalars,
// anything involving q or a weight mismatch is not modular.
struct FormulaWeight {
  enum class Kind { Scalar, Modular, Mixed };
  Kind kind = Kind::Scalar;
  int weight = 0;

  bool is_modular() const { return kind != Kind::Mixed; }
  int value() const { return kind == Kind::Modular ? weight : 0; }
};

struct FormulaValue {
  LaurentSeries series;
  FormulaWeight weight;
  // True when the formula divides by something other than a power of Delta,
  // so the q-expansion may only converge above some height.
  bool meromorphic = false;
};

// Maps identifiers that are not built in (E<k>, Delta, j, q) to a series
// known to the requested precision.
using NameResolver =
    std::function<std::optional<ModularFormSeries>(const std::string& name, std::int64_t precision)>;

// Parsed formula over +, -, *, /, ^ (integer exponents), parentheses,
// integers and implicit multiplication, e.g. "E6^3/Delta + 1488 E6".
class Formula {
 public:
  static Formula parse(std::string_view text);  // throws ParseError

  // Evaluates to exactly O(q^precision), raising the working precision of
  // the building blocks until the result supports it.
  FormulaValue evaluate(std::int64_t precision, const NameResolver& resolver = {}) const;

  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

FormulaValue evaluate_formula(std::string_view text, std::int64_t precision,
                              const NameResolver& resolver = {});

}  // namespace merohecke

#endif  // MEROHECKE_EXPRESSION_HPP
