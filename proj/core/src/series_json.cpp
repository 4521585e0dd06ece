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

#include "merohecke/series_json.hpp"

#include <json.hpp>

#include "merohecke/errors.hpp"

namespace merohecke {

using nlohmann::json;

std::string series_to_json(const LaurentSeries& series, int indent) {
  json coeffs = json::array();
  for (const auto& c : series.coefficients()) coeffs.push_back(to_string(c));
  json out = {{"valuation", series.valuation()},
              {"precision", series.precision()},
              {"coefficients", std::move(coeffs)}};
  return out.dump(indent);
}

LaurentSeries series_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("valuation") || !doc.contains("precision") ||
      !doc.contains("coefficients")) {
    throw ParseError("series JSON: expected keys valuation, precision, coefficients");
  }
  const auto& v = doc["valuation"];
  const auto& p = doc["precision"];
  const auto& c = doc["coefficients"];
  if (!v.is_number_integer() || !p.is_number_integer() || !c.is_array()) {
    throw ParseError("series JSON: wrong field types");
  }
  const auto valuation = v.get<std::int64_t>();
  const auto precision = p.get<std::int64_t>();
  if (valuation > precision ||
      static_cast<std::int64_t>(c.size()) != precision - valuation) {
    throw ParseError("series JSON: coefficient count does not match precision - valuation");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(c.size());
  for (const auto& entry : c) {
    if (!entry.is_string()) throw ParseError("series JSON: coefficients must be strings");
    coeffs.push_back(parse_rational(entry.get<std::string>()));
  }
  if (!coeffs.empty() && sgn(coeffs.front()) == 0) {
    throw ParseError("series JSON: leading stored coefficient must be nonzero");
  }
  return LaurentSeries(valuation, std::move(coeffs), precision);
}

std::string rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& x : values) out.push_back(to_string(x));
  return out.dump();
}

}  // namespace merohecke
