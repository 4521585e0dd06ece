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

#ifndef MEROHECKE_SERIES_JSON_HPP
#define MEROHECKE_SERIES_JSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "merohecke/laurent_series.hpp"

namespace merohecke {

// {"valuation": v, "precision": P, "coefficients": ["num/den", ...]}.
// The coefficient list covers exponents v .. P-1; the zero series has v = P
// and an empty list. Round-trips bit-exactly.
std::string series_to_json(const LaurentSeries& series, int indent = -1);

// Throws ParseError on malformed input or an inconsistent window.
LaurentSeries series_from_json(std::string_view text);

// JSON array of "num/den" strings.
std::string rationals_to_json(const std::vector<Rational>& values);

}  // namespace merohecke

#endif  // MEROHECKE_SERIES_JSON_HPP
