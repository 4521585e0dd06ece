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

#ifndef MEROHECKE_MEROFORMS_HPP
#define MEROHECKE_MEROFORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "merohecke/expression.hpp"
#include "merohecke/laurent_series.hpp"

namespace merohecke {

/// A named form of the catalogue together with the formula it was built from.
///
/// The q-expansions of meromorphic entries only converge above
/// validity_height (f6i: y > 1, G: y > sqrt(7)/2); weakly holomorphic and
/// holomorphic entries have validity_height 0.
struct NamedForm {
  std::string name;
  int weight = 0;
  LaurentSeries series;
  std::string construction;
  double validity_height = 0.0;
};

/// f6iinfty, f6i, g5, g7, F7, G, g. The entries g5 and g7 are stored with
/// the normalization that makes their principal parts monic
/// (q^-5 - 3126 q^-1 and q^-7 - 16808 q^-1).
const std::vector<std::string>& named_form_names();
bool is_named_form(const std::string& name);

/// Exact expansion to O(q^precision). Throws std::invalid_argument for an
/// unknown name.
NamedForm build(const std::string& name, std::int64_t precision);

/// Resolver exposing the catalogue to formulas.
NameResolver named_form_resolver();

struct IdentityReport {
  std::string id;
  bool pass = false;
  std::int64_t window_begin = 0;  // inclusive
  std::int64_t window_end = 0;    // exclusive
  std::optional<std::int64_t> mismatch;
  std::string detail;
};

struct IdentityOptions {
  std::optional<std::int64_t> precision;  // input precision; per-id default otherwise
  // Negative control: add 1 to the left-hand side coefficient at this index.
  std::optional<std::int64_t> perturb_index;
};

/// bol-f6iinfty, infty-eigen(2|3|5|7), g5-def, g7-def, gT2, gT3, G-hecke,
/// jpoly-eval, F-over-Delta, psi-fourier-consistency, eigen-witness(2|3),
/// g5-witness, g7-witness.
const std::vector<std::string>& identity_ids();

/// Exact coefficient-wise verification. Failures are reported, not thrown;
/// an unknown id throws std::invalid_argument.
IdentityReport verify_identity(const std::string& id, const IdentityOptions& options = {});

/// {"id", "pass", "window": [begin, end], "mismatch", "detail"}.
std::string to_json(const IdentityReport& report);

}  // namespace merohecke

#endif  // MEROHECKE_MEROFORMS_HPP
