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

#ifndef MEROHECKE_SERIES_CACHE_HPP
#define MEROHECKE_SERIES_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "merohecke/laurent_series.hpp"

namespace merohecke {

// Flat-file cache of exact expansions keyed by (construction, precision).
// Entries are plain series JSON; a format bump changes every key.
class SeriesCache {
 public:
  static constexpr std::string_view kFormatVersion = "v1";

  explicit SeriesCache(std::filesystem::path directory);

  // Cache rooted at $MEROHECKE_CACHE_DIR, or nothing if the variable is unset or empty.
  static std::optional<SeriesCache> from_environment();

  static std::string key(std::string_view construction, std::int64_t precision);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path entry_path(std::string_view construction, std::int64_t precision) const;

  // Unreadable or corrupt entries count as misses.
  std::optional<LaurentSeries> load(std::string_view construction, std::int64_t precision) const;

  // Writes to a temporary file in the same directory, then renames it into place.
  void store(std::string_view construction, std::int64_t precision, const LaurentSeries& series) const;

  LaurentSeries get_or_compute(std::string_view construction, std::int64_t precision,
                               const std::function<LaurentSeries()>& compute) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace merohecke

#endif  // MEROHECKE_SERIES_CACHE_HPP
