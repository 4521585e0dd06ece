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

#include "merohecke/series_cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "merohecke/errors.hpp"
#include "merohecke/series_json.hpp"

namespace merohecke {

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SeriesCache::SeriesCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<SeriesCache> SeriesCache::from_environment() {
  const char* dir = std::getenv("MEROHECKE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return SeriesCache(dir);
}

std::string SeriesCache::key(std::string_view construction, std::int64_t precision) {
  std::ostringstream material;
  material << kFormatVersion << '|' << construction << '|' << precision;
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(fnv1a(material.str())));
  return buffer;
}

std::filesystem::path SeriesCache::entry_path(std::string_view construction,
                                              std::int64_t precision) const {
  return directory_ / (key(construction, precision) + ".json");
}

std::optional<LaurentSeries> SeriesCache::load(std::string_view construction,
                                               std::int64_t precision) const {
  std::ifstream in(entry_path(construction, precision));
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  try {
    auto series = series_from_json(text.str());
    if (series.precision() != precision) return std::nullopt;
    return series;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void SeriesCache::store(std::string_view construction, std::int64_t precision,
                        const LaurentSeries& series) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(directory_);
  const auto target = entry_path(construction, precision);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::this_thread::get_id() << '.' << counter++;
  auto temp = target;
  temp += suffix.str();
  {
    std::ofstream out(temp, std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + temp.string());
    out << series_to_json(series) << '\n';
    if (!out.flush()) throw Error("cannot write cache entry " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

LaurentSeries SeriesCache::get_or_compute(std::string_view construction, std::int64_t precision,
                                          const std::function<LaurentSeries()>& compute) const {
  if (auto hit = load(construction, precision)) return *std::move(hit);
  auto series = compute();
  store(construction, precision, series);
  return series;
}

}  // namespace merohecke
