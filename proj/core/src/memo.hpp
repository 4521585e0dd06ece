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

#ifndef MEROHECKE_SRC_MEMO_HPP
#define MEROHECKE_SRC_MEMO_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "merohecke/laurent_series.hpp"

namespace merohecke::detail {

// Keeps the most precise series built so far for each key. Readers share a
// lock; a miss builds outside the lock and then inserts under the writer
// lock, so concurrent misses may duplicate work but never corrupt state.
template <typename Key>
class SeriesMemo {
 public:
  template <typename Build>
  LaurentSeries get(const Key& key, std::int64_t precision, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      const auto it = entries_.find(key);
      if (it != entries_.end() && it->second.precision() >= precision) {
        return truncate(it->second, precision);
      }
    }
    LaurentSeries fresh = std::forward<Build>(build)(precision);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, fresh);
    if (!inserted && it->second.precision() < fresh.precision()) it->second = fresh;
    return fresh;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, LaurentSeries> entries_;
};

// Same contract for echelon bases: the stored basis is the most precise one
// built so far, and a request is answered by truncating its elements.
// Truncation commutes with building because the echelon pivots lie below
// every precision that can be built at all.
template <typename Key, typename Basis>
class BasisMemo {
 public:
  template <typename Build>
  Basis get(const Key& key, std::int64_t precision, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      const auto it = entries_.find(key);
      if (it != entries_.end() && it->second.first >= precision) {
        Basis out = it->second.second;
        for (auto& e : out.elements) e.series = truncate(e.series, precision);
        return out;
      }
    }
    Basis fresh = std::forward<Build>(build)(precision);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, precision, fresh);
    if (!inserted && it->second.first < precision) it->second = {precision, fresh};
    return fresh;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, std::pair<std::int64_t, Basis>> entries_;
};

}  // namespace merohecke::detail

#endif  // MEROHECKE_SRC_MEMO_HPP
