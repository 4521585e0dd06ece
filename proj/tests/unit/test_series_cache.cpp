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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "builders.hpp"
#include "merohecke/series_cache.hpp"

using namespace merohecke;

namespace {

class CacheDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("merohecke-cache-test-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
};

}  // namespace

TEST(SeriesCacheKey, StableAndDistinct) {
  const auto k = SeriesCache::key("formula:E4", 10);
  EXPECT_EQ(k.size(), 16U);
  EXPECT_EQ(k, SeriesCache::key("formula:E4", 10));
  EXPECT_NE(k, SeriesCache::key("formula:E4", 11));
  EXPECT_NE(k, SeriesCache::key("formula:E6", 10));
}

TEST_F(CacheDir, StoreLoadRoundTrip) {
  const SeriesCache cache(dir_);
  const auto s = build_helpers::series(-1, {"1", "0", "-73764", "1/3"});
  EXPECT_FALSE(cache.load("x", 3).has_value());
  cache.store("x", 3, s);
  EXPECT_TRUE(std::filesystem::exists(cache.entry_path("x", 3)));
  const auto back = cache.load("x", 3);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, s);
  EXPECT_FALSE(cache.load("x", 4).has_value());
}

TEST_F(CacheDir, CorruptEntryIsAMiss) {
  const SeriesCache cache(dir_);
  cache.store("x", 3, build_helpers::series(0, {"1"}));
  std::ofstream(cache.entry_path("x", 3)) << "{not json";
  EXPECT_FALSE(cache.load("x", 3).has_value());
  int calls = 0;
  const auto v = cache.get_or_compute("x", 3, [&] {
    ++calls;
    return build_helpers::series(0, {"2"}, 3);
  });
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(v.coefficient(0), 2);
  EXPECT_EQ(cache.load("x", 3)->coefficient(0), 2);
}

TEST_F(CacheDir, GetOrComputeComputesOnce) {
  const SeriesCache cache(dir_);
  int calls = 0;
  const auto compute = [&] {
    ++calls;
    return build_helpers::series(1, {"1", "-24", "252"});
  };
  const auto a = cache.get_or_compute("delta", 4, compute);
  const auto b = cache.get_or_compute("delta", 4, compute);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(a, b);
}

TEST_F(CacheDir, ConcurrentWritersLeaveAValidEntry) {
  const SeriesCache cache(dir_);
  const auto s = build_helpers::series(1, {"1", "-24", "252", "-1472"});
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 20; ++i) cache.store("delta", 5, s);
    });
  }
  for (auto& t : threads) t.join();
  const auto back = cache.load("delta", 5);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, s);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 1U);
}

TEST_F(CacheDir, FromEnvironment) {
  ::unsetenv("MEROHECKE_CACHE_DIR");
  EXPECT_FALSE(SeriesCache::from_environment().has_value());
  ::setenv("MEROHECKE_CACHE_DIR", "", 1);
  EXPECT_FALSE(SeriesCache::from_environment().has_value());
  ::setenv("MEROHECKE_CACHE_DIR", dir_.c_str(), 1);
  const auto c = SeriesCache::from_environment();
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->directory(), dir_);
  ::unsetenv("MEROHECKE_CACHE_DIR");
}
