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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = merohecke::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& leaf) {
  auto p = std::filesystem::temp_directory_path() / ("merohecke-cli-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(p);
  return p / leaf;
}

}  // namespace

TEST(Cli, ExpandNamedForm) {
  const auto r = run({"expand", "G", "--prec", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("q^2 - 4143*q^3 + 16868385*q^4 - 68686682635*q^5 + O(q^6)"), std::string::npos)
      << r.out;
}

TEST(Cli, ExpandFormulaJson) {
  const auto r = run({"expand", "E4^3/Delta", "--prec", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("valuation"), -1);
  EXPECT_EQ(j.at("coefficients").at(1), "744");
}

TEST(Cli, SeriesFileRoundTrip) {
  const auto first = run({"expand", "g5", "--prec", "12", "--json"});
  ASSERT_EQ(first.code, 0);
  const auto file = scratch("g5.json");
  std::ofstream(file) << first.out;
  const auto second = run({"expand", file.string(), "--prec", "12", "--json"});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(nlohmann::json::parse(first.out), nlohmann::json::parse(second.out));
}

TEST(Cli, CacheIsBitIdentical) {
  const auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  const auto cold = run({"expand", "f6i", "--prec", "30", "--json"});
  ::setenv("MEROHECKE_CACHE_DIR", dir.c_str(), 1);
  const auto fill = run({"expand", "f6i", "--prec", "30", "--json"});
  const auto warm = run({"expand", "f6i", "--prec", "30", "--json"});
  ::unsetenv("MEROHECKE_CACHE_DIR");
  EXPECT_EQ(cold.out, fill.out);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_FALSE(std::filesystem::is_empty(dir));
}

TEST(Cli, SolveObstructed) {
  const auto r = run({"solve-pp", "--weight", "-10", "--pp", "1:1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("obstruction [1]"), std::string::npos) << r.out;
  const auto ok = run({"solve-pp", "--weight", "-4", "--pp", "5:1,1:-3126", "--sshriek", "--prec", "3"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("26994415788736"), std::string::npos) << ok.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"expand"}).code, 2);
  EXPECT_EQ(run({"expand", "E4 +", "--prec", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "no-such-id"}).code, 2);
}

TEST(Cli, NumericGuard) {
  const auto r = run({"eval", "f6i", "--at", "0,0.9", "--bits", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"eval", "Delta/E6", "--at", "0,2", "--bits", "100"}).code, 3);
  EXPECT_EQ(run({"eval", "f6i", "--at", "0,2", "--bits", "100"}).code, 0);
}

TEST(Cli, VerifyAllJson) {
  const auto r = run({"verify", "all", "--json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("identities").size(), 17U);
  EXPECT_EQ(j.at("theorem-grid").size(), 78U);
  for (const auto& entry : j.at("identities")) {
    EXPECT_TRUE(entry.at("pass").get<bool>()) << entry.dump();
  }
}

TEST(Cli, VerifyPerturbFails) {
  const auto r = run({"verify", "F-over-Delta", "--perturb", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first mismatch at q^3"), std::string::npos) << r.out;
}

TEST(Cli, QuotientCheck) {
  const auto r = run({"quotient", "--weight2k", "12", "--kind", "modM!", "--m", "2", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check: pass"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x + 24"), std::string::npos);
}

TEST(Cli, HeckeWindow) {
  const auto r = run({"hecke", "Delta", "--weight", "12", "--m", "2", "--prec", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("window [1, 5)"), std::string::npos) << r.out;
}
