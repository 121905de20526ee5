// Copyright 2026 The hyperorbits Authors
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

#include <sstream>

#include "hyperorbits/cli.hpp"
#include "hyperorbits/serialization.hpp"

using namespace hyperorbits;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperorbits");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, OrbitExample) {
  Outcome r = run({"orbit", "--n", "4", "--form", "1,0,0,0,1", "--point", "0,1,1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("command"), "orbit");
  const Json& p = j.at("payload");
  EXPECT_TRUE(p.at("determinant_identity").get<bool>());
  SymmetricPair v = p.at("pair").get<SymmetricPair>();
  EXPECT_EQ(v, instantiate(pair_template(4), BinaryForm{1, 0, 0, 0, 1}, 1));
  EXPECT_EQ(p.at("invariant_form").get<BinaryForm>(), (BinaryForm{1, 0, 0, 0, 1}));
}

TEST(Cli, OrbitRejectsPointOffCurve) {
  Outcome r = run({"orbit", "--n", "4", "--form", "1,0,0,0,1", "--point", "0,1,2"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"orbit", "--n", "2", "--form", "1,0,0,0,1", "--point", "0,1,1"}).code, cli::kExitValidation);
}

TEST(Cli, VerifyPoint) {
  // f(1, 1) = 1 - 2 + 0 + 3 + 2 = 4.
  Outcome r = run({"verify", "--form", "1,-2,0,3,2", "--point", "1,1,2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  Json p = Json::parse(r.out).at("payload");
  EXPECT_TRUE(p.at("ok").get<bool>());
}

TEST(Cli, DensitiesGenusOneExact) {
  Outcome r = run({"densities", "--genus", "1", "--samples", "0", "--primes", "50"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json p = Json::parse(r.out).at("payload");
  ASSERT_TRUE(p.is_array());
  DensityReport d = p.at(0).get<DensityReport>();
  EXPECT_EQ(d.archimedean.normalized, 1.0);
  EXPECT_TRUE(d.archimedean.exact);
}

TEST(Cli, DensitiesCsv) {
  Outcome r = run({"densities", "--genus", "1", "--genus-max", "2", "--samples", "2000", "--primes", "20",
                   "--format", "csv"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], density_csv_header());
}

TEST(Cli, CountFp) {
  Outcome r = run({"count-fp", "--n", "2", "--p", "3", "--form", "1,0,2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json p = Json::parse(r.out).at("payload");
  EXPECT_EQ(p.at("stats").get<OrbitStats>().total_elements, 24);
  EXPECT_EQ(p.at("sl_n_order").get<Integer>(), 24);
}

TEST(Cli, BudgetExitCode) {
  EXPECT_EQ(run({"count-fp", "--n", "4", "--p", "5", "--form", "1,0,0,0,1"}).code, cli::kExitBudget);
}

TEST(Cli, Genus0) {
  Outcome r = run({"genus0", "--primes", "5", "--exact"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json p = Json::parse(r.out).at("payload");
  EXPECT_EQ(p.at("product").get<Rational>(), Rational(119, 225));
}

TEST(Cli, SurveyJsonLines) {
  Outcome r = run({"--seed", "4", "survey", "--n", "4", "--height", "50", "--point-bound", "5", "--count", "12"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int records = 0;
  Json last;
  while (std::getline(in, line)) {
    last = Json::parse(line);
    ++records;
  }
  EXPECT_EQ(records, 13);
  EXPECT_EQ(last.at("aggregate").at("count"), 12);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args = {"survey", "--n", "4", "--height", "100", "--point-bound", "5",
                                   "--count", "30", "--seed", "9"};
  Outcome a = run(args);
  args.insert(args.end(), {"--jobs", "3"});
  Outcome b = run(args);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> d = {"densities", "--genus", "2", "--samples", "5000", "--primes", "30", "--seed", "3"};
  EXPECT_EQ(run(d).out, run(d).out);
}

TEST(Cli, UsageErrors) {
  Outcome r = run({"orbit", "--bogus"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_FALSE(r.err.empty() && r.out.empty());
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"densities", "--genus", "1", "--format", "xml"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"count-fp", "--n", "2", "--p", "4", "--form", "1,0,1"}).code, cli::kExitValidation);
}
