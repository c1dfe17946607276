// Copyright 2026 The normtower Authors
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

#include "normtower/fuzz.h"

#include <gtest/gtest.h>

#include "normtower/normtheory.h"

namespace normtower {
namespace {

Ordinal O(const char* text) { return ParseOrdinal(text); }

class FuzzTest : public ::testing::Test {
 protected:
  FuzzTest()
      : omega_(ParseConfig(R"j({"alpha": "w+1", "base": "Z",
            "assignment": [{"lo": 1, "hi": "w+1", "group": "C(2)"}]})j")) {}

  TowerConfig omega_;
};

TEST_F(FuzzTest, TowerFuzzOnOmegaPlusOne) {
  FuzzOptions options;
  options.iterations = 2000;
  const FuzzSummary a = RunTowerFuzz(omega_, options);
  EXPECT_TRUE(a.Passed()) << a.ToText();
  EXPECT_EQ(a.ToJson(), RunTowerFuzz(omega_, options).ToJson());
  EXPECT_GT(a.checks.at("witness_completeness"), 100u);
  EXPECT_EQ(a.checks.at("limit_property"), 2000u);
}

TEST_F(FuzzTest, TowerFuzzOnMixedGroupsBelowOmegaSquared) {
  const TowerConfig cfg = ParseConfig(R"j({"alpha": "w^2", "base": "Z",
      "assignment": [{"lo": 1, "hi": "w", "group": "S(3)"},
                     {"lo": "w", "hi": "w*2", "group": "P(C(2),C(3))"},
                     {"lo": "w*2", "hi": "w^2", "group": "Z"}]})j");
  FuzzOptions options;
  options.iterations = 1500;
  options.seed = 7;
  const FuzzSummary summary = RunTowerFuzz(cfg, options);
  EXPECT_TRUE(summary.Passed()) << summary.ToText();
}

TEST_F(FuzzTest, InjectedFaultIsCaught) {
  FuzzOptions options;
  options.iterations = 200;
  options.inject_fault = true;
  const FuzzSummary summary = RunTowerFuzz(omega_, options);
  ASSERT_FALSE(summary.Passed());
  const PropertyFailure& first = summary.failures.front();
  ASSERT_FALSE(first.elements.empty());
  // Every reported literal replays.
  for (const auto& [name, literal] : first.elements) {
    EXPECT_NO_THROW(ParseElement(omega_, literal)) << name << " = " << literal;
  }
  EXPECT_NE(summary.ToText().find("seed 42"), std::string::npos);
}

TEST_F(FuzzTest, SubgroupMembersBelongToTheirSubgroup) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const Ordinal beta = SampleOrdinalBelow(omega_.alpha(), rng);
    EXPECT_TRUE(MemberH(omega_, beta, RandomSubgroupMember(omega_, beta, rng, {})));
  }
  EXPECT_EQ(LimitsUpTo(O("w+1")), std::vector<Ordinal>{O("w")});
  EXPECT_EQ(LimitsUpTo(O("w*2")), (std::vector<Ordinal>{O("w"), O("w*2")}));
  EXPECT_TRUE(LimitsUpTo(O("7")).empty());
}

TEST_F(FuzzTest, FiniteBaseConfigPasses) {
  const TowerConfig cfg = ParseConfig(R"j({"alpha": 4, "base": "C(2)",
      "assignment": [{"lo": 1, "hi": 2, "group": "C(3)"},
                     {"lo": 2, "hi": 4, "group": "S(3)"}]})j");
  FuzzOptions options;
  options.iterations = 1000;
  const FuzzSummary summary = RunTowerFuzz(cfg, options);
  EXPECT_TRUE(summary.Passed()) << summary.ToText();
}

TEST(FuzzSummaryTest, JsonShape) {
  FuzzSummary summary;
  summary.seed = 9;
  summary.iterations = 1;
  summary.checks["associativity"] = 1;
  summary.failures.push_back({"associativity", 0, "boom", {{"x", "b(1)"}}});
  const std::string json = summary.ToJson();
  EXPECT_NE(json.find("\"passed\": false"), std::string::npos) << json;
  EXPECT_NE(json.find("\"x\": \"b(1)\""), std::string::npos) << json;
}

}  // namespace
}  // namespace normtower
