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

#include "normtower/oracle.h"

#include <gtest/gtest.h>

#include <set>

#include "normtower/error.h"
#include "normtower/normtheory.h"

namespace normtower {
namespace {

TowerConfig Load(const char* name) {
  return LoadConfig(std::string(NORMTOWER_CONFIG_DIR) + "/" + name);
}

// |K_{d+1}| = |K_d|^{|G_d|} |G_d| and
// |H_b| = |K_b|^{|G_b|} prod_{b<g<alpha} |K_g|^{|G_g| - 1}, by hand.
std::vector<std::uint64_t> LevelOrders(std::uint64_t base,
                                       const std::vector<std::uint64_t>& g) {
  std::vector<std::uint64_t> k{0, base};  // k[d] = |K_d|
  for (std::size_t d = 1; d <= g.size(); ++d) {
    std::uint64_t next = g[d - 1];
    for (std::uint64_t i = 0; i < g[d - 1]; ++i) next *= k[d];
    k.push_back(next);
  }
  return k;
}

std::uint64_t Pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::uint64_t HOrder(std::uint64_t base, const std::vector<std::uint64_t>& g,
                     std::uint64_t beta) {
  const auto k = LevelOrders(base, g);
  const std::uint64_t alpha = g.size() + 1;
  if (beta == alpha) return k[alpha];
  std::uint64_t out = Pow(k[beta], g[beta - 1]);
  for (std::uint64_t gamma = beta + 1; gamma < alpha; ++gamma) {
    out *= Pow(k[gamma], g[gamma - 1] - 1);
  }
  return out;
}

std::size_t Count(const std::vector<bool>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

TEST(PredictedOrderTest, MatchesHandRecursion) {
  EXPECT_EQ(LevelOrders(2, {2})[2], 8u);
  EXPECT_EQ(LevelOrders(2, {2, 2})[3], 128u);
  EXPECT_EQ(LevelOrders(2, {3, 2})[3], 1152u);
  EXPECT_EQ(LevelOrders(2, {2, 2, 2})[4], 32768u);
  EXPECT_EQ(PredictedOrder(Load("alpha2.json")), 8u);
  EXPECT_EQ(PredictedOrder(Load("config_a.json")), 128u);
  EXPECT_EQ(PredictedOrder(Load("config_b.json")), 1152u);
  EXPECT_EQ(PredictedOrder(Load("config_c.json")), 32768u);
  EXPECT_FALSE(PredictedOrder(Load("config_d.json")).has_value());
  for (std::uint64_t beta = 1; beta <= 3; ++beta) {
    EXPECT_EQ(PredictedSubgroupOrder(Load("config_b.json"), beta),
              HOrder(2, {3, 2}, beta));
  }
}

TEST(EnumerateTowerTest, SizesDistinctAndDeterministic) {
  for (const auto& [name, size] :
       std::vector<std::pair<const char*, std::size_t>>{
           {"alpha2.json", 8}, {"config_a.json", 128}, {"config_b.json", 1152}}) {
    const FiniteTowerTable table = EnumerateTower(Load(name));
    ASSERT_EQ(table.size(), size) << name;
    EXPECT_TRUE(IsIdentityElement(table.cfg, table.elements.front()));
    const std::set<TowerElement> distinct(table.elements.begin(),
                                          table.elements.end());
    EXPECT_EQ(distinct.size(), size);
    std::set<Permutation> perms(table.perms.begin(), table.perms.end());
    EXPECT_EQ(perms.size(), size) << "action is not faithful";
    EXPECT_EQ(EnumerateTower(Load(name)).elements, table.elements);
    for (const auto& x : table.elements) EXPECT_NO_THROW(ValidateElement(table.cfg, x));
  }
}

TEST(EnumerateTowerTest, RejectsInfiniteOrOversized) {
  EXPECT_THROW(EnumerateTower(Load("config_d.json")), DomainError);
  EXPECT_THROW(EnumerateTower(Load("t3.json")), DomainError);
  EXPECT_THROW(EnumerateTower(Load("config_c.json"), 1000), DomainError);
  EXPECT_THROW(ParseConfig(R"j({"alpha": 1, "base": "C(2)", "assignment": []})j"),
               ConfigError);
}

TEST(OracleTables, PermutationProductsMatchSymbolicMul) {
  const FiniteTowerTable table = EnumerateTower(Load("config_a.json"));
  for (std::size_t a = 0; a < table.size(); ++a) {
    EXPECT_EQ(table.elements[table.InverseOf(a)], Inv(table.cfg, table.elements[a]));
    for (std::size_t b = 0; b < table.size(); ++b) {
      ASSERT_EQ(table.elements[table.Product(a, b)],
                Mul(table.cfg, table.elements[a], table.elements[b]));
    }
  }
}

TEST(OracleTables, SubgroupSizesMatchDirectSumFormula) {
  const FiniteTowerTable a = EnumerateTower(Load("config_a.json"));
  const FiniteTowerTable b = EnumerateTower(Load("config_b.json"));
  for (std::uint64_t beta = 1; beta <= 3; ++beta) {
    EXPECT_EQ(Count(a.H(beta)), HOrder(2, {2, 2}, beta)) << beta;
    EXPECT_EQ(Count(b.H(beta)), HOrder(2, {3, 2}, beta)) << beta;
  }
  EXPECT_EQ(Count(a.H(1)), 32u);
  EXPECT_EQ(Count(a.H(2)), 64u);
  EXPECT_EQ(Count(b.H(2)), 576u);
}

// Membership by closure agrees with MemberH on every element.
TEST(OracleTables, MemberHAgreesWithClosureEverywhere) {
  for (const char* name : {"alpha2.json", "config_a.json", "config_b.json"}) {
    const FiniteTowerTable table = EnumerateTower(Load(name));
    const std::uint64_t alpha = *table.cfg.alpha().AsNatural();
    for (std::uint64_t beta = 1; beta <= alpha; ++beta) {
      for (std::size_t i = 0; i < table.size(); ++i) {
        ASSERT_EQ(MemberH(table.cfg, Ordinal::Natural(beta), table.elements[i]),
                  static_cast<bool>(table.H(beta)[i]))
            << name << " beta " << beta << " " << FormatElement(table.elements[i]);
      }
    }
  }
}

TEST(BruteNormalizerTest, ConfigA) {
  const FiniteTowerTable table = EnumerateTower(Load("config_a.json"));
  const auto n1 = BruteNormalizer(table, 1);
  EXPECT_EQ(n1.size(), 64u);
  std::vector<std::size_t> h2;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (MemberH(table.cfg, Ordinal::Natural(2), table.elements[i])) h2.push_back(i);
  }
  EXPECT_EQ(n1, h2);
  EXPECT_EQ(BruteNormalizer(table, 2).size(), 128u);
  EXPECT_EQ(BruteNormalizer(table, 3).size(), 128u);
  EXPECT_EQ(BruteNormalizer(table, 1, true), n1);
  EXPECT_TRUE(NormalizerMismatches(table, 1, n1).empty());
}

TEST(BruteNormalizerTest, ConfigB) {
  const FiniteTowerTable table = EnumerateTower(Load("config_b.json"));
  const auto n1 = BruteNormalizer(table, 1, true);
  EXPECT_EQ(n1.size(), 576u);
  EXPECT_TRUE(NormalizerMismatches(table, 1, n1).empty());
  EXPECT_EQ(BruteNormalizer(table, 2, true).size(), 1152u);
}

TEST(IsomorphismTest, SmallGroups) {
  auto table_of = [](const GroupSpec& spec) {
    const auto all = EnumerateGroup(spec);
    CayleyTable t(all.size(), std::vector<std::size_t>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const auto p = Multiply(spec, all[i], all[j]);
        t[i][j] = std::find(all.begin(), all.end(), p) - all.begin();
      }
    }
    return t;
  };
  const CayleyTable c6 = table_of(GroupSpec::Cyclic(6));
  const CayleyTable c2c3 = table_of(ParseGroupSpec("P(C(2),C(3))"));
  const auto phi = FindIsomorphism(c6, c2c3);
  ASSERT_TRUE(phi.has_value());
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(c2c3[(*phi)[i]][(*phi)[j]], (*phi)[c6[i][j]]);
    }
  }
  EXPECT_FALSE(FindIsomorphism(c6, table_of(GroupSpec::Symmetric(3))).has_value());
  EXPECT_FALSE(FindIsomorphism(table_of(GroupSpec::Cyclic(4)),
                               table_of(ParseGroupSpec("P(C(2),C(2))")))
                   .has_value());
  EXPECT_TRUE(FindIsomorphism(table_of(GroupSpec::Symmetric(4)),
                              table_of(GroupSpec::Symmetric(4)))
                  .has_value());
  EXPECT_FALSE(FindIsomorphism(c6, table_of(GroupSpec::Cyclic(4))).has_value());
}

TEST(QuotientTableIsoTest, CosetTablesMatchActingGroups) {
  const FiniteTowerTable a = EnumerateTower(Load("config_a.json"));
  for (std::uint64_t beta : {1, 2}) {
    const QuotientCheck q = QuotientTableIso(a, beta);
    EXPECT_TRUE(q.isomorphic) << q.certificate;
    EXPECT_EQ(q.coset_count, 2u);
    EXPECT_EQ(q.mapping.size(), 2u);
  }
  const FiniteTowerTable b = EnumerateTower(Load("config_b.json"));
  const QuotientCheck q1 = QuotientTableIso(b, 1);
  EXPECT_TRUE(q1.isomorphic);
  EXPECT_EQ(q1.coset_count, 3u);
  EXPECT_EQ(q1.group_order, 3u);
  EXPECT_EQ(QuotientTableIso(b, 2).coset_count, 2u);
  EXPECT_THROW(QuotientTableIso(b, 3), DomainError);
}

TEST(RunOracleTest, ConfigsAAndBPassDeterministically) {
  for (const char* name : {"config_a.json", "config_b.json"}) {
    const OracleReport report = RunOracleSuite(Load(name));
    EXPECT_TRUE(report.Passed()) << report.ToJson();
    EXPECT_EQ(report.ToJson(), RunOracleSuite(Load(name)).ToJson());
    ASSERT_EQ(report.levels.size(), 2u);
    EXPECT_EQ(report.levels[0].mode, "exhaustive");
    EXPECT_EQ(report.levels[0].witness_failures, 0u);
    EXPECT_EQ(report.levels[0].witnesses_checked,
              report.size - report.levels[0].next_h_size);
  }
}

TEST(RunOracleTest, CorruptedMembershipIsDetected) {
  FiniteTowerTable table = EnumerateTower(Load("config_a.json"));
  // Drop one non-identity element from the H_2 bit vector.
  std::size_t victim = 0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table.h_membership[1][i]) {
      victim = i;
      break;
    }
  }
  ASSERT_NE(victim, 0u);
  table.h_membership[1][victim] = false;
  const OracleReport report = RunOracleOnTable(table, {});
  EXPECT_FALSE(report.Passed());
  bool reported = false;
  for (const auto& level : report.levels) {
    if (!level.mismatch_examples.empty()) reported = true;
  }
  EXPECT_TRUE(reported) << report.ToJson();
}

TEST(RunOracleTest, SampledModeIsLabelled) {
  OracleOptions options;
  options.sampled = true;
  options.samples = 500;
  const OracleReport report = RunOracleSuite(Load("config_a.json"), options);
  EXPECT_TRUE(report.Passed());
  for (const auto& level : report.levels) {
    EXPECT_EQ(level.mode, "sampled");
    EXPECT_EQ(level.conjugation_checks, 500u);
  }
  EXPECT_NE(report.ToJson().find("\"sampled\""), std::string::npos);
  EXPECT_EQ(report.ToJson().find("timings"), std::string::npos);
  EXPECT_NE(report.ToJson(true).find("timings"), std::string::npos);
}

}  // namespace
}  // namespace normtower
