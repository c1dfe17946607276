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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "normtower/error.h"
#include "normtower/fuzz.h"
#include "normtower/normtheory.h"
#include "normtower/oracle.h"
#include "normtower/report.h"

namespace normtower {
namespace {

TowerConfig Load(const char* name) {
  return LoadConfig(std::string(NORMTOWER_CONFIG_DIR) + "/" + name);
}

struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Exhaustive oracle criteria on configs A and B.
void CheckExhaustive(Verdict& v, const char* name,
                     const std::vector<std::uint64_t>& normalizer_sizes,
                     const std::vector<std::uint64_t>& group_orders) {
  const TowerConfig cfg = Load(name);
  const FiniteTowerTable table = EnumerateTower(cfg);
  const OracleReport report = RunOracleOnTable(table, {});
  v.Require(report.Passed(), "oracle report passes");
  v.Require(report.mul_failures == 0 && report.inv_failures == 0,
            "mul/inv agree with permutation products");
  v.Require(report.levels.size() == normalizer_sizes.size(), "one level per beta");
  for (std::size_t i = 0; i < report.levels.size() && i < normalizer_sizes.size(); ++i) {
    const LevelReport& level = report.levels[i];
    const std::uint64_t beta = level.beta;
    v.Require(level.mode == "exhaustive", "exhaustive mode at beta " + std::to_string(beta));
    v.Require(level.normalizer_match,
              "N_K(H_" + std::to_string(beta) + ") = member_H set");
    v.Require(level.normalizer_size == normalizer_sizes[i],
              "|N_K(H_" + std::to_string(beta) + ")| = " +
                  std::to_string(normalizer_sizes[i]));
    v.Require(level.quotient.isomorphic &&
                  level.quotient.coset_count == group_orders[i] &&
                  level.quotient.group_order == group_orders[i],
              "H_" + std::to_string(beta + 1) + "/H_" + std::to_string(beta) +
                  " isomorphic to G_" + std::to_string(beta));
    v.Require(level.witness_failures == 0, "every witness verified");
    v.detail << " |N(H" << beta << ")|=" << level.normalizer_size << " quotient C"
             << level.quotient.coset_count << ";";
  }
  // Definitional cross-check of the first normalizer without the report.
  const auto n1 = BruteNormalizer(table, 1);
  std::vector<std::size_t> h2;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (MemberH(cfg, Ordinal::Natural(2), table.elements[i])) h2.push_back(i);
  }
  v.Require(n1 == h2, "brute_normalizer(1) == member_H(2) set element-for-element");
  v.detail << " |K|=" << report.size;
}

bool Run(int number, const std::string& title, double limit_seconds,
         const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.Require(false, std::string("threw: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= limit_seconds) {
    v.Require(false, "runtime under " + std::to_string(limit_seconds) + " s");
  }
  std::cout << (v.ok ? "PASS" : "FAIL") << " [" << number << "] " << title << ":"
            << v.detail.str() << " (" << std::fixed << std::setprecision(2)
            << seconds << " s, limit " << std::setprecision(0) << limit_seconds
            << " s)" << std::endl;
  return v.ok;
}

int Main() {
  bool all = true;

  all &= Run(1, "exhaustive oracle, config A (C(2); alpha=3; G=C(2),C(2))", 10,
             [](Verdict& v) { CheckExhaustive(v, "config_a.json", {64, 128}, {2, 2}); });

  all &= Run(2, "exhaustive oracle, config B (C(2); alpha=3; G=C(3),C(2))", 60,
             [](Verdict& v) { CheckExhaustive(v, "config_b.json", {576, 1152}, {3, 2}); });

  all &= Run(3, "sampled oracle, config C (C(2); alpha=4; all G=C(2))", 120,
             [](Verdict& v) {
               OracleOptions options;
               options.sampled = true;
               options.samples = 10'000;
               const OracleReport report = RunOracleSuite(Load("config_c.json"), options);
               v.Require(report.size == 32768, "|K| = 32768");
               v.Require(report.Passed(), "oracle report passes");
               v.Require(report.levels.size() == 3, "beta in {1, 2, 3}");
               for (const auto& level : report.levels) {
                 v.Require(level.mode == "sampled" && level.conjugation_checks == 10'000,
                           "10^4 sampled conjugation checks at beta " +
                               std::to_string(level.beta));
                 v.Require(level.normalizer_match, "sampled checks consistent with member_H");
                 v.Require(level.witness_failures == 0, "every witness verified");
                 v.detail << " beta " << level.beta << ": " << level.conjugation_checks
                          << " checks, " << level.witnesses_checked << " witnesses;";
               }
             });

  all &= Run(4, "symbolic transfinite suite, config D (Z; alpha=w+1; all G=C(2))", 60,
             [](Verdict& v) {
               const TowerConfig cfg = Load("config_d.json");
               FuzzOptions options;
               options.seed = 42;
               options.iterations = 10'000;
               const FuzzSummary first = RunTowerFuzz(cfg, options);
               v.Require(first.Passed(), "zero property failures");
               for (const char* property :
                    {"associativity", "identity", "inverse", "embedding_homomorphism",
                     "h_monotonicity", "normalizer_soundness", "witness_completeness",
                     "limit_property", "quotient_homomorphism", "quotient_kernel",
                     "quotient_section"}) {
                 const auto it = first.checks.find(property);
                 v.Require(it != first.checks.end() && it->second > 0,
                           std::string(property) + " exercised");
               }
               v.Require(first.checks.at("associativity") == 10'000, "10^4 iterations");
               v.Require(RunTowerFuzz(cfg, options).ToJson() == first.ToJson(),
                         "seed-reproducible");
               if (!first.Passed()) v.detail << "\n" << first.ToText();
               v.detail << " " << first.iterations << " iterations, "
                        << first.failures.size() << " failures, "
                        << first.checks.at("witness_completeness") << " witnesses;";
             });

  all &= Run(5, "strict growth and length, configs A, B, D", 60, [](Verdict& v) {
    for (const char* name : {"config_a.json", "config_b.json", "config_d.json"}) {
      const TowerConfig cfg = Load(name);
      const TowerReport report = BuildReport(cfg);
      v.Require(report.AllStrict(), std::string(name) + " every probe strict");
      v.Require(report.LengthClaim() == cfg.alpha().ToString(),
                std::string(name) + " length = alpha");
      // Finite alpha probes every beta < alpha; alpha = w + 1 reaches w.
      if (const auto n = cfg.alpha().AsNatural()) {
        v.Require(report.rows.size() == *n - 1, std::string(name) + " all beta probed");
      } else {
        v.Require(!report.rows.empty() &&
                      report.rows.back().beta == cfg.alpha().Predecessor(),
                  std::string(name) + " probe reaches the predecessor of alpha");
      }
      v.detail << " " << name << ": " << report.rows.size()
               << " strict rows, length " << report.LengthClaim() << ";";
    }
  });

  all &= Run(6, "ordinal suite, 10^4 randomized CNF cases", 5, [](Verdict& v) {
    const FuzzSummary summary = RunOrdinalFuzz(42, 10'000);
    v.Require(summary.Passed(), "zero failures");
    for (const char* property : {"trichotomy", "transitivity", "add_associativity",
                                 "classify_successor", "fundamental_sequence"}) {
      const auto it = summary.checks.find(property);
      v.Require(it != summary.checks.end() && it->second == 10'000,
                std::string(property) + " checked 10^4 times");
    }
    if (!summary.Passed()) v.detail << "\n" << summary.ToText();
    v.detail << " " << summary.iterations << " iterations, "
             << summary.failures.size() << " failures;";
  });

  return all ? 0 : 1;
}

}  // namespace
}  // namespace normtower

int main() { return normtower::Main(); }
