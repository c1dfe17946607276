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

#ifndef NORMTOWER_ORACLE_H_
#define NORMTOWER_ORACLE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "normtower/tower.h"

// Brute-force verification on fully finite towers.
//
// Every element of K is enumerated structurally and realised as a
// permutation of X_alpha, where X_1 = K_1 (regular action) and
// X_{d+1} = X_d x G_d with (f, g) . (x, t) = (f(g t) . x, g t). This action
// is faithful, so products, inverses, subgroups, normalizers and cosets are
// all computed on permutations, independently of the symbolic Mul/Inv and of
// MemberH.
namespace normtower {

using Permutation = std::vector<std::uint16_t>;

inline constexpr std::uint64_t kDefaultElementCap = 100'000;

struct FiniteTowerTable {
  TowerConfig cfg;
  std::vector<TowerElement> elements;   // identity first
  std::map<TowerElement, std::size_t> index;
  std::vector<Permutation> perms;       // perms[i] realises elements[i]
  std::vector<Permutation> inverse_perms;
  /// h_membership[b - 1][i]: elements[i] in H_b, built as the closure of the
  /// defining components, for b = 1..alpha.
  std::vector<std::vector<bool>> h_membership;

  std::size_t size() const { return elements.size(); }
  /// Index of an element, throws DomainError if absent.
  std::size_t IndexOf(const TowerElement& x) const;
  /// Index of the element realising perm, throws DomainError if none does.
  std::size_t IndexOfPerm(const Permutation& perm) const;
  /// elements[a] * elements[b], computed on permutations.
  std::size_t Product(std::size_t a, std::size_t b) const;
  std::size_t InverseOf(std::size_t a) const;
  const std::vector<bool>& H(std::uint64_t beta) const;

  std::unordered_map<std::string, std::size_t> perm_index;
};

/// |K_alpha| by the recursion |K_{d+1}| = |K_d|^{|G_d|} |G_d|; nullopt on
/// overflow or for infinite towers.
std::optional<std::uint64_t> PredictedOrder(const TowerConfig& cfg);
/// |H_beta| = |K_beta|^{|G_beta|} prod_{beta<g<alpha} |K_g|^{|G_g|-1}.
std::optional<std::uint64_t> PredictedSubgroupOrder(const TowerConfig& cfg,
                                                    std::uint64_t beta);

/// Throws DomainError for infinite configs or when the predicted size
/// exceeds cap.
FiniteTowerTable EnumerateTower(const TowerConfig& cfg,
                                std::uint64_t cap = kDefaultElementCap);

/// Generators of H_beta: every map supported at a single point of G_beta
/// into K_beta, and every map supported at a single non-identity point of
/// G_gamma into K_gamma for beta < gamma < alpha.
std::vector<std::size_t> SubgroupGenerators(const FiniteTowerTable& table,
                                            std::uint64_t beta);

/// {x : x h x^-1 in H_beta for all h}, by double loop over the H_beta bit
/// vector (or over SubgroupGenerators when generators_only). Sorted indices.
std::vector<std::size_t> BruteNormalizer(const FiniteTowerTable& table,
                                         std::uint64_t beta,
                                         bool generators_only = false);

/// Multiplication table on 0..n-1 with 0 the identity.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Backtracking search over generator images. Returns phi with
/// b[phi[i]][phi[j]] == phi[a[i][j]], or nullopt.
std::optional<std::vector<std::size_t>> FindIsomorphism(const CayleyTable& a,
                                                        const CayleyTable& b);

struct QuotientCheck {
  bool isomorphic = false;
  std::size_t coset_count = 0;
  std::uint64_t group_order = 0;
  std::string certificate;  // reason when not isomorphic
  /// (coset representative literal, image in G_beta)
  std::vector<std::pair<std::string, std::string>> mapping;
};

/// Coset table of H_{beta+1} / H_beta compared with G_beta.
QuotientCheck QuotientTableIso(const FiniteTowerTable& table,
                               std::uint64_t beta);

struct OracleOptions {
  std::uint64_t cap = kDefaultElementCap;
  /// Force sampled conjugation checks instead of the full double loop.
  bool sampled = false;
  bool generators_only = false;
  std::uint64_t samples = 10'000;  // per beta, in sampled mode
  std::uint64_t seed = 42;
  /// Above this size the double loop switches to sampling automatically.
  std::uint64_t exhaustive_limit = 5'000;
};

struct LevelReport {
  std::uint64_t beta = 0;
  std::uint64_t h_size = 0;
  std::uint64_t h_predicted = 0;
  std::string mode;  // "exhaustive", "generators-only" or "sampled"
  bool normalizer_match = false;
  std::uint64_t normalizer_size = 0;      // exhaustive modes only
  std::uint64_t next_h_size = 0;
  std::vector<std::string> mismatch_examples;
  std::uint64_t conjugation_checks = 0;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t witness_failures = 0;
  QuotientCheck quotient;
};

struct OracleReport {
  std::string config;
  std::uint64_t size = 0;
  std::uint64_t predicted_size = 0;
  std::uint64_t mul_pairs_checked = 0;
  std::uint64_t mul_failures = 0;
  std::uint64_t inv_failures = 0;
  std::vector<LevelReport> levels;
  std::map<std::string, double> timings_ms;

  bool Passed() const;
  /// Deterministic JSON (timings excluded unless requested).
  std::string ToJson(bool with_timings = false) const;
};

/// Compares a brute normalizer with the MemberH(beta + 1) set; returns up to
/// `limit` formatted counterexamples.
std::vector<std::string> NormalizerMismatches(
    const FiniteTowerTable& table, std::uint64_t beta,
    const std::vector<std::size_t>& normalizer, std::size_t limit = 5);

/// Runs every check on an enumerated table (lets tests inject corrupted
/// tables).
OracleReport RunOracleOnTable(const FiniteTowerTable& table,
                              const OracleOptions& options);
OracleReport RunOracleSuite(const TowerConfig& cfg,
                            const OracleOptions& options = {});

}  // namespace normtower

#endif  // NORMTOWER_ORACLE_H_
