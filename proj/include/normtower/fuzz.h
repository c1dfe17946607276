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

#ifndef NORMTOWER_FUZZ_H_
#define NORMTOWER_FUZZ_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normtower/tower.h"

// Randomized property suites over symbolic towers (any alpha < epsilon_0,
// base Z allowed) and over ordinals.
namespace normtower {

/// Random ordinal with at most `width` terms per level and exponent nesting
/// at most `depth`.
Ordinal RandomOrdinal(Rng& rng, std::uint32_t depth = 2, std::uint32_t width = 3);

/// Random element of H_beta assembled from its direct-sum components: one
/// element of K_beta^{G_beta} times elements of L_gamma for a few sampled
/// gamma in (beta, alpha). beta = alpha gives a random element of K.
TowerElement RandomSubgroupMember(const TowerConfig& cfg, const Ordinal& beta,
                                  Rng& rng, const RandomBounds& bounds);

/// Limit ordinals <= alpha reached by descending from alpha (at most a few).
std::vector<Ordinal> LimitsUpTo(const Ordinal& alpha);

struct PropertyFailure {
  std::string property;
  std::uint64_t iteration = 0;
  std::string detail;
  /// name=literal pairs that replay the counterexample.
  std::vector<std::pair<std::string, std::string>> elements;
};

struct FuzzSummary {
  std::uint64_t seed = 0;
  std::uint64_t iterations = 0;
  std::map<std::string, std::uint64_t> checks;  // property -> evaluations
  std::vector<PropertyFailure> failures;

  bool Passed() const { return failures.empty(); }
  std::string ToText() const;
  std::string ToJson() const;
};

struct FuzzOptions {
  std::uint64_t seed = 42;
  std::uint64_t iterations = 10'000;
  RandomBounds bounds{3, 2, 5};
  /// Test-only: run the suite against a multiplication that forgets the
  /// translation action, to check that the harness notices.
  bool inject_fault = false;
  std::size_t max_failures = 10;
};

/// Group axioms, embedding homomorphism, level bounds, canonical form and
/// literal round trip, H-monotonicity, normalizer soundness and
/// constructive completeness, the limit property via CoreLevel, the
/// quotient homomorphism/kernel/section and normality, and the structural
/// conjugation identity for (f, g) l (f, g)^-1.
FuzzSummary RunTowerFuzz(const TowerConfig& cfg, const FuzzOptions& options);

/// Trichotomy, transitivity, associativity of Add, classify/successor
/// coherence, fundamental-sequence monotonicity, parse/format round trip.
FuzzSummary RunOrdinalFuzz(std::uint64_t seed, std::uint64_t iterations);

}  // namespace normtower

#endif  // NORMTOWER_FUZZ_H_
