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

#ifndef NORMTOWER_NORMTHEORY_H_
#define NORMTOWER_NORMTHEORY_H_

#include <string>
#include <vector>

#include "normtower/tower.h"

// Decision procedures for the subgroup chain of K = K_alpha,
//
//   H_beta = K_beta^{G_beta} (+) sum_{beta < gamma < alpha} L_gamma,
//   H_alpha = K,
//
// where L_gamma is the set of maps G_gamma -> K_gamma that are trivial at
// the identity. The chain satisfies N_K(H_beta) = H_{beta+1},
// H_beta = union of H_gamma (gamma < beta) at limits, and
// H_{beta+1} / H_beta = G_beta.
namespace normtower {

enum class MembershipRule {
  kAtOrBelowBeta,          // level(x) <= beta: x in K_beta
  kStripIdentityWrapper,   // (f, 1) at delta > beta: descend into f(1)
  kGPartNontrivial,        // (f, g) at delta >= beta with g != 1: reject
  kCoreInKbetaPower,       // (f, 1) at delta = beta: x in K_beta^{G_beta}
};

struct MembershipStep {
  Ordinal level;
  MembershipRule rule;
};

struct MembershipTrace {
  std::vector<MembershipStep> steps;
  bool verdict = false;
};

std::string RuleName(MembershipRule rule);
/// JSON list of {"level": ..., "rule": ...} objects.
std::string TraceToJson(const MembershipTrace& trace);

/// x in K_beta, i.e. Level(x) <= beta. Requires 1 <= beta <= alpha.
bool MemberK(const TowerConfig& cfg, const Ordinal& beta, const TowerElement& x);

/// x in L_gamma. Requires 1 <= gamma < alpha.
bool MemberL(const TowerConfig& cfg, const Ordinal& gamma, const TowerElement& x);

/// x in H_beta, by structural recursion on the nesting of x. Requires
/// 1 <= beta <= alpha and x canonical.
MembershipTrace MemberHTrace(const TowerConfig& cfg, const Ordinal& beta,
                             const TowerElement& x);
bool MemberH(const TowerConfig& cfg, const Ordinal& beta, const TowerElement& x);

/// Replays a trace against x; true iff every step is justified by x and the
/// final verdict follows.
bool ReplayTrace(const TowerConfig& cfg, const Ordinal& beta,
                 const TowerElement& x, const MembershipTrace& trace);

/// x in N_K(H_beta), decided as x in H_{beta+1}. Requires 1 <= beta < alpha.
bool IsNormalizing(const TowerConfig& cfg, const Ordinal& beta,
                   const TowerElement& x);

/// A fixed element of K_delta outside H_beta: (1, g0) at level beta + 1 with
/// g0 the first non-identity element of G_beta. Requires beta < delta <= alpha.
TowerElement SampleOutsideH(const TowerConfig& cfg, const Ordinal& beta,
                            const Ordinal& delta);

/// For x outside H_{beta+1}, finds the first layer (f, g) with g != 1 at
/// some delta >= beta + 1 and conjugates
///
///   l = (g^-1 -> f(1)^-1 k f(1), 1) in L_delta,  k = SampleOutsideH(beta, delta)
///
/// by x. The verdicts are recomputed with MemberH. Throws DomainError when
/// x normalizes H_beta.
WitnessRecord WitnessNonNormalizing(const TowerConfig& cfg, const Ordinal& beta,
                                    const TowerElement& x);

/// For a limit beta and x in H_beta, some gamma < beta with x in H_gamma: the
/// level of x once identity wrappers at delta >= beta are stripped.
Ordinal CoreLevel(const TowerConfig& cfg, const Ordinal& beta,
                  const TowerElement& x);

/// The map H_{beta+1} -> G_beta with kernel H_beta. Requires
/// 1 <= beta < alpha and x in H_{beta+1}.
BaseElement Quotient(const TowerConfig& cfg, const Ordinal& beta,
                     const TowerElement& x);

/// Section G_beta -> H_{beta+1} of Quotient: g -> (1, g) at level beta + 1.
TowerElement QuotientSection(const TowerConfig& cfg, const Ordinal& beta,
                             const BaseElement& g);

}  // namespace normtower

#endif  // NORMTOWER_NORMTHEORY_H_
