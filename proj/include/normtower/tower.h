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

#ifndef NORMTOWER_TOWER_H_
#define NORMTOWER_TOWER_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "normtower/basegroup.h"
#include "normtower/ordinal.h"

namespace normtower {

/// Half-open ordinal interval [lo, hi) on which every G_delta is `group`.
struct GroupInterval {
  Ordinal lo;
  Ordinal hi;
  GroupSpec group;

  friend bool operator==(const GroupInterval&, const GroupInterval&) = default;
};

/// The data fixing a tower K_1 <= K_2 <= ... <= K_alpha:
///
///   K_1 = base,  K_{d+1} = K_d wr G_d,  K_l = union of K_d (d < l) at limits.
///
/// The assignment covers [1, alpha) exactly with disjoint ordered intervals.
class TowerConfig {
 public:
  /// Validates every invariant and throws ConfigError naming the first
  /// violation.
  TowerConfig(Ordinal alpha, GroupSpec base,
              std::vector<GroupInterval> assignment);

  const Ordinal& alpha() const { return alpha_; }
  const GroupSpec& base() const { return base_; }
  const std::vector<GroupInterval>& assignment() const { return assignment_; }

  /// G_delta for 1 <= delta < alpha; throws DomainError otherwise.
  const GroupSpec& ActingGroup(const Ordinal& delta) const;

  /// True when alpha is finite and the base and every G_delta are finite.
  bool IsFinite() const;

  friend bool operator==(const TowerConfig&, const TowerConfig&) = default;

 private:
  Ordinal alpha_;
  GroupSpec base_;
  std::vector<GroupInterval> assignment_;
};

/// Loads `{"alpha": "...", "base": "...", "assignment": [{"lo", "hi",
/// "group"}, ...]}`.
TowerConfig ParseConfig(std::string_view json_text);
TowerConfig LoadConfig(const std::string& path);
std::string ConfigToJson(const TowerConfig& cfg);

/// An element of K_alpha.
///
/// Either a base element (level 1) or a node (f, g) of
/// K_{delta+1} = K_delta^{G_delta} x| G_delta at level delta + 1, where f is
/// a finitely supported map G_delta -> K_delta stored as its sorted support.
/// K_delta sits inside K_{delta+1} as the maps supported at the identity of
/// G_delta.
///
/// Canonical elements never contain identity values in f and never have the
/// form (f, 1) with f supported inside {1}; such wrappers are replaced by
/// f(1). Elements are immutable and share subtrees.
class TowerElement {
 public:
  struct Node;
  using Support = std::vector<std::pair<BaseElement, TowerElement>>;

  TowerElement() = default;  // Base(default BaseElement); use IdentityElement.

  static TowerElement Base(BaseElement value);
  /// Builds a node verbatim, sorting the support by key. No canonicalization.
  static TowerElement MakeNode(Ordinal delta, Support f, BaseElement g);

  bool IsBase() const { return std::holds_alternative<BaseElement>(rep_); }
  const BaseElement& base_value() const { return std::get<BaseElement>(rep_); }
  const Node& node() const { return *std::get<std::shared_ptr<const Node>>(rep_); }

  friend bool operator==(const TowerElement& a, const TowerElement& b);
  /// Structural total order (base < node; nodes by delta, g, then support).
  friend std::strong_ordering operator<=>(const TowerElement& a,
                                          const TowerElement& b);

 private:
  std::variant<BaseElement, std::shared_ptr<const Node>> rep_;
};

struct TowerElement::Node {
  Ordinal delta;
  Support f;  // sorted by key, keys unique
  BaseElement g;

  /// f(key), or nullptr when key is outside the support.
  const TowerElement* Find(const BaseElement& key) const;
};

/// Certificate that x does not normalize H_beta: l lies in H_beta but
/// x l x^-1 does not.
struct WitnessRecord {
  Ordinal beta;
  TowerElement x;
  TowerElement l;
  TowerElement conjugate;
  bool x_outside_next = false;      // x not in H_{beta+1}
  bool l_in_subgroup = false;       // l in H_beta
  bool conjugate_outside = false;   // x l x^-1 not in H_beta

  bool Verified() const {
    return x_outside_next && l_in_subgroup && conjugate_outside;
  }
};

TowerElement IdentityElement(const TowerConfig& cfg);
bool IsIdentityElement(const TowerConfig& cfg, const TowerElement& x);

/// Least beta with x in K_beta: 1 for base elements, delta + 1 for nodes.
Ordinal Level(const TowerElement& x);

/// x viewed in K_target as the non-canonical wrapper (x supported at the
/// identity of G_{target-1}). Requires Level(x) <= target, target 1 or a
/// successor, target <= alpha.
TowerElement Lift(const TowerConfig& cfg, const TowerElement& x,
                  const Ordinal& target);

TowerElement Canonicalize(const TowerConfig& cfg, const TowerElement& x);

/// Throws DomainError unless x is canonical and conforms to cfg: deltas in
/// [1, alpha), keys and g in G_delta, values of level <= delta.
void ValidateElement(const TowerConfig& cfg, const TowerElement& x);

/// Wreath law (f1, g1)(f2, g2) = (f1 * (g1 . f2), g1 g2) with
/// (g . f)(t) = f(g^-1 t); the lower operand is lifted first. Canonical
/// inputs give a canonical result.
TowerElement Mul(const TowerConfig& cfg, const TowerElement& x,
                 const TowerElement& y);
/// (f, g)^-1 = (t -> f(g t)^-1, g^-1).
TowerElement Inv(const TowerConfig& cfg, const TowerElement& x);
/// x y x^-1.
TowerElement Conjugate(const TowerConfig& cfg, const TowerElement& x,
                       const TowerElement& y);

struct RandomBounds {
  std::uint32_t depth = 3;       // node nesting, >= 1
  std::uint32_t support = 2;     // max |support(f)| per node
  std::uint64_t magnitude = 5;   // max |value| for Z samples
};

/// Random ordinal in [1, bound) obtained by descending through predecessors
/// and fundamental sequences. Requires bound > 1.
Ordinal SampleOrdinalBelow(const Ordinal& bound, Rng& rng);

/// Canonical pseudo-random element of K_bound (level <= bound).
TowerElement RandomElementBelow(const TowerConfig& cfg, const Ordinal& bound,
                                Rng& rng, const RandomBounds& bounds);
TowerElement RandomElement(const TowerConfig& cfg, Rng& rng,
                           const RandomBounds& bounds);

/// Literal grammar:
///   elem := "b(" value ")" | "{d=" ord "; g=" value "; f={" (value ":" elem),* "}}"
/// Parsing canonicalizes and validates against cfg.
TowerElement ParseElement(const TowerConfig& cfg, std::string_view text);
std::string FormatElement(const TowerElement& x);

/// Evaluates `expr := factor ("*" factor)*` with
/// `factor := elem | "id" | "inv(" expr ")" | "conj(" expr "," expr ")" | "(" expr ")"`.
TowerElement EvaluateExpression(const TowerConfig& cfg, std::string_view text);

}  // namespace normtower

#endif  // NORMTOWER_TOWER_H_
