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

#include "normtower/tower.h"

#include <algorithm>
#include <map>

#include "normtower/error.h"

namespace normtower {

TowerConfig::TowerConfig(Ordinal alpha, GroupSpec base,
                         std::vector<GroupInterval> assignment)
    : alpha_(std::move(alpha)),
      base_(std::move(base)),
      assignment_(std::move(assignment)) {
  const Ordinal one = Ordinal::Natural(1);
  if (alpha_ <= one) {
    throw ConfigError("alpha must exceed 1, got " + alpha_.ToString());
  }
  if (assignment_.empty()) {
    throw ConfigError("assignment is empty; it must cover [1, " +
                      alpha_.ToString() + ")");
  }
  Ordinal expected_lo = one;
  for (const auto& iv : assignment_) {
    const std::string name =
        "[" + iv.lo.ToString() + ", " + iv.hi.ToString() + ")";
    if (iv.lo != expected_lo) {
      throw ConfigError("interval " + name + " should start at " +
                        expected_lo.ToString() +
                        " (intervals must be ordered, disjoint and gapless)");
    }
    if (iv.hi <= iv.lo) {
      throw ConfigError("interval " + name + " is empty");
    }
    if (iv.hi > alpha_) {
      throw ConfigError("interval " + name + " extends past alpha " +
                        alpha_.ToString());
    }
    // GroupSpec factories already reject C(0), C(1), S(1), S(2); a product
    // of admissible factors is non-trivial as well.
    expected_lo = iv.hi;
  }
  if (expected_lo != alpha_) {
    throw ConfigError("assignment stops at " + expected_lo.ToString() +
                      " but must cover [1, " + alpha_.ToString() + ")");
  }
}

const GroupSpec& TowerConfig::ActingGroup(const Ordinal& delta) const {
  for (const auto& iv : assignment_) {
    if (iv.lo <= delta && delta < iv.hi) return iv.group;
  }
  throw DomainError("no acting group G_" + delta.ToString() +
                    " (need 1 <= delta < alpha = " + alpha_.ToString() + ")");
}

bool TowerConfig::IsFinite() const {
  if (!alpha_.IsFinite() || !base_.IsFinite()) return false;
  return std::all_of(assignment_.begin(), assignment_.end(),
                     [](const GroupInterval& iv) { return iv.group.IsFinite(); });
}

TowerElement TowerElement::Base(BaseElement value) {
  TowerElement x;
  x.rep_ = std::move(value);
  return x;
}

TowerElement TowerElement::MakeNode(Ordinal delta, Support f, BaseElement g) {
  std::sort(f.begin(), f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TowerElement x;
  x.rep_ = std::make_shared<const Node>(
      Node{std::move(delta), std::move(f), std::move(g)});
  return x;
}

const TowerElement* TowerElement::Node::Find(const BaseElement& key) const {
  auto it = std::lower_bound(
      f.begin(), f.end(), key,
      [](const auto& entry, const BaseElement& k) { return entry.first < k; });
  if (it == f.end() || it->first != key) return nullptr;
  return &it->second;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const TowerElement& a, const TowerElement& b) {
  if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
  if (a.IsBase()) return a.base_value() <=> b.base_value();
  const auto& pa = std::get<std::shared_ptr<const TowerElement::Node>>(a.rep_);
  const auto& pb = std::get<std::shared_ptr<const TowerElement::Node>>(b.rep_);
  if (pa == pb) return std::strong_ordering::equal;
  if (auto c = pa->delta <=> pb->delta; c != 0) return c;
  if (auto c = pa->g <=> pb->g; c != 0) return c;
  return std::lexicographical_compare_three_way(pa->f.begin(), pa->f.end(),
                                                pb->f.begin(), pb->f.end());
}

TowerElement IdentityElement(const TowerConfig& cfg) {
  return TowerElement::Base(Identity(cfg.base()));
}

bool IsIdentityElement(const TowerConfig& cfg, const TowerElement& x) {
  return x.IsBase() && IsIdentity(cfg.base(), x.base_value());
}

Ordinal Level(const TowerElement& x) {
  if (x.IsBase()) return Ordinal::Natural(1);
  return x.node().delta.Successor();
}

TowerElement Lift(const TowerConfig& cfg, const TowerElement& x,
                  const Ordinal& target) {
  const Ordinal level = Level(x);
  if (target < level) {
    throw DomainError("cannot lift an element of level " + level.ToString() +
                      " to " + target.ToString());
  }
  if (target > cfg.alpha()) {
    throw DomainError("lift target " + target.ToString() + " exceeds alpha " +
                      cfg.alpha().ToString());
  }
  if (target == level) return x;
  if (!target.IsSuccessor()) {
    throw DomainError("lift target " + target.ToString() +
                      " is a limit; elements live at successor levels");
  }
  const Ordinal delta = target.Predecessor();
  const GroupSpec& g = cfg.ActingGroup(delta);
  return TowerElement::MakeNode(delta, {{Identity(g), x}}, Identity(g));
}

namespace {

// Assembles (f, g) at `delta` from canonical values, dropping identities and
// stripping the wrapper if nothing but f(1) remains.
TowerElement MakeCanonicalNode(const TowerConfig& cfg, const Ordinal& delta,
                               std::map<BaseElement, TowerElement> f,
                               BaseElement g) {
  const GroupSpec& acting = cfg.ActingGroup(delta);
  std::erase_if(f, [&](const auto& entry) {
    return IsIdentityElement(cfg, entry.second);
  });
  if (IsIdentity(acting, g)) {
    if (f.empty()) return IdentityElement(cfg);
    if (f.size() == 1 && IsIdentity(acting, f.begin()->first)) {
      return f.begin()->second;
    }
  }
  TowerElement::Support support(std::make_move_iterator(f.begin()),
                                std::make_move_iterator(f.end()));
  return TowerElement::MakeNode(delta, std::move(support), std::move(g));
}

struct NodeView {
  std::map<BaseElement, TowerElement> f;
  BaseElement g;
};

// x as (f, g) at `delta` >= Level(x) - 1, wrapping lower elements.
NodeView ViewAt(const TowerConfig& cfg, const TowerElement& x,
                const Ordinal& delta) {
  if (!x.IsBase() && x.node().delta == delta) {
    return {{x.node().f.begin(), x.node().f.end()}, x.node().g};
  }
  const GroupSpec& acting = cfg.ActingGroup(delta);
  NodeView view{{}, Identity(acting)};
  if (!IsIdentityElement(cfg, x)) view.f.emplace(Identity(acting), x);
  return view;
}

}  // namespace

TowerElement Canonicalize(const TowerConfig& cfg, const TowerElement& x) {
  if (x.IsBase()) return x;
  const auto& node = x.node();
  std::map<BaseElement, TowerElement> f;
  for (const auto& [key, value] : node.f) {
    f.insert_or_assign(key, Canonicalize(cfg, value));
  }
  return MakeCanonicalNode(cfg, node.delta, std::move(f), node.g);
}

void ValidateElement(const TowerConfig& cfg, const TowerElement& x) {
  if (x.IsBase()) {
    if (!Conforms(cfg.base(), x.base_value())) {
      throw DomainError("base value " + x.base_value().ToString() +
                        " does not belong to " + cfg.base().ToString());
    }
    return;
  }
  const auto& node = x.node();
  if (node.delta.IsZero() || node.delta >= cfg.alpha()) {
    throw DomainError("level overflow: node with d=" + node.delta.ToString() +
                      " needs 1 <= d < alpha = " + cfg.alpha().ToString());
  }
  const GroupSpec& acting = cfg.ActingGroup(node.delta);
  if (!Conforms(acting, node.g)) {
    throw DomainError("g=" + node.g.ToString() + " does not belong to G_" +
                      node.delta.ToString() + " = " + acting.ToString());
  }
  for (std::size_t i = 0; i < node.f.size(); ++i) {
    const auto& [key, value] = node.f[i];
    if (!Conforms(acting, key)) {
      throw DomainError("key " + key.ToString() + " does not belong to G_" +
                        node.delta.ToString() + " = " + acting.ToString());
    }
    if (i > 0 && node.f[i - 1].first == key) {
      throw DomainError("duplicate key " + key.ToString());
    }
    if (Level(value) > node.delta) {
      throw DomainError("level overflow: value at key " + key.ToString() +
                        " has level " + Level(value).ToString() +
                        " above d=" + node.delta.ToString());
    }
    if (IsIdentityElement(cfg, value)) {
      throw DomainError("non-canonical: identity value at key " +
                        key.ToString());
    }
    ValidateElement(cfg, value);
  }
  if (IsIdentity(acting, node.g) &&
      (node.f.empty() ||
       (node.f.size() == 1 && IsIdentity(acting, node.f.front().first)))) {
    throw DomainError("non-canonical: trivial wrapper at d=" +
                      node.delta.ToString());
  }
}

TowerElement Mul(const TowerConfig& cfg, const TowerElement& x,
                 const TowerElement& y) {
  if (IsIdentityElement(cfg, x)) return y;
  if (IsIdentityElement(cfg, y)) return x;
  if (x.IsBase() && y.IsBase()) {
    return TowerElement::Base(
        Multiply(cfg.base(), x.base_value(), y.base_value()));
  }
  const Ordinal lx = Level(x);
  const Ordinal ly = Level(y);
  const Ordinal delta = (lx < ly ? ly : lx).Predecessor();
  const GroupSpec& acting = cfg.ActingGroup(delta);

  NodeView left = ViewAt(cfg, x, delta);
  NodeView right = ViewAt(cfg, y, delta);
  // f1 * (g1 . f2): the value of f2 at s moves to g1 s.
  for (auto& [key, value] : right.f) {
    BaseElement moved = Multiply(acting, left.g, key);
    auto it = left.f.find(moved);
    if (it == left.f.end()) {
      left.f.emplace(std::move(moved), std::move(value));
    } else {
      it->second = Mul(cfg, it->second, value);
    }
  }
  return MakeCanonicalNode(cfg, delta, std::move(left.f),
                           Multiply(acting, left.g, right.g));
}

TowerElement Inv(const TowerConfig& cfg, const TowerElement& x) {
  if (x.IsBase()) {
    return TowerElement::Base(Inverse(cfg.base(), x.base_value()));
  }
  const auto& node = x.node();
  const GroupSpec& acting = cfg.ActingGroup(node.delta);
  const BaseElement g_inv = Inverse(acting, node.g);
  // f'(t) = f(g t)^-1, so the value at s moves to g^-1 s.
  std::map<BaseElement, TowerElement> f;
  for (const auto& [key, value] : node.f) {
    f.emplace(Multiply(acting, g_inv, key), Inv(cfg, value));
  }
  return MakeCanonicalNode(cfg, node.delta, std::move(f), g_inv);
}

TowerElement Conjugate(const TowerConfig& cfg, const TowerElement& x,
                       const TowerElement& y) {
  return Mul(cfg, Mul(cfg, x, y), Inv(cfg, x));
}

Ordinal SampleOrdinalBelow(const Ordinal& bound, Rng& rng) {
  const Ordinal one = Ordinal::Natural(1);
  if (bound <= one) {
    throw DomainError("no ordinal in [1, " + bound.ToString() + ")");
  }
  std::bernoulli_distribution stop(0.5);
  std::uniform_int_distribution<std::uint64_t> index(1, 4);
  Ordinal current = bound;
  while (true) {
    Ordinal candidate = current.IsSuccessor()
                            ? current.Predecessor()
                            : FundamentalSequence(current, index(rng));
    if (candidate <= one) return one;
    if (stop(rng)) return candidate;
    current = std::move(candidate);
  }
}

TowerElement RandomElementBelow(const TowerConfig& cfg, const Ordinal& bound,
                                Rng& rng, const RandomBounds& bounds) {
  std::bernoulli_distribution stay_base(0.25);
  if (bounds.depth <= 1 || bound <= Ordinal::Natural(1) || stay_base(rng)) {
    return TowerElement::Base(SampleElement(cfg.base(), rng, bounds.magnitude));
  }
  const Ordinal delta = SampleOrdinalBelow(bound, rng);
  const GroupSpec& acting = cfg.ActingGroup(delta);
  RandomBounds inner = bounds;
  inner.depth = bounds.depth - 1;

  std::uniform_int_distribution<std::uint32_t> support_size(0, bounds.support);
  std::map<BaseElement, TowerElement> f;
  for (std::uint32_t n = support_size(rng); n > 0; --n) {
    BaseElement key = SampleElement(acting, rng, bounds.magnitude);
    f.insert_or_assign(std::move(key),
                       RandomElementBelow(cfg, delta, rng, inner));
  }
  BaseElement g = SampleElement(acting, rng, bounds.magnitude);
  return MakeCanonicalNode(cfg, delta, std::move(f), std::move(g));
}

TowerElement RandomElement(const TowerConfig& cfg, Rng& rng,
                           const RandomBounds& bounds) {
  return RandomElementBelow(cfg, cfg.alpha(), rng, bounds);
}

}  // namespace normtower
