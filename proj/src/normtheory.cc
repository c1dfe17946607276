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

#include "normtower/normtheory.h"

#include "json.hpp"
#include "normtower/error.h"

namespace normtower {

namespace {

enum class Top { kInclusive, kExclusive };

void RequireIndex(const TowerConfig& cfg, const Ordinal& beta, Top top,
                  const char* name) {
  const bool too_big =
      top == Top::kInclusive ? beta > cfg.alpha() : beta >= cfg.alpha();
  if (beta.IsZero() || too_big) {
    const char* problem = beta.IsZero()       ? " is below 1"
                          : beta > cfg.alpha() ? " exceeds alpha"
                                               : " must be below alpha";
    throw DomainError(std::string(name) + problem + " (" + name + " = " +
                      beta.ToString() + ", alpha = " + cfg.alpha().ToString() +
                      ")");
  }
}

// f(1) of a node, identity when 1 is outside the support.
TowerElement ValueAtIdentity(const TowerConfig& cfg, const TowerElement& x) {
  const auto& node = x.node();
  const TowerElement* v = node.Find(Identity(cfg.ActingGroup(node.delta)));
  return v ? *v : IdentityElement(cfg);
}

bool HasTrivialG(const TowerConfig& cfg, const TowerElement& x) {
  return IsIdentity(cfg.ActingGroup(x.node().delta), x.node().g);
}

}  // namespace

std::string RuleName(MembershipRule rule) {
  switch (rule) {
    case MembershipRule::kAtOrBelowBeta:
      return "AtOrBelowBeta";
    case MembershipRule::kStripIdentityWrapper:
      return "StripIdentityWrapper";
    case MembershipRule::kGPartNontrivial:
      return "GPartNontrivial";
    case MembershipRule::kCoreInKbetaPower:
      return "CoreInKbetaPower";
  }
  return "?";
}

std::string TraceToJson(const MembershipTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : trace.steps) {
    steps.push_back(
        {{"level", step.level.ToString()}, {"rule", RuleName(step.rule)}});
  }
  return steps.dump();
}

bool MemberK(const TowerConfig& cfg, const Ordinal& beta,
             const TowerElement& x) {
  RequireIndex(cfg, beta, Top::kInclusive, "beta");
  return Level(x) <= beta;
}

bool MemberL(const TowerConfig& cfg, const Ordinal& gamma,
             const TowerElement& x) {
  RequireIndex(cfg, gamma, Top::kExclusive, "gamma");
  if (IsIdentityElement(cfg, x)) return true;
  if (x.IsBase() || x.node().delta != gamma) return false;
  const GroupSpec& acting = cfg.ActingGroup(gamma);
  return IsIdentity(acting, x.node().g) &&
         x.node().Find(Identity(acting)) == nullptr;
}

MembershipTrace MemberHTrace(const TowerConfig& cfg, const Ordinal& beta,
                             const TowerElement& x) {
  RequireIndex(cfg, beta, Top::kInclusive, "beta");
  MembershipTrace trace;
  TowerElement current = x;
  while (true) {
    const Ordinal level = Level(current);
    if (level <= beta) {
      trace.steps.push_back({level, MembershipRule::kAtOrBelowBeta});
      trace.verdict = true;
      return trace;
    }
    // level = delta + 1 > beta, so delta >= beta.
    if (!HasTrivialG(cfg, current)) {
      trace.steps.push_back({level, MembershipRule::kGPartNontrivial});
      trace.verdict = false;
      return trace;
    }
    if (current.node().delta == beta) {
      trace.steps.push_back({level, MembershipRule::kCoreInKbetaPower});
      trace.verdict = true;
      return trace;
    }
    // Off-identity values form the L_delta component, inside H_beta.
    trace.steps.push_back({level, MembershipRule::kStripIdentityWrapper});
    current = ValueAtIdentity(cfg, current);
  }
}

bool MemberH(const TowerConfig& cfg, const Ordinal& beta,
             const TowerElement& x) {
  return MemberHTrace(cfg, beta, x).verdict;
}

bool ReplayTrace(const TowerConfig& cfg, const Ordinal& beta,
                 const TowerElement& x, const MembershipTrace& trace) {
  TowerElement current = x;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const bool last = i + 1 == trace.steps.size();
    if (Level(current) != step.level) return false;
    switch (step.rule) {
      case MembershipRule::kAtOrBelowBeta:
        return last && step.level <= beta && trace.verdict;
      case MembershipRule::kGPartNontrivial:
        return last && step.level > beta && !HasTrivialG(cfg, current) &&
               !trace.verdict;
      case MembershipRule::kCoreInKbetaPower:
        return last && !current.IsBase() && current.node().delta == beta &&
               HasTrivialG(cfg, current) && trace.verdict;
      case MembershipRule::kStripIdentityWrapper:
        if (last || current.IsBase() || current.node().delta <= beta ||
            !HasTrivialG(cfg, current)) {
          return false;
        }
        current = ValueAtIdentity(cfg, current);
        break;
    }
  }
  return false;
}

bool IsNormalizing(const TowerConfig& cfg, const Ordinal& beta,
                   const TowerElement& x) {
  RequireIndex(cfg, beta, Top::kExclusive, "beta");
  return MemberH(cfg, beta.Successor(), x);
}

TowerElement SampleOutsideH(const TowerConfig& cfg, const Ordinal& beta,
                            const Ordinal& delta) {
  RequireIndex(cfg, beta, Top::kExclusive, "beta");
  if (delta <= beta || delta > cfg.alpha()) {
    throw DomainError("need beta < delta <= alpha, got beta = " +
                      beta.ToString() + ", delta = " + delta.ToString());
  }
  // The least successor level in (beta, delta] is always beta + 1.
  return TowerElement::MakeNode(beta, {},
                                FirstNonIdentity(cfg.ActingGroup(beta)));
}

WitnessRecord WitnessNonNormalizing(const TowerConfig& cfg,
                                    const Ordinal& beta,
                                    const TowerElement& x) {
  if (IsNormalizing(cfg, beta, x)) {
    throw DomainError("element normalizes H_" + beta.ToString() +
                      "; no witness exists");
  }
  // Descend through identity wrappers to the layer with g != 1. Outside
  // H_{beta+1} guarantees such a layer at delta >= beta + 1.
  TowerElement layer = x;
  while (Level(layer) > beta.Successor() && HasTrivialG(cfg, layer)) {
    layer = ValueAtIdentity(cfg, layer);
  }

  const auto& node = layer.node();
  const GroupSpec& acting = cfg.ActingGroup(node.delta);
  const TowerElement f1 = ValueAtIdentity(cfg, layer);
  const TowerElement k = SampleOutsideH(cfg, beta, node.delta);
  TowerElement value = Mul(cfg, Inv(cfg, f1), Mul(cfg, k, f1));
  TowerElement l = TowerElement::MakeNode(
      node.delta, {{Inverse(acting, node.g), std::move(value)}},
      Identity(acting));
  l = Canonicalize(cfg, l);

  WitnessRecord record;
  record.beta = beta;
  record.x = x;
  // Mul lifts l to Level(x) before the wreath law applies.
  record.conjugate = Conjugate(cfg, x, l);
  record.l = std::move(l);
  record.x_outside_next = !MemberH(cfg, beta.Successor(), record.x);
  record.l_in_subgroup = MemberH(cfg, beta, record.l);
  record.conjugate_outside = !MemberH(cfg, beta, record.conjugate);
  return record;
}

Ordinal CoreLevel(const TowerConfig& cfg, const Ordinal& beta,
                  const TowerElement& x) {
  if (!beta.IsLimit()) {
    throw DomainError("core level needs a limit ordinal, got " +
                      beta.ToString());
  }
  if (!MemberH(cfg, beta, x)) {
    throw DomainError("element is not in H_" + beta.ToString());
  }
  TowerElement core = x;
  while (Level(core) > beta) core = ValueAtIdentity(cfg, core);
  return Level(core);
}

BaseElement Quotient(const TowerConfig& cfg, const Ordinal& beta,
                     const TowerElement& x) {
  RequireIndex(cfg, beta, Top::kExclusive, "beta");
  const Ordinal next = beta.Successor();
  if (!MemberH(cfg, next, x)) {
    throw DomainError("element is not in H_" + next.ToString());
  }
  const GroupSpec& acting = cfg.ActingGroup(beta);
  TowerElement core = x;
  while (Level(core) > next) core = ValueAtIdentity(cfg, core);
  if (Level(core) <= beta) return Identity(acting);
  return core.node().g;
}

TowerElement QuotientSection(const TowerConfig& cfg, const Ordinal& beta,
                             const BaseElement& g) {
  RequireIndex(cfg, beta, Top::kExclusive, "beta");
  const GroupSpec& acting = cfg.ActingGroup(beta);
  if (!Conforms(acting, g)) {
    throw DomainError(g.ToString() + " does not belong to G_" +
                      beta.ToString() + " = " + acting.ToString());
  }
  if (IsIdentity(acting, g)) return IdentityElement(cfg);
  return TowerElement::MakeNode(beta, {}, g);
}

}  // namespace normtower
