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

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "normtower/error.h"
#include "normtower/normtheory.h"

namespace normtower {

Ordinal RandomOrdinal(Rng& rng, std::uint32_t depth, std::uint32_t width) {
  std::uniform_int_distribution<std::uint64_t> small(0, 20);
  if (depth == 0) return Ordinal::Natural(small(rng));
  std::uniform_int_distribution<std::uint32_t> terms(0, width);
  std::uniform_int_distribution<std::uint64_t> coefficient(1, 5);
  std::vector<Ordinal> exponents;
  for (std::uint32_t n = terms(rng); n > 0; --n) {
    exponents.push_back(RandomOrdinal(rng, depth - 1, width));
  }
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  exponents.erase(std::unique(exponents.begin(), exponents.end()),
                  exponents.end());
  Ordinal out;
  for (const auto& e : exponents) {
    out = Add(out, Ordinal::OmegaPower(e, coefficient(rng)));
  }
  return out;
}

TowerElement RandomSubgroupMember(const TowerConfig& cfg, const Ordinal& beta,
                                  Rng& rng, const RandomBounds& bounds) {
  if (beta >= cfg.alpha()) return RandomElement(cfg, rng, bounds);
  RandomBounds inner = bounds;
  inner.depth = std::max<std::uint32_t>(bounds.depth, 2) - 1;
  std::uniform_int_distribution<std::uint32_t> support_size(0, bounds.support);

  // (f, 1) at level beta + 1 with values in K_beta; optionally off the
  // identity only, which is the L_gamma shape.
  auto component = [&](const Ordinal& delta, bool avoid_identity) {
    const GroupSpec& acting = cfg.ActingGroup(delta);
    TowerElement::Support f;
    for (std::uint32_t n = support_size(rng); n > 0; --n) {
      BaseElement key = SampleElement(acting, rng, bounds.magnitude);
      if (avoid_identity && IsIdentity(acting, key)) continue;
      if (std::any_of(f.begin(), f.end(),
                      [&](const auto& e) { return e.first == key; })) {
        continue;
      }
      f.emplace_back(std::move(key), RandomElementBelow(cfg, delta, rng, inner));
    }
    return Canonicalize(
        cfg, TowerElement::MakeNode(delta, std::move(f), Identity(acting)));
  };

  TowerElement x = component(beta, false);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int n = extra(rng); n > 0; --n) {
    const Ordinal gamma = SampleOrdinalBelow(cfg.alpha(), rng);
    if (gamma <= beta) continue;
    x = Mul(cfg, x, component(gamma, true));
  }
  return x;
}

std::vector<Ordinal> LimitsUpTo(const Ordinal& alpha) {
  std::vector<Ordinal> limits;
  for (const auto& b : ProbeBelow(alpha)) {
    if (b.IsLimit()) limits.push_back(b);
  }
  if (alpha.IsLimit()) limits.push_back(alpha);
  return limits;
}

std::string FuzzSummary::ToText() const {
  std::ostringstream out;
  out << "seed " << seed << ", " << iterations << " iterations\n";
  for (const auto& [property, count] : checks) {
    std::size_t failed = std::count_if(
        failures.begin(), failures.end(),
        [&](const PropertyFailure& f) { return f.property == property; });
    out << "  " << property << ": " << count << " checks, " << failed
        << " failures\n";
  }
  for (const auto& f : failures) {
    out << "FAIL " << f.property << " at iteration " << f.iteration
        << " (seed " << seed << "): " << f.detail << "\n";
    for (const auto& [name, literal] : f.elements) {
      out << "    " << name << " = " << literal << "\n";
    }
  }
  out << (Passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string FuzzSummary::ToJson() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["iterations"] = iterations;
  doc["checks"] = checks;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json elements = nlohmann::ordered_json::object();
    for (const auto& [name, literal] : f.elements) elements[name] = literal;
    doc["failures"].push_back({{"property", f.property},
                               {"iteration", f.iteration},
                               {"detail", f.detail},
                               {"elements", elements}});
  }
  doc["passed"] = Passed();
  return doc.dump(2);
}

namespace {

using MulFn = std::function<TowerElement(const TowerElement&, const TowerElement&)>;

// Wreath product that forgets to translate f2 by g1.
TowerElement FaultyMul(const TowerConfig& cfg, const TowerElement& x,
                       const TowerElement& y) {
  if (IsIdentityElement(cfg, x)) return y;
  if (IsIdentityElement(cfg, y)) return x;
  if (x.IsBase() && y.IsBase()) return Mul(cfg, x, y);
  const Ordinal lx = Level(x);
  const Ordinal ly = Level(y);
  const Ordinal top = lx < ly ? ly : lx;
  const Ordinal delta = top.Predecessor();
  const TowerElement a = Lift(cfg, x, top);
  const TowerElement b = Lift(cfg, y, top);
  std::map<BaseElement, TowerElement> f(a.node().f.begin(), a.node().f.end());
  for (const auto& [key, value] : b.node().f) {
    auto it = f.find(key);
    if (it == f.end()) {
      f.emplace(key, value);
    } else {
      it->second = FaultyMul(cfg, it->second, value);
    }
  }
  TowerElement::Support support(f.begin(), f.end());
  return Canonicalize(
      cfg, TowerElement::MakeNode(
               delta, std::move(support),
               Multiply(cfg.ActingGroup(delta), a.node().g, b.node().g)));
}

class TowerHarness {
 public:
  TowerHarness(const TowerConfig& cfg, const FuzzOptions& options)
      : cfg_(cfg), options_(options), rng_(options.seed) {
    summary_.seed = options.seed;
    if (options.inject_fault) {
      mul_ = [this](const TowerElement& x, const TowerElement& y) {
        return FaultyMul(cfg_, x, y);
      };
    } else {
      mul_ = [this](const TowerElement& x, const TowerElement& y) {
        return Mul(cfg_, x, y);
      };
    }
  }

  FuzzSummary Run() {
    for (iteration_ = 0; iteration_ < options_.iterations; ++iteration_) {
      ++summary_.iterations;
      RunIteration();
    }
    return summary_;
  }

 private:
  using Named = std::vector<std::pair<std::string, TowerElement>>;

  void Check(const std::string& property, const std::function<bool()>& body,
             const std::string& detail, const Named& elements) {
    ++summary_.checks[property];
    std::string why = detail;
    bool ok = false;
    try {
      ok = body();
    } catch (const Error& e) {
      why = detail + " (threw: " + e.what() + ")";
    }
    if (ok || summary_.failures.size() >= options_.max_failures) return;
    PropertyFailure failure{property, iteration_, why, {}};
    for (const auto& [name, x] : elements) {
      failure.elements.emplace_back(name, FormatElement(x));
    }
    summary_.failures.push_back(std::move(failure));
  }

  TowerElement Random() { return RandomElement(cfg_, rng_, options_.bounds); }
  TowerElement Member(const Ordinal& beta) {
    return RandomSubgroupMember(cfg_, beta, rng_, options_.bounds);
  }
  Ordinal SampleBeta() { return SampleOrdinalBelow(cfg_.alpha(), rng_); }
  TowerElement Inverse(const TowerElement& x) { return Inv(cfg_, x); }
  TowerElement Conj(const TowerElement& x, const TowerElement& y) {
    return mul_(mul_(x, y), Inverse(x));
  }

  void RunIteration() {
    const TowerElement e = IdentityElement(cfg_);
    const TowerElement x = Random();
    const TowerElement y = Random();
    const TowerElement z = Random();

    Check("associativity",
          [&] { return mul_(mul_(x, y), z) == mul_(x, mul_(y, z)); },
          "(xy)z != x(yz)", {{"x", x}, {"y", y}, {"z", z}});
    Check("identity", [&] { return mul_(x, e) == x && mul_(e, x) == x; },
          "x*1 or 1*x differs from x", {{"x", x}});
    Check("inverse",
          [&] {
            const TowerElement xi = Inverse(x);
            return mul_(x, xi) == e && mul_(xi, x) == e;
          },
          "x*x^-1 or x^-1*x is not the identity", {{"x", x}});
    Check("canonical_form",
          [&] {
            const TowerElement xy = mul_(x, y);
            ValidateElement(cfg_, x);
            ValidateElement(cfg_, xy);
            ValidateElement(cfg_, Inverse(x));
            return Canonicalize(cfg_, x) == x && Canonicalize(cfg_, xy) == xy;
          },
          "element violates the canonical-form invariants",
          {{"x", x}, {"y", y}});
    Check("literal_round_trip",
          [&] { return ParseElement(cfg_, FormatElement(x)) == x; },
          "parse(format(x)) != x", {{"x", x}});
    Check("level_bounds",
          [&] {
            const Ordinal top = std::max(Level(x), Level(y));
            return Level(mul_(x, y)) <= top && Level(Inverse(x)) == Level(x);
          },
          "level(xy) > max(level x, level y) or level(x^-1) != level(x)",
          {{"x", x}, {"y", y}});

    // Embedding K_gamma <= K_t is a homomorphism; lifts are a congruence.
    {
      const Ordinal top = std::max(Level(x), Level(y));
      Ordinal t = SampleBeta().Successor();
      if (t < top) t = top;
      Check("embedding_homomorphism",
            [&] {
              const TowerElement lx = Lift(cfg_, x, t);
              const TowerElement ly = Lift(cfg_, y, t);
              return Canonicalize(cfg_, lx) == x &&
                     Canonicalize(cfg_, mul_(lx, ly)) ==
                         Canonicalize(cfg_, Lift(cfg_, mul_(x, y), t)) &&
                     Canonicalize(cfg_, mul_(lx, y)) == mul_(x, y);
            },
            "lift(x)lift(y) != lift(xy) at level " + t.ToString(),
            {{"x", x}, {"y", y}});
    }

    const Ordinal beta = SampleBeta();
    const Ordinal next = beta.Successor();
    const std::string b = beta.ToString();

    Check("trace_replay",
          [&] {
            const MembershipTrace trace = MemberHTrace(cfg_, beta, x);
            if (!ReplayTrace(cfg_, beta, x, trace)) return false;
            if (trace.verdict) return true;
            const auto& last = trace.steps.back();
            return last.rule == MembershipRule::kGPartNontrivial &&
                   last.level > beta;
          },
          "membership trace does not replay for beta = " + b, {{"x", x}});

    const TowerElement h = Member(beta);
    Check("member_h_components", [&] { return MemberH(cfg_, beta, h); },
          "element assembled from the components of H_" + b + " rejected",
          {{"h", h}});
    {
      Ordinal upper = beta;
      if (cfg_.alpha() > beta) {
        const Ordinal s = SampleBeta();
        upper = s > beta ? s : cfg_.alpha();
      }
      Check("h_monotonicity",
            [&] {
              return (!MemberH(cfg_, beta, x) || MemberH(cfg_, upper, x)) &&
                     MemberH(cfg_, upper, h) && MemberH(cfg_, cfg_.alpha(), x);
            },
            "H_" + b + " not contained in H_" + upper.ToString() +
                " or H_alpha != K",
            {{"x", x}, {"h", h}});
    }

    // x in N_K(H_beta) keeps H_beta; H_beta is normal in H_{beta+1}.
    if (IsNormalizing(cfg_, beta, x)) {
      Check("normalizer_soundness",
            [&] { return MemberH(cfg_, beta, Conj(x, h)); },
            "normalizing x conjugates h out of H_" + b, {{"x", x}, {"h", h}});
    }
    const TowerElement n = Member(next);
    Check("normality",
          [&] {
            return IsNormalizing(cfg_, beta, n) &&
                   MemberH(cfg_, beta, Conj(n, h));
          },
          "element of H_" + next.ToString() + " conjugates h out of H_" + b,
          {{"x", n}, {"h", h}});

    if (!IsNormalizing(cfg_, beta, x)) {
      Check("witness_completeness",
            [&] {
              const WitnessRecord w = WitnessNonNormalizing(cfg_, beta, x);
              return w.Verified() && Conj(x, w.l) == w.conjugate &&
                     MemberL(cfg_, w.l.node().delta, w.l);
            },
            "no verified witness that x fails to normalize H_" + b,
            {{"x", x}});
    }

    for (const Ordinal& limit : limits_) {
      const TowerElement m = Member(limit);
      Check("limit_property",
            [&] {
              const Ordinal core = CoreLevel(cfg_, limit, m);
              if (!(core < limit) || !MemberH(cfg_, core, m)) return false;
              // Reverse inclusion: H_gamma <= H_limit for gamma < limit.
              const Ordinal gamma = SampleOrdinalBelow(limit, rng_);
              if (!MemberH(cfg_, limit, Member(gamma))) return false;
              if (MemberH(cfg_, limit, x)) {
                const Ordinal cx = CoreLevel(cfg_, limit, x);
                return cx < limit && MemberH(cfg_, cx, x);
              }
              return !MemberH(cfg_, gamma, x);
            },
            "H_" + limit.ToString() + " is not the union of the H_gamma below",
            {{"m", m}, {"x", x}});
    }

    // H_{beta+1} / H_beta = G_beta through Quotient.
    {
      const GroupSpec& acting = cfg_.ActingGroup(beta);
      const TowerElement u = Member(next);
      const TowerElement v = Member(next);
      Check("quotient_homomorphism",
            [&] {
              return Quotient(cfg_, beta, mul_(u, v)) ==
                     Multiply(acting, Quotient(cfg_, beta, u),
                              Quotient(cfg_, beta, v));
            },
            "quotient onto G_" + b + " is not multiplicative",
            {{"u", u}, {"v", v}});
      Check("quotient_kernel",
            [&] {
              return IsIdentity(acting, Quotient(cfg_, beta, u)) ==
                         MemberH(cfg_, beta, u) &&
                     IsIdentity(acting, Quotient(cfg_, beta, h));
            },
            "kernel of the quotient onto G_" + b + " is not H_" + b,
            {{"u", u}, {"h", h}});
      const BaseElement g = SampleElement(acting, rng_, options_.bounds.magnitude);
      const TowerElement s = QuotientSection(cfg_, beta, g);
      Check("quotient_section",
            [&] {
              return Quotient(cfg_, beta, s) == g && MemberH(cfg_, next, s) &&
                     (IsIdentity(acting, g) || !MemberH(cfg_, beta, s));
            },
            "section of " + g.ToString() + " is not a strict-growth witness",
            {{"s", s}});
    }

    // (f, g) l (f, g)^-1 = (f (g . l) f^-1, 1) for l in L_delta.
    {
      const Ordinal delta = SampleBeta();
      const GroupSpec& acting = cfg_.ActingGroup(delta);
      const TowerElement outer = RandomNodeAt(delta);
      const TowerElement l = RandomLAt(delta);
      Check("conjugation_identity",
            [&] {
              const auto& fg = outer.node();
              std::map<BaseElement, TowerElement> pointwise;
              for (const auto& [s, value] : l.node().f) {
                const BaseElement t = Multiply(acting, fg.g, s);
                const TowerElement* ft = fg.Find(t);
                const TowerElement f_t = ft ? *ft : IdentityElement(cfg_);
                pointwise.emplace(
                    t, Mul(cfg_, Mul(cfg_, f_t, value), Inv(cfg_, f_t)));
              }
              TowerElement::Support support(pointwise.begin(), pointwise.end());
              const TowerElement expected = Canonicalize(
                  cfg_, TowerElement::MakeNode(delta, std::move(support),
                                               Identity(acting)));
              return Conj(outer, l) == expected;
            },
            "conjugation by (f, g) disagrees with the pointwise formula at d=" +
                delta.ToString(),
            {{"x", outer}, {"l", l}});
    }
  }

  // A canonical node (f, g) exactly at level delta + 1; g != 1 keeps
  // canonicalization from collapsing it.
  TowerElement RandomNodeAt(const Ordinal& delta) {
    const GroupSpec& acting = cfg_.ActingGroup(delta);
    RandomBounds inner = options_.bounds;
    inner.depth = std::max<std::uint32_t>(inner.depth, 2) - 1;
    std::map<BaseElement, TowerElement> f;
    std::uniform_int_distribution<std::uint32_t> size(0, options_.bounds.support);
    for (std::uint32_t i = size(rng_); i > 0; --i) {
      f.insert_or_assign(SampleElement(acting, rng_, options_.bounds.magnitude),
                         RandomElementBelow(cfg_, delta, rng_, inner));
    }
    BaseElement g = SampleElement(acting, rng_, options_.bounds.magnitude);
    if (IsIdentity(acting, g)) g = FirstNonIdentity(acting);
    TowerElement::Support support(f.begin(), f.end());
    return Canonicalize(
        cfg_, TowerElement::MakeNode(delta, std::move(support), std::move(g)));
  }

  TowerElement RandomLAt(const Ordinal& delta) {
    const GroupSpec& acting = cfg_.ActingGroup(delta);
    RandomBounds inner = options_.bounds;
    inner.depth = std::max<std::uint32_t>(inner.depth, 2) - 1;
    BaseElement key = SampleElement(acting, rng_, options_.bounds.magnitude);
    if (IsIdentity(acting, key)) key = FirstNonIdentity(acting);
    TowerElement value = RandomElementBelow(cfg_, delta, rng_, inner);
    if (IsIdentityElement(cfg_, value)) {
      value = TowerElement::Base(FirstNonIdentity(cfg_.base()));
    }
    return TowerElement::MakeNode(delta, {{std::move(key), std::move(value)}},
                                  Identity(acting));
  }

  const TowerConfig& cfg_;
  FuzzOptions options_;
  Rng rng_;
  MulFn mul_;
  FuzzSummary summary_;
  std::uint64_t iteration_ = 0;
  std::vector<Ordinal> limits_ = LimitsUpTo(cfg_.alpha());
};

}  // namespace

FuzzSummary RunTowerFuzz(const TowerConfig& cfg, const FuzzOptions& options) {
  return TowerHarness(cfg, options).Run();
}

FuzzSummary RunOrdinalFuzz(std::uint64_t seed, std::uint64_t iterations) {
  Rng rng(seed);
  FuzzSummary summary;
  summary.seed = seed;
  const Ordinal one = Ordinal::Natural(1);
  auto check = [&](const std::string& property, bool ok,
                   const std::string& detail) {
    ++summary.checks[property];
    if (!ok && summary.failures.size() < 10) {
      summary.failures.push_back({property, summary.iterations, detail, {}});
    }
  };
  for (std::uint64_t i = 0; i < iterations; ++i) {
    const Ordinal a = RandomOrdinal(rng);
    const Ordinal b = RandomOrdinal(rng);
    const Ordinal c = RandomOrdinal(rng);
    const std::string abc =
        a.ToString() + " | " + b.ToString() + " | " + c.ToString();

    const auto ab = Compare(a, b);
    const auto ba = Compare(b, a);
    const int outcomes = (ab < 0) + (ab == 0) + (ab > 0);
    check("trichotomy",
          outcomes == 1 && (ab < 0) == (ba > 0) && (ab == 0) == (a == b),
          abc);

    std::vector<Ordinal> sorted{a, b, c};
    std::sort(sorted.begin(), sorted.end());
    // Every orientation of the triple must respect the sorted order.
    check("transitivity",
          !(Compare(sorted[0], sorted[1]) > 0) &&
              !(Compare(sorted[1], sorted[2]) > 0) &&
              !(Compare(sorted[0], sorted[2]) > 0) &&
              (!(a <= b && b <= c) || a <= c) && (!(a < b && b < c) || a < c),
          abc);

    check("add_associativity", Add(Add(a, b), c) == Add(a, Add(b, c)), abc);
    check("add_right_monotone",
          b.IsZero() ? Add(a, b) == a : a < Add(a, b), abc);

    const Classification succ = Classify(Add(a, one));
    check("classify_successor",
          succ.kind == OrdinalKind::kSuccessor && succ.predecessor == a, abc);

    Ordinal limit = a;
    if (!limit.IsLimit()) {
      Ordinal e = RandomOrdinal(rng, 1);
      if (e.IsZero()) e = one;
      limit = Add(a, Ordinal::OmegaPower(e));
    }
    std::uniform_int_distribution<std::uint64_t> index(0, 63);
    const std::uint64_t n = index(rng);
    const Ordinal lo = FundamentalSequence(limit, n);
    const Ordinal hi = FundamentalSequence(limit, n + 1);
    check("fundamental_sequence", lo < hi && hi < limit,
          limit.ToString() + " at n = " + std::to_string(n));

    check("format_round_trip",
          ParseOrdinal(a.ToString()) == a &&
              ParseOrdinal(a.ToString()).ToString() == a.ToString(),
          a.ToString());
    ++summary.iterations;
  }
  return summary;
}

}  // namespace normtower
