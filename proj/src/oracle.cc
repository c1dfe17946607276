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

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>

#include "json.hpp"
#include "normtower/error.h"
#include "normtower/normtheory.h"

namespace normtower {

namespace {

std::string PermKey(const Permutation& perm) {
  return std::string(reinterpret_cast<const char*>(perm.data()),
                     perm.size() * sizeof(std::uint16_t));
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out[p] = a[b[p]];
  return out;
}

std::optional<std::uint64_t> CheckedMul(std::optional<std::uint64_t> a,
                                        std::uint64_t b) {
  if (!a) return std::nullopt;
  if (b != 0 && *a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::nullopt;
  }
  return *a * b;
}

std::optional<std::uint64_t> CheckedPow(std::uint64_t base, std::uint64_t exp) {
  std::optional<std::uint64_t> out = 1;
  for (std::uint64_t i = 0; i < exp && out; ++i) out = CheckedMul(out, base);
  return out;
}

std::uint64_t FiniteAlpha(const TowerConfig& cfg) {
  const auto alpha = cfg.alpha().AsNatural();
  if (!alpha || !cfg.IsFinite()) {
    throw DomainError("oracle needs a finite alpha and finite groups");
  }
  return *alpha;
}

std::uint64_t GroupOrderAt(const TowerConfig& cfg, std::uint64_t delta) {
  return *cfg.ActingGroup(Ordinal::Natural(delta)).Order();
}

// |K_b| for b = 1..alpha, index 0 unused.
std::vector<std::optional<std::uint64_t>> LevelOrders(const TowerConfig& cfg) {
  const std::uint64_t alpha = FiniteAlpha(cfg);
  std::vector<std::optional<std::uint64_t>> orders(alpha + 1);
  orders[1] = cfg.base().Order();
  for (std::uint64_t d = 1; d < alpha; ++d) {
    const std::uint64_t g = GroupOrderAt(cfg, d);
    orders[d + 1] =
        orders[d] ? CheckedMul(CheckedPow(*orders[d], g), g) : std::nullopt;
  }
  return orders;
}

// A finite group with its elements, their index, and its Cayley table.
struct IndexedGroup {
  std::vector<BaseElement> elements;
  std::map<BaseElement, std::size_t> index;
  CayleyTable mul;

  explicit IndexedGroup(const GroupSpec& spec) : elements(EnumerateGroup(spec)) {
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
    mul.assign(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        mul[i][j] = index.at(Multiply(spec, elements[i], elements[j]));
      }
    }
  }
};

// The imprimitive action of K_alpha on X_alpha. A point of X_{d+1} is
// encoded as q + |X_d| * t with q in X_d and t the index of an element of
// G_d.
class WreathAction {
 public:
  explicit WreathAction(const TowerConfig& cfg)
      : alpha_(FiniteAlpha(cfg)) {
    groups_.emplace_back(cfg.base());  // slot 0: K_1 acting on itself
    points_.push_back(0);
    points_.push_back(groups_[0].elements.size());
    for (std::uint64_t d = 1; d < alpha_; ++d) {
      groups_.emplace_back(cfg.ActingGroup(Ordinal::Natural(d)));
      points_.push_back(points_[d] * groups_[d].elements.size());
    }
    if (points_[alpha_] > std::numeric_limits<std::uint16_t>::max()) {
      throw DomainError("permutation domain too large for the oracle");
    }
  }

  std::size_t degree() const { return points_[alpha_]; }

  Permutation Realize(const TowerElement& x) const {
    Permutation perm(degree());
    for (std::size_t p = 0; p < perm.size(); ++p) {
      perm[p] = static_cast<std::uint16_t>(Act(x, alpha_, p));
    }
    return perm;
  }

 private:
  std::size_t Act(const TowerElement& x, std::uint64_t level,
                  std::size_t p) const {
    if (level == 1) {
      const IndexedGroup& k1 = groups_[0];
      return k1.mul[k1.index.at(x.base_value())][p];
    }
    const std::uint64_t delta = level - 1;
    const std::size_t width = points_[delta];
    const std::size_t q = p % width;
    const std::size_t t = p / width;
    if (*Level(x).AsNatural() < level) {
      // Embedded from below: supported at the identity fibre only.
      return t == 0 ? Act(x, delta, q) : p;
    }
    const IndexedGroup& g = groups_[delta];
    const auto& node = x.node();
    const std::size_t moved = g.mul[g.index.at(node.g)][t];
    const TowerElement* value = node.Find(g.elements[moved]);
    return (value ? Act(*value, delta, q) : q) + width * moved;
  }

  std::uint64_t alpha_;
  std::vector<IndexedGroup> groups_;
  std::vector<std::size_t> points_;
};

std::vector<std::size_t> Members(const std::vector<bool>& bits) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i);
  }
  return out;
}

std::vector<bool> Closure(const FiniteTowerTable& table,
                          const std::vector<std::size_t>& generators) {
  std::vector<bool> in(table.size(), false);
  std::deque<std::size_t> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t s : generators) {
      const std::size_t c = table.Product(a, s);
      if (!in[c]) {
        in[c] = true;
        queue.push_back(c);
      }
    }
  }
  return in;
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::size_t FiniteTowerTable::IndexOf(const TowerElement& x) const {
  auto it = index.find(x);
  if (it == index.end()) {
    throw DomainError("element " + FormatElement(x) + " not in table");
  }
  return it->second;
}

std::size_t FiniteTowerTable::IndexOfPerm(const Permutation& perm) const {
  auto it = perm_index.find(PermKey(perm));
  if (it == perm_index.end()) {
    throw DomainError("permutation realises no enumerated element");
  }
  return it->second;
}

std::size_t FiniteTowerTable::Product(std::size_t a, std::size_t b) const {
  return IndexOfPerm(Compose(perms[a], perms[b]));
}

std::size_t FiniteTowerTable::InverseOf(std::size_t a) const {
  return IndexOfPerm(inverse_perms[a]);
}

const std::vector<bool>& FiniteTowerTable::H(std::uint64_t beta) const {
  if (beta == 0 || beta > h_membership.size()) {
    throw DomainError("no H_" + std::to_string(beta) + " in table");
  }
  return h_membership[beta - 1];
}

std::optional<std::uint64_t> PredictedOrder(const TowerConfig& cfg) {
  if (!cfg.IsFinite()) return std::nullopt;
  return LevelOrders(cfg).back();
}

std::optional<std::uint64_t> PredictedSubgroupOrder(const TowerConfig& cfg,
                                                    std::uint64_t beta) {
  if (!cfg.IsFinite()) return std::nullopt;
  const auto orders = LevelOrders(cfg);
  const std::uint64_t alpha = orders.size() - 1;
  if (beta == 0 || beta > alpha) return std::nullopt;
  if (beta == alpha) return orders[alpha];
  std::optional<std::uint64_t> out =
      orders[beta] ? CheckedPow(*orders[beta], GroupOrderAt(cfg, beta))
                   : std::nullopt;
  for (std::uint64_t g = beta + 1; g < alpha && out; ++g) {
    if (!orders[g]) return std::nullopt;
    const auto l = CheckedPow(*orders[g], GroupOrderAt(cfg, g) - 1);
    out = l ? CheckedMul(out, *l) : std::nullopt;
  }
  return out;
}

FiniteTowerTable EnumerateTower(const TowerConfig& cfg, std::uint64_t cap) {
  const std::uint64_t alpha = FiniteAlpha(cfg);
  const auto predicted = PredictedOrder(cfg);
  if (!predicted || *predicted > cap) {
    throw DomainError(
        "predicted |K| = " +
        (predicted ? std::to_string(*predicted) : std::string("overflow")) +
        " exceeds the element cap " + std::to_string(cap));
  }

  // K_1, then K_{d+1} = all (f, g) with f : G_d -> K_d, g in G_d.
  std::vector<TowerElement> level;
  for (auto& v : EnumerateGroup(cfg.base())) {
    level.push_back(TowerElement::Base(std::move(v)));
  }
  for (std::uint64_t d = 1; d < alpha; ++d) {
    const Ordinal delta = Ordinal::Natural(d);
    const auto g_elems = EnumerateGroup(cfg.ActingGroup(delta));
    std::vector<TowerElement> next;
    for (const auto& g : g_elems) {
      std::vector<std::size_t> digits(g_elems.size(), 0);
      while (true) {
        TowerElement::Support f;
        for (std::size_t i = 0; i < digits.size(); ++i) {
          if (digits[i] != 0) f.emplace_back(g_elems[i], level[digits[i]]);
        }
        next.push_back(
            Canonicalize(cfg, TowerElement::MakeNode(delta, std::move(f), g)));
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == level.size()) digits[--i] = 0;
        if (i == 0) break;
      }
    }
    level = std::move(next);
  }

  FiniteTowerTable table{cfg, std::move(level), {}, {}, {}, {}, {}};
  const WreathAction action(cfg);
  for (std::size_t i = 0; i < table.elements.size(); ++i) {
    if (!table.index.emplace(table.elements[i], i).second) {
      throw DomainError("duplicate element in enumeration: " +
                        FormatElement(table.elements[i]));
    }
    Permutation perm = action.Realize(table.elements[i]);
    if (!table.perm_index.emplace(PermKey(perm), i).second) {
      throw DomainError("wreath action is not faithful at " +
                        FormatElement(table.elements[i]));
    }
    Permutation inverse(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) {
      inverse[perm[p]] = static_cast<std::uint16_t>(p);
    }
    table.perms.push_back(std::move(perm));
    table.inverse_perms.push_back(std::move(inverse));
  }

  for (std::uint64_t b = 1; b < alpha; ++b) {
    table.h_membership.push_back(Closure(table, SubgroupGenerators(table, b)));
  }
  table.h_membership.emplace_back(table.size(), true);
  return table;
}

std::vector<std::size_t> SubgroupGenerators(const FiniteTowerTable& table,
                                            std::uint64_t beta) {
  const TowerConfig& cfg = table.cfg;
  const std::uint64_t alpha = *cfg.alpha().AsNatural();
  std::vector<std::size_t> gens;
  if (beta >= alpha) {
    for (std::size_t i = 1; i < table.size(); ++i) gens.push_back(i);
    return gens;
  }
  // Single-point maps G_gamma -> K_gamma, at any point when gamma = beta and
  // off the identity when gamma > beta.
  for (std::uint64_t gamma = beta; gamma < alpha; ++gamma) {
    const Ordinal delta = Ordinal::Natural(gamma);
    const GroupSpec& acting = cfg.ActingGroup(delta);
    const auto points = EnumerateGroup(acting);
    for (std::size_t t = gamma == beta ? 0 : 1; t < points.size(); ++t) {
      for (std::size_t k = 1; k < table.size(); ++k) {
        if (*Level(table.elements[k]).AsNatural() > gamma) continue;
        const TowerElement x = Canonicalize(
            cfg, TowerElement::MakeNode(delta, {{points[t], table.elements[k]}},
                                        Identity(acting)));
        gens.push_back(table.IndexOf(x));
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

std::vector<std::size_t> BruteNormalizer(const FiniteTowerTable& table,
                                         std::uint64_t beta,
                                         bool generators_only) {
  const std::vector<bool>& h = table.H(beta);
  const std::vector<std::size_t> inner =
      generators_only ? SubgroupGenerators(table, beta) : Members(h);
  std::vector<std::size_t> normalizer;
  for (std::size_t x = 0; x < table.size(); ++x) {
    const bool normalizes = std::all_of(
        inner.begin(), inner.end(), [&](std::size_t k) {
          const Permutation c = Compose(
              Compose(table.perms[x], table.perms[k]), table.inverse_perms[x]);
          return static_cast<bool>(h[table.IndexOfPerm(c)]);
        });
    if (normalizes) normalizer.push_back(x);
  }
  return normalizer;
}

std::optional<std::vector<std::size_t>> FindIsomorphism(const CayleyTable& a,
                                                        const CayleyTable& b) {
  const std::size_t n = a.size();
  if (n != b.size() || n == 0) return std::nullopt;

  auto element_order = [](const CayleyTable& t, std::size_t x) {
    std::size_t order = 1;
    for (std::size_t y = x; y != 0; y = t[y][x]) ++order;
    return order;
  };
  // Greedy generating set of `a`.
  std::vector<std::size_t> gens;
  std::vector<bool> covered(n, false);
  covered[0] = true;
  auto close = [&] {
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      if (covered[i]) queue.push_back(i);
    }
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t s : gens) {
        const std::size_t y = a[x][s];
        if (!covered[y]) {
          covered[y] = true;
          queue.push_back(y);
        }
      }
    }
  };
  for (std::size_t x = 1; x < n; ++x) {
    if (!covered[x]) {
      gens.push_back(x);
      close();
    }
  }

  std::vector<std::size_t> images(gens.size());
  // Extends the generator images to a map by BFS and checks it.
  auto extend = [&]() -> std::optional<std::vector<std::size_t>> {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> phi(n, kUnset);
    phi[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t y = a[x][gens[i]];
        const std::size_t image = b[phi[x]][images[i]];
        if (phi[y] == kUnset) {
          phi[y] = image;
          queue.push_back(y);
        } else if (phi[y] != image) {
          return std::nullopt;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (phi[x] == kUnset || hit[phi[x]]) return std::nullopt;
      hit[phi[x]] = true;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (b[phi[x]][phi[y]] != phi[a[x][y]]) return std::nullopt;
      }
    }
    return phi;
  };
  auto search = [&](auto&& self, std::size_t depth)
      -> std::optional<std::vector<std::size_t>> {
    if (depth == gens.size()) return extend();
    const std::size_t want = element_order(a, gens[depth]);
    for (std::size_t c = 1; c < n; ++c) {
      if (element_order(b, c) != want) continue;
      images[depth] = c;
      if (auto phi = self(self, depth + 1)) return phi;
    }
    return std::nullopt;
  };
  if (n == 1) return std::vector<std::size_t>{0};
  return search(search, 0);
}

QuotientCheck QuotientTableIso(const FiniteTowerTable& table,
                               std::uint64_t beta) {
  const TowerConfig& cfg = table.cfg;
  const std::uint64_t alpha = *cfg.alpha().AsNatural();
  if (beta == 0 || beta >= alpha) {
    throw DomainError("quotient needs 1 <= beta < alpha");
  }
  const std::vector<bool>& upper = table.H(beta + 1);
  const std::vector<bool>& lower = table.H(beta);
  const std::vector<std::size_t> lower_members = Members(lower);

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> coset(table.size(), kNone);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (!upper[x] || coset[x] != kNone) continue;
    const std::size_t id = reps.size();
    reps.push_back(x);
    for (std::size_t h : lower_members) coset[table.Product(x, h)] = id;
  }

  QuotientCheck check;
  const GroupSpec& acting = cfg.ActingGroup(Ordinal::Natural(beta));
  const IndexedGroup g(acting);
  check.coset_count = reps.size();
  check.group_order = g.elements.size();
  if (reps.size() != g.elements.size()) {
    check.certificate = "order mismatch: " + std::to_string(reps.size()) +
                        " cosets vs |G| = " + std::to_string(g.elements.size());
    return check;
  }
  CayleyTable cosets(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      cosets[i][j] = coset[table.Product(reps[i], reps[j])];
      if (cosets[i][j] == kNone) {
        check.certificate = "coset product left H_" + std::to_string(beta + 1);
        return check;
      }
    }
  }
  const auto phi = FindIsomorphism(cosets, g.mul);
  if (!phi) {
    check.certificate = "no isomorphism onto " + acting.ToString();
    return check;
  }
  check.isomorphic = true;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    check.mapping.emplace_back(FormatElement(table.elements[reps[i]]),
                               g.elements[(*phi)[i]].ToString());
  }
  return check;
}

std::vector<std::string> NormalizerMismatches(
    const FiniteTowerTable& table, std::uint64_t beta,
    const std::vector<std::size_t>& normalizer, std::size_t limit) {
  std::vector<bool> brute(table.size(), false);
  for (std::size_t x : normalizer) brute[x] = true;
  const Ordinal b = Ordinal::Natural(beta);
  std::vector<std::string> out;
  for (std::size_t x = 0; x < table.size() && out.size() < limit; ++x) {
    const bool symbolic = IsNormalizing(table.cfg, b, table.elements[x]);
    if (symbolic != brute[x]) {
      out.push_back(FormatElement(table.elements[x]) +
                    (brute[x] ? " normalizes by brute force but not symbolically"
                              : " normalizes symbolically but not by brute force"));
    }
  }
  return out;
}

bool OracleReport::Passed() const {
  if (mul_failures != 0 || inv_failures != 0 || size != predicted_size) {
    return false;
  }
  return std::all_of(levels.begin(), levels.end(), [](const LevelReport& l) {
    return l.normalizer_match && l.witness_failures == 0 &&
           l.quotient.isomorphic && l.h_size == l.h_predicted;
  });
}

std::string OracleReport::ToJson(bool with_timings) const {
  nlohmann::ordered_json doc;
  doc["config"] = nlohmann::ordered_json::parse(config);
  doc["size"] = size;
  doc["predicted_size"] = predicted_size;
  doc["mul_inv_crosscheck"] = {{"pairs_checked", mul_pairs_checked},
                               {"mul_failures", mul_failures},
                               {"inv_failures", inv_failures}};
  doc["levels"] = nlohmann::ordered_json::array();
  for (const auto& l : levels) {
    nlohmann::ordered_json mapping = nlohmann::ordered_json::array();
    for (const auto& [rep, image] : l.quotient.mapping) {
      mapping.push_back({{"coset", rep}, {"image", image}});
    }
    doc["levels"].push_back({
        {"beta", l.beta},
        {"mode", l.mode},
        {"h_size", l.h_size},
        {"h_predicted", l.h_predicted},
        {"next_h_size", l.next_h_size},
        {"normalizer_match", l.normalizer_match},
        {"normalizer_size", l.normalizer_size},
        {"conjugation_checks", l.conjugation_checks},
        {"mismatch_examples", l.mismatch_examples},
        {"witnesses_checked", l.witnesses_checked},
        {"witness_failures", l.witness_failures},
        {"quotient",
         {{"isomorphic", l.quotient.isomorphic},
          {"cosets", l.quotient.coset_count},
          {"group_order", l.quotient.group_order},
          {"certificate", l.quotient.certificate},
          {"mapping", mapping}}},
    });
  }
  if (with_timings) doc["timings_ms"] = timings_ms;
  doc["passed"] = Passed();
  return doc.dump(2);
}

OracleReport RunOracleOnTable(const FiniteTowerTable& table,
                              const OracleOptions& options) {
  const TowerConfig& cfg = table.cfg;
  const std::uint64_t alpha = *cfg.alpha().AsNatural();
  OracleReport report;
  report.config = ConfigToJson(cfg);
  report.size = table.size();
  report.predicted_size = PredictedOrder(cfg).value_or(0);
  Rng rng(options.seed);

  // Symbolic Mul/Inv against permutation composition.
  auto start = std::chrono::steady_clock::now();
  auto check_pair = [&](std::size_t a, std::size_t b) {
    ++report.mul_pairs_checked;
    const TowerElement product = Mul(cfg, table.elements[a], table.elements[b]);
    auto it = table.index.find(product);
    if (it == table.index.end() || it->second != table.Product(a, b)) {
      ++report.mul_failures;
    }
  };
  if (table.size() <= 2000) {
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = 0; b < table.size(); ++b) check_pair(a, b);
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    for (int i = 0; i < 20'000; ++i) check_pair(pick(rng), pick(rng));
  }
  for (std::size_t a = 0; a < table.size(); ++a) {
    auto it = table.index.find(Inv(cfg, table.elements[a]));
    if (it == table.index.end() || it->second != table.InverseOf(a)) {
      ++report.inv_failures;
    }
  }
  report.timings_ms["mul_inv"] = MillisSince(start);

  for (std::uint64_t beta = 1; beta < alpha; ++beta) {
    start = std::chrono::steady_clock::now();
    const Ordinal b = Ordinal::Natural(beta);
    const std::vector<bool>& h = table.H(beta);
    const std::vector<bool>& next = table.H(beta + 1);
    LevelReport level;
    level.beta = beta;
    level.h_size = std::count(h.begin(), h.end(), true);
    level.next_h_size = std::count(next.begin(), next.end(), true);
    level.h_predicted = PredictedSubgroupOrder(cfg, beta).value_or(0);

    // MemberH against the closure bit vector, every element.
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (MemberH(cfg, b, table.elements[x]) != h[x] &&
          level.mismatch_examples.size() < 5) {
        level.mismatch_examples.push_back(
            "member_H(" + std::to_string(beta) + ") disagrees with closure at " +
            FormatElement(table.elements[x]));
      }
    }

    const bool sampled = !options.generators_only &&
                         (options.sampled || table.size() > options.exhaustive_limit);
    if (!sampled) {
      level.mode = options.generators_only ? "generators-only" : "exhaustive";
      const auto normalizer =
          BruteNormalizer(table, beta, options.generators_only);
      level.normalizer_size = normalizer.size();
      level.conjugation_checks =
          table.size() * (options.generators_only
                              ? SubgroupGenerators(table, beta).size()
                              : level.h_size);
      for (auto& m : NormalizerMismatches(table, beta, normalizer)) {
        level.mismatch_examples.push_back(std::move(m));
      }
    } else {
      level.mode = "sampled";
      const std::vector<std::size_t> members = Members(h);
      std::uniform_int_distribution<std::size_t> pick_x(0, table.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_h(0, members.size() - 1);
      for (std::uint64_t i = 0; i < options.samples; ++i) {
        const std::size_t x = pick_x(rng);
        const std::size_t k = members[pick_h(rng)];
        ++level.conjugation_checks;
        const std::size_t c = table.IndexOfPerm(Compose(
            Compose(table.perms[x], table.perms[k]), table.inverse_perms[x]));
        const TowerElement symbolic =
            Conjugate(cfg, table.elements[x], table.elements[k]);
        std::string problem;
        if (table.elements[c] != symbolic) {
          problem = "symbolic conjugate disagrees with permutation conjugate";
        } else if (IsNormalizing(cfg, b, table.elements[x]) && !h[c]) {
          problem = "normalizing element conjugates " +
                    FormatElement(table.elements[k]) + " out of H_" +
                    std::to_string(beta);
        }
        if (!problem.empty() && level.mismatch_examples.size() < 5) {
          level.mismatch_examples.push_back(FormatElement(table.elements[x]) +
                                            ": " + problem);
        }
      }
    }
    level.normalizer_match = level.mismatch_examples.empty();

    // Every non-normalizing element must yield a witness that both the
    // symbolic procedure and the closure bit vectors accept.
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (next[x]) continue;
      ++level.witnesses_checked;
      bool ok = false;
      try {
        const WitnessRecord w =
            WitnessNonNormalizing(cfg, b, table.elements[x]);
        const std::size_t li = table.IndexOf(w.l);
        const std::size_t ci = table.IndexOf(w.conjugate);
        const std::size_t direct = table.IndexOfPerm(Compose(
            Compose(table.perms[x], table.perms[li]), table.inverse_perms[x]));
        ok = w.Verified() && h[li] && !h[ci] && direct == ci;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) ++level.witness_failures;
    }

    level.quotient = QuotientTableIso(table, beta);
    report.timings_ms["beta_" + std::to_string(beta)] = MillisSince(start);
    report.levels.push_back(std::move(level));
  }
  return report;
}

OracleReport RunOracleSuite(const TowerConfig& cfg,
                            const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteTowerTable table = EnumerateTower(cfg, options.cap);
  const double enumerate_ms = MillisSince(start);
  OracleReport report = RunOracleOnTable(table, options);
  report.timings_ms["enumerate"] = enumerate_ms;
  return report;
}

}  // namespace normtower
