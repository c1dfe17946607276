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

#include "normtower/basegroup.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "normtower/error.h"
#include "text_cursor.h"

namespace normtower {

using internal::TextCursor;

GroupSpec GroupSpec::Integers() { return GroupSpec(Kind::kIntegers, 0, {}); }

GroupSpec GroupSpec::Cyclic(int order) {
  if (order < 2) {
    throw ConfigError("C(" + std::to_string(order) + "): order must be >= 2");
  }
  return GroupSpec(Kind::kCyclic, order, {});
}

GroupSpec GroupSpec::Symmetric(int degree) {
  if (degree < 3 || degree > kMaxSymmetricDegree) {
    throw ConfigError("S(" + std::to_string(degree) +
                      "): degree must be in [3, " +
                      std::to_string(kMaxSymmetricDegree) + "]");
  }
  return GroupSpec(Kind::kSymmetric, degree, {});
}

GroupSpec GroupSpec::Product(std::vector<GroupSpec> factors) {
  if (factors.size() < 2) {
    throw ConfigError("P(...) needs at least two factors");
  }
  return GroupSpec(Kind::kProduct, 0, std::move(factors));
}

bool GroupSpec::IsFinite() const { return Order().has_value(); }

std::optional<std::uint64_t> GroupSpec::Order() const {
  switch (kind_) {
    case Kind::kIntegers:
      return std::nullopt;
    case Kind::kCyclic:
      return static_cast<std::uint64_t>(parameter_);
    case Kind::kSymmetric: {
      std::uint64_t n = 1;
      for (int i = 2; i <= parameter_; ++i) n *= i;
      return n;
    }
    case Kind::kProduct: {
      std::uint64_t n = 1;
      for (const auto& f : factors_) {
        const auto order = f.Order();
        if (!order) return std::nullopt;
        n *= *order;
      }
      return n;
    }
  }
  return std::nullopt;
}

std::string GroupSpec::ToString() const {
  switch (kind_) {
    case Kind::kIntegers:
      return "Z";
    case Kind::kCyclic:
      return "C(" + std::to_string(parameter_) + ")";
    case Kind::kSymmetric:
      return "S(" + std::to_string(parameter_) + ")";
    case Kind::kProduct: {
      std::string out = "P(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ", ";
        out += factors_[i].ToString();
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

GroupSpec ParseSpec(TextCursor& in) {
  if (in.Consume('Z')) return GroupSpec::Integers();
  if (in.Consume('C')) {
    in.Expect('(');
    const auto n = in.ReadNatural();
    in.Expect(')');
    if (n > 1'000'000'000) in.Fail("cyclic order too large");
    return GroupSpec::Cyclic(static_cast<int>(n));
  }
  if (in.Consume('S')) {
    in.Expect('(');
    const auto n = in.ReadNatural();
    in.Expect(')');
    if (n > 1000) in.Fail("symmetric degree too large");
    return GroupSpec::Symmetric(static_cast<int>(n));
  }
  if (in.Consume('P')) {
    in.Expect('(');
    std::vector<GroupSpec> factors;
    do {
      factors.push_back(ParseSpec(in));
    } while (in.Consume(','));
    in.Expect(')');
    return GroupSpec::Product(std::move(factors));
  }
  in.Fail("expected Z, C(n), S(n) or P(...)");
}

}  // namespace

GroupSpec ParseGroupSpec(std::string_view text) {
  std::size_t pos = 0;
  TextCursor in(text, pos, "group");
  GroupSpec spec = ParseSpec(in);
  if (!in.AtEnd()) in.Fail("trailing characters");
  return spec;
}

namespace {

std::string PermutationToString(const std::vector<std::uint8_t>& images) {
  std::string out;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start] || images[start] == start) continue;
    out += "(";
    for (std::size_t i = start; !seen[i]; i = images[i]) {
      seen[i] = true;
      if (i != start) out += " ";
      out += std::to_string(i);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Z is ordered 0, 1, -1, 2, -2, ...
std::strong_ordering CompareIntegers(std::int64_t a, std::int64_t b) {
  const auto ma = a < 0 ? -static_cast<std::uint64_t>(a)
                        : static_cast<std::uint64_t>(a);
  const auto mb = b < 0 ? -static_cast<std::uint64_t>(b)
                        : static_cast<std::uint64_t>(b);
  if (auto c = ma <=> mb; c != 0) return c;
  return (a < 0) <=> (b < 0);
}

[[noreturn]] void Mismatch(const GroupSpec& spec, const BaseElement& a) {
  throw DomainError("element " + a.ToString() + " does not belong to " +
                    spec.ToString());
}

void RequireConforms(const GroupSpec& spec, const BaseElement& a) {
  if (!Conforms(spec, a)) Mismatch(spec, a);
}

}  // namespace

std::string BaseElement::ToString() const {
  struct Visitor {
    std::string operator()(const Integer& v) const {
      return std::to_string(v.value);
    }
    std::string operator()(const Residue& v) const {
      return std::to_string(v.value);
    }
    std::string operator()(const Permutation& v) const {
      return PermutationToString(v.images);
    }
    std::string operator()(const Tuple& v) const {
      std::string out = "<";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].ToString();
      }
      return out + ">";
    }
  };
  return std::visit(Visitor{}, value_);
}

std::strong_ordering operator<=>(const BaseElement& a, const BaseElement& b) {
  if (auto c = a.value_.index() <=> b.value_.index(); c != 0) return c;
  struct Visitor {
    const BaseElement::Value& other;
    std::strong_ordering operator()(const BaseElement::Integer& v) const {
      return CompareIntegers(v.value,
                             std::get<BaseElement::Integer>(other).value);
    }
    std::strong_ordering operator()(const BaseElement::Residue& v) const {
      return v.value <=> std::get<BaseElement::Residue>(other).value;
    }
    std::strong_ordering operator()(const BaseElement::Permutation& v) const {
      return v.images <=> std::get<BaseElement::Permutation>(other).images;
    }
    std::strong_ordering operator()(const BaseElement::Tuple& v) const {
      return std::lexicographical_compare_three_way(
          v.begin(), v.end(), std::get<BaseElement::Tuple>(other).begin(),
          std::get<BaseElement::Tuple>(other).end());
    }
  };
  return std::visit(Visitor{b.value_}, a.value_);
}

bool Conforms(const GroupSpec& spec, const BaseElement& a) {
  const auto& v = a.value();
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      return std::holds_alternative<BaseElement::Integer>(v);
    case GroupSpec::Kind::kCyclic: {
      const auto* r = std::get_if<BaseElement::Residue>(&v);
      return r && r->value < static_cast<std::uint32_t>(spec.parameter());
    }
    case GroupSpec::Kind::kSymmetric: {
      const auto* p = std::get_if<BaseElement::Permutation>(&v);
      if (!p || p->images.size() != static_cast<std::size_t>(spec.parameter())) {
        return false;
      }
      std::vector<bool> hit(p->images.size(), false);
      for (auto i : p->images) {
        if (i >= hit.size() || hit[i]) return false;
        hit[i] = true;
      }
      return true;
    }
    case GroupSpec::Kind::kProduct: {
      const auto* t = std::get_if<BaseElement::Tuple>(&v);
      if (!t || t->size() != spec.factors().size()) return false;
      for (std::size_t i = 0; i < t->size(); ++i) {
        if (!Conforms(spec.factors()[i], (*t)[i])) return false;
      }
      return true;
    }
  }
  return false;
}

BaseElement Identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      return BaseElement::OfInteger(0);
    case GroupSpec::Kind::kCyclic:
      return BaseElement::OfResidue(0);
    case GroupSpec::Kind::kSymmetric: {
      std::vector<std::uint8_t> images(spec.parameter());
      std::iota(images.begin(), images.end(), 0);
      return BaseElement::OfPermutation(std::move(images));
    }
    case GroupSpec::Kind::kProduct: {
      BaseElement::Tuple parts;
      for (const auto& f : spec.factors()) parts.push_back(Identity(f));
      return BaseElement::OfTuple(std::move(parts));
    }
  }
  return {};
}

bool IsIdentity(const GroupSpec& spec, const BaseElement& a) {
  return a == Identity(spec);
}

BaseElement Multiply(const GroupSpec& spec, const BaseElement& a,
                     const BaseElement& b) {
  RequireConforms(spec, a);
  RequireConforms(spec, b);
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      return BaseElement::OfInteger(std::get<BaseElement::Integer>(a.value()).value +
                                    std::get<BaseElement::Integer>(b.value()).value);
    case GroupSpec::Kind::kCyclic: {
      const std::uint64_t n = spec.parameter();
      return BaseElement::OfResidue(static_cast<std::uint32_t>(
          (std::uint64_t{std::get<BaseElement::Residue>(a.value()).value} +
           std::get<BaseElement::Residue>(b.value()).value) %
          n));
    }
    case GroupSpec::Kind::kSymmetric: {
      const auto& pa = std::get<BaseElement::Permutation>(a.value()).images;
      const auto& pb = std::get<BaseElement::Permutation>(b.value()).images;
      std::vector<std::uint8_t> images(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) images[i] = pa[pb[i]];
      return BaseElement::OfPermutation(std::move(images));
    }
    case GroupSpec::Kind::kProduct: {
      const auto& ta = std::get<BaseElement::Tuple>(a.value());
      const auto& tb = std::get<BaseElement::Tuple>(b.value());
      BaseElement::Tuple parts;
      for (std::size_t i = 0; i < ta.size(); ++i) {
        parts.push_back(Multiply(spec.factors()[i], ta[i], tb[i]));
      }
      return BaseElement::OfTuple(std::move(parts));
    }
  }
  return {};
}

BaseElement Inverse(const GroupSpec& spec, const BaseElement& a) {
  RequireConforms(spec, a);
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      return BaseElement::OfInteger(-std::get<BaseElement::Integer>(a.value()).value);
    case GroupSpec::Kind::kCyclic: {
      const auto r = std::get<BaseElement::Residue>(a.value()).value;
      return BaseElement::OfResidue(
          r == 0 ? 0 : static_cast<std::uint32_t>(spec.parameter()) - r);
    }
    case GroupSpec::Kind::kSymmetric: {
      const auto& p = std::get<BaseElement::Permutation>(a.value()).images;
      std::vector<std::uint8_t> images(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) {
        images[p[i]] = static_cast<std::uint8_t>(i);
      }
      return BaseElement::OfPermutation(std::move(images));
    }
    case GroupSpec::Kind::kProduct: {
      const auto& t = std::get<BaseElement::Tuple>(a.value());
      BaseElement::Tuple parts;
      for (std::size_t i = 0; i < t.size(); ++i) {
        parts.push_back(Inverse(spec.factors()[i], t[i]));
      }
      return BaseElement::OfTuple(std::move(parts));
    }
  }
  return {};
}

std::vector<BaseElement> EnumerateGroup(const GroupSpec& spec) {
  if (!spec.IsFinite()) {
    throw DomainError("cannot enumerate infinite group " + spec.ToString());
  }
  std::vector<BaseElement> out;
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      break;
    case GroupSpec::Kind::kCyclic:
      for (int r = 0; r < spec.parameter(); ++r) {
        out.push_back(BaseElement::OfResidue(static_cast<std::uint32_t>(r)));
      }
      break;
    case GroupSpec::Kind::kSymmetric: {
      std::vector<std::uint8_t> images(spec.parameter());
      std::iota(images.begin(), images.end(), 0);
      do {
        out.push_back(BaseElement::OfPermutation(images));
      } while (std::next_permutation(images.begin(), images.end()));
      break;
    }
    case GroupSpec::Kind::kProduct: {
      std::vector<std::vector<BaseElement>> per_factor;
      for (const auto& f : spec.factors()) per_factor.push_back(EnumerateGroup(f));
      std::vector<std::size_t> digits(per_factor.size(), 0);
      // Odometer with the first factor most significant gives lex order.
      while (true) {
        BaseElement::Tuple parts;
        for (std::size_t i = 0; i < digits.size(); ++i) {
          parts.push_back(per_factor[i][digits[i]]);
        }
        out.push_back(BaseElement::OfTuple(std::move(parts)));
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == per_factor[i - 1].size()) {
          digits[--i] = 0;
        }
        if (i == 0) break;
      }
      break;
    }
  }
  return out;
}

BaseElement FirstNonIdentity(const GroupSpec& spec) {
  if (spec.kind() == GroupSpec::Kind::kIntegers) return BaseElement::OfInteger(1);
  if (spec.kind() == GroupSpec::Kind::kProduct) {
    // Lex order: identity in every factor but the last, whose first
    // non-identity element is the least candidate.
    BaseElement::Tuple parts;
    for (std::size_t i = 0; i + 1 < spec.factors().size(); ++i) {
      parts.push_back(Identity(spec.factors()[i]));
    }
    parts.push_back(FirstNonIdentity(spec.factors().back()));
    return BaseElement::OfTuple(std::move(parts));
  }
  return EnumerateGroup(spec).at(1);
}

BaseElement SampleElement(const GroupSpec& spec, Rng& rng,
                          std::uint64_t size_bound) {
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers: {
      const auto bound = static_cast<std::int64_t>(std::max<std::uint64_t>(size_bound, 1));
      std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
      return BaseElement::OfInteger(dist(rng));
    }
    case GroupSpec::Kind::kCyclic: {
      std::uniform_int_distribution<std::uint32_t> dist(
          0, static_cast<std::uint32_t>(spec.parameter() - 1));
      return BaseElement::OfResidue(dist(rng));
    }
    case GroupSpec::Kind::kSymmetric: {
      std::vector<std::uint8_t> images(spec.parameter());
      std::iota(images.begin(), images.end(), 0);
      // Fisher-Yates with the explicit engine; std::shuffle is not portable
      // across standard libraries.
      for (std::size_t i = images.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> dist(0, i - 1);
        std::swap(images[i - 1], images[dist(rng)]);
      }
      return BaseElement::OfPermutation(std::move(images));
    }
    case GroupSpec::Kind::kProduct: {
      BaseElement::Tuple parts;
      for (const auto& f : spec.factors()) {
        parts.push_back(SampleElement(f, rng, size_bound));
      }
      return BaseElement::OfTuple(std::move(parts));
    }
  }
  return {};
}

namespace {

BaseElement ParsePermutation(const GroupSpec& spec, TextCursor& in) {
  const auto degree = static_cast<std::size_t>(spec.parameter());
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  if (in.Consume('[')) {
    for (std::size_t i = 0; i < degree; ++i) {
      if (i) in.Expect(',');
      const auto v = in.ReadNatural();
      if (v >= degree) in.Fail("permutation image out of range");
      images[i] = static_cast<std::uint8_t>(v);
    }
    in.Expect(']');
  } else {
    if (in.Peek() != '(') in.Fail("expected permutation");
    // Product of cycles, applied right to left.
    std::vector<std::vector<std::uint8_t>> cycles;
    while (in.Consume('(')) {
      std::vector<std::uint8_t> cycle;
      while (!in.Consume(')')) {
        in.SkipSpace();
        const int point = in.ReadDigit();
        if (static_cast<std::size_t>(point) >= degree) {
          in.Fail("cycle point out of range");
        }
        if (std::find(cycle.begin(), cycle.end(), point) != cycle.end()) {
          in.Fail("repeated point in cycle");
        }
        cycle.push_back(static_cast<std::uint8_t>(point));
        in.Consume(',');
      }
      cycles.push_back(std::move(cycle));
    }
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<std::uint8_t> step(degree);
      std::iota(step.begin(), step.end(), 0);
      for (std::size_t i = 0; i < it->size(); ++i) {
        step[(*it)[i]] = (*it)[(i + 1) % it->size()];
      }
      for (auto& image : images) image = step[image];
    }
  }
  BaseElement result = BaseElement::OfPermutation(std::move(images));
  if (!Conforms(spec, result)) in.Fail("not a permutation");
  return result;
}

BaseElement ParseValue(const GroupSpec& spec, TextCursor& in) {
  switch (spec.kind()) {
    case GroupSpec::Kind::kIntegers:
      return BaseElement::OfInteger(in.ReadInteger());
    case GroupSpec::Kind::kCyclic: {
      const auto v = in.ReadNatural();
      if (v >= static_cast<std::uint64_t>(spec.parameter())) {
        in.Fail("residue out of range for " + spec.ToString());
      }
      return BaseElement::OfResidue(static_cast<std::uint32_t>(v));
    }
    case GroupSpec::Kind::kSymmetric:
      return ParsePermutation(spec, in);
    case GroupSpec::Kind::kProduct: {
      in.Expect('<');
      BaseElement::Tuple parts;
      for (std::size_t i = 0; i < spec.factors().size(); ++i) {
        if (i) in.Expect(',');
        parts.push_back(ParseValue(spec.factors()[i], in));
      }
      in.Expect('>');
      return BaseElement::OfTuple(std::move(parts));
    }
  }
  in.Fail("unsupported group");
}

}  // namespace

BaseElement ParseBaseElementAt(const GroupSpec& spec, std::string_view text,
                               std::size_t& pos) {
  TextCursor in(text, pos, "element");
  return ParseValue(spec, in);
}

BaseElement ParseBaseElement(const GroupSpec& spec, std::string_view text) {
  std::size_t pos = 0;
  BaseElement result = ParseBaseElementAt(spec, text, pos);
  TextCursor in(text, pos, "element");
  if (!in.AtEnd()) in.Fail("trailing characters");
  return result;
}

}  // namespace normtower
