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

#include "normtower/ordinal.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <utility>

#include "normtower/error.h"

namespace normtower {

Ordinal::Ordinal(std::vector<Term> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::Natural(std::uint64_t n) {
  Ordinal result;
  if (n > 0) result.terms_.push_back(Term{Ordinal(), n});
  return result;
}

Ordinal Ordinal::OmegaPower(const Ordinal& exponent,
                            std::uint64_t coefficient) {
  Ordinal result;
  if (coefficient > 0) result.terms_.push_back(Term{exponent, coefficient});
  return result;
}

bool Ordinal::IsSuccessor() const {
  return !terms_.empty() && terms_.back().exponent.IsZero();
}

bool Ordinal::IsFinite() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().exponent.IsZero());
}

std::optional<std::uint64_t> Ordinal::AsNatural() const {
  if (!IsFinite()) return std::nullopt;
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

Ordinal Ordinal::Predecessor() const {
  if (!IsSuccessor()) {
    throw DomainError("ordinal " + ToString() + " has no predecessor");
  }
  Ordinal result = *this;
  if (--result.terms_.back().coefficient == 0) result.terms_.pop_back();
  return result;
}

Ordinal Ordinal::Successor() const { return Add(*this, Natural(1)); }

bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering Compare(const Ordinal& a, const Ordinal& b) {
  return a <=> b;
}

Classification Classify(const Ordinal& a) {
  if (a.IsZero()) return {OrdinalKind::kZero, std::nullopt};
  if (a.IsSuccessor()) return {OrdinalKind::kSuccessor, a.Predecessor()};
  return {OrdinalKind::kLimit, std::nullopt};
}

namespace {

std::string ExponentToString(const Ordinal& e) {
  const std::string s = e.ToString();
  if (e.IsFinite()) return s;
  if (e.terms().size() == 1 && e.terms().front().coefficient == 1) return s;
  return "(" + s + ")";
}

}  // namespace

std::string Ordinal::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent.IsZero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent != Natural(1)) out += "^" + ExponentToString(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

Ordinal Add(const Ordinal& a, const Ordinal& b) {
  if (b.IsZero()) return a;
  const Ordinal& lead = b.terms_.front().exponent;
  std::vector<Ordinal::Term> terms;
  std::uint64_t carry = 0;
  for (const auto& t : a.terms_) {
    const auto c = t.exponent <=> lead;
    if (c < 0) break;
    if (c == 0) {
      carry = t.coefficient;
      break;
    }
    terms.push_back(t);
  }
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  terms[terms.size() - b.terms_.size()].coefficient += carry;
  return Ordinal(std::move(terms));
}

Ordinal FundamentalSequence(const Ordinal& a, std::uint64_t n) {
  if (!a.IsLimit()) {
    throw DomainError("fundamental sequence requested for non-limit " +
                      a.ToString());
  }
  // a = prefix + w^e with e > 0.
  std::vector<Ordinal::Term> prefix = a.terms_;
  const Ordinal e = prefix.back().exponent;
  if (--prefix.back().coefficient == 0) prefix.pop_back();
  const Ordinal head(std::move(prefix));
  if (e.IsSuccessor()) {
    return Add(head, Ordinal::OmegaPower(e.Predecessor(), n));
  }
  return Add(head, Ordinal::OmegaPower(FundamentalSequence(e, n)));
}

std::vector<Ordinal> ProbeBelow(const Ordinal& bound, std::size_t max_count) {
  const Ordinal one = Ordinal::Natural(1);
  std::vector<Ordinal> found;
  auto add = [&](const Ordinal& b) {
    if (b < one || found.size() >= max_count ||
        std::find(found.begin(), found.end(), b) != found.end()) {
      return false;
    }
    found.push_back(b);
    return true;
  };
  std::function<void(const Ordinal&)> visit = [&](const Ordinal& b) {
    if (b <= one) return;
    if (b.IsSuccessor()) {
      const Ordinal p = b.Predecessor();
      if (add(p)) visit(p);
      return;
    }
    for (std::uint64_t n = 1; n <= 4; ++n) {
      const Ordinal c = FundamentalSequence(b, n);
      if (add(c)) visit(c);
    }
  };
  visit(bound);
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal ParseAll() {
    Ordinal result = ParseSum();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return result;
  }

 private:
  Ordinal ParseSum() {
    Ordinal result = ParseTerm();
    while (Consume('+')) result = Add(result, ParseTerm());
    return result;
  }

  Ordinal ParseTerm() {
    SkipSpace();
    if (Consume('w')) {
      Ordinal exponent = Ordinal::Natural(1);
      if (Consume('^')) exponent = ParseExponent();
      std::uint64_t coefficient = 1;
      if (Consume('*')) coefficient = ParseNatural();
      if (coefficient == 0) Fail("coefficient must be at least 1");
      return Ordinal::OmegaPower(exponent, coefficient);
    }
    return Ordinal::Natural(ParseNatural());
  }

  Ordinal ParseExponent() {
    SkipSpace();
    if (Consume('(')) {
      Ordinal e = ParseSum();
      if (!Consume(')')) Fail("expected ')'");
      return e;
    }
    if (Consume('w')) {
      Ordinal e = Ordinal::Natural(1);
      if (Consume('^')) e = ParseExponent();
      return Ordinal::OmegaPower(e);
    }
    return Ordinal::Natural(ParseNatural());
  }

  std::uint64_t ParseNatural() {
    SkipSpace();
    if (pos_ >= text_.size() || !std::isdigit(Peek())) Fail("expected number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(Peek())) {
      const std::uint64_t digit = text_[pos_++] - '0';
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        Fail("number too large");
      }
      value = value * 10 + digit;
    }
    return value;
  }

  bool Consume(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  unsigned char Peek() const { return text_[pos_]; }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(Peek())) ++pos_;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError("ordinal \"" + std::string(text_) + "\": " + what +
                     " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal ParseOrdinal(std::string_view text) {
  return OrdinalParser(text).ParseAll();
}

}  // namespace normtower
