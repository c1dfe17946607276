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

#ifndef NORMTOWER_ORDINAL_H_
#define NORMTOWER_ORDINAL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normtower {

/// An ordinal below epsilon_0 in Cantor normal form,
///
///   w^e_1 * c_1 + w^e_2 * c_2 + ... + w^e_k * c_k,   e_1 > e_2 > ... > e_k,
///
/// with every c_i >= 1 and every exponent e_i itself in Cantor normal form.
/// The empty sum is zero. Natural numbers are the single term w^0 * n.
///
/// Values are immutable; every constructor produces the canonical form, so
/// structural equality coincides with ordinal equality.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero

  static Ordinal Natural(std::uint64_t n);
  static Ordinal Omega() { return OmegaPower(Natural(1)); }
  /// w^exponent * coefficient; coefficient 0 yields zero.
  static Ordinal OmegaPower(const Ordinal& exponent,
                            std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const { return terms_; }

  bool IsZero() const { return terms_.empty(); }
  bool IsSuccessor() const;
  bool IsLimit() const { return !IsZero() && !IsSuccessor(); }
  bool IsFinite() const;
  /// Value as a natural number, if finite.
  std::optional<std::uint64_t> AsNatural() const;

  /// Predecessor of a successor ordinal; throws DomainError otherwise.
  Ordinal Predecessor() const;
  Ordinal Successor() const;

  std::string ToString() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  friend Ordinal Add(const Ordinal& a, const Ordinal& b);
  friend Ordinal FundamentalSequence(const Ordinal& a, std::uint64_t n);

  explicit Ordinal(std::vector<Term> terms);

  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class OrdinalKind { kZero, kSuccessor, kLimit };

struct Classification {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set iff kind == kSuccessor
};

/// Parses `ord := term ("+" term)*; term := "w" ("^" exp)? ("*" nat)? | nat`
/// where an exponent is a natural, `w` (optionally with its own `^exp`), or a
/// parenthesized ordinal. Sums are evaluated with ordinal addition, so
/// non-canonical input such as "1 + w" is normalized rather than rejected.
Ordinal ParseOrdinal(std::string_view text);

std::strong_ordering Compare(const Ordinal& a, const Ordinal& b);
Classification Classify(const Ordinal& a);
Ordinal Add(const Ordinal& a, const Ordinal& b);

/// Wainer fundamental sequence of a limit ordinal:
///   (l + w^(e+1))[n] = l + w^e * n,   (l + w^m)[n] = l + w^(m[n]) for limit m.
/// Throws DomainError if `a` is not a limit.
Ordinal FundamentalSequence(const Ordinal& a, std::uint64_t n);

/// Finite probe set of ordinals in [1, bound), ascending: every ordinal when
/// bound is finite, otherwise predecessors and the terms a[1..4] of each
/// fundamental sequence met on the way down. At most max_count entries.
std::vector<Ordinal> ProbeBelow(const Ordinal& bound, std::size_t max_count = 64);

}  // namespace normtower

#endif  // NORMTOWER_ORDINAL_H_
