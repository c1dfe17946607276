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

#ifndef NORMTOWER_BASEGROUP_H_
#define NORMTOWER_BASEGROUP_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace normtower {

using Rng = std::mt19937_64;

/// Description of one of the supported countable groups: Z, C(n), S(n) or a
/// direct product of these. Literal syntax: `Z`, `C(n)`, `S(n)`,
/// `P(spec, spec, ...)`.
class GroupSpec {
 public:
  enum class Kind { kIntegers, kCyclic, kSymmetric, kProduct };

  static constexpr int kMaxSymmetricDegree = 6;

  static GroupSpec Integers();
  static GroupSpec Cyclic(int order);      // order >= 2
  static GroupSpec Symmetric(int degree);  // 3 <= degree <= 6
  static GroupSpec Product(std::vector<GroupSpec> factors);  // >= 2 factors

  Kind kind() const { return kind_; }
  /// Order for kCyclic, degree for kSymmetric, 0 otherwise.
  int parameter() const { return parameter_; }
  const std::vector<GroupSpec>& factors() const { return factors_; }

  bool IsFinite() const;
  /// Group order, or nullopt for infinite groups.
  std::optional<std::uint64_t> Order() const;

  std::string ToString() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Kind kind, int parameter, std::vector<GroupSpec> factors)
      : kind_(kind), parameter_(parameter), factors_(std::move(factors)) {}

  Kind kind_ = Kind::kIntegers;
  int parameter_ = 0;
  std::vector<GroupSpec> factors_;
};

GroupSpec ParseGroupSpec(std::string_view text);

/// An element of some GroupSpec. The alternative in use must match the
/// spec's kind: an integer for Z, a residue for C(n), a permutation for S(n),
/// a tuple for products.
class BaseElement {
 public:
  struct Integer {
    std::int64_t value = 0;
    friend bool operator==(const Integer&, const Integer&) = default;
  };
  struct Residue {
    std::uint32_t value = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  /// Dense image list: point i maps to images[i].
  struct Permutation {
    std::vector<std::uint8_t> images;
    friend bool operator==(const Permutation&, const Permutation&) = default;
  };
  using Tuple = std::vector<BaseElement>;
  using Value = std::variant<Integer, Residue, Permutation, Tuple>;

  BaseElement() : value_(Integer{}) {}
  explicit BaseElement(Value value) : value_(std::move(value)) {}

  static BaseElement OfInteger(std::int64_t v) { return BaseElement(Integer{v}); }
  static BaseElement OfResidue(std::uint32_t v) {
    return BaseElement(Residue{v});
  }
  static BaseElement OfPermutation(std::vector<std::uint8_t> images) {
    return BaseElement(Permutation{std::move(images)});
  }
  static BaseElement OfTuple(Tuple parts) { return BaseElement(std::move(parts)); }

  const Value& value() const { return value_; }

  /// Textual form, e.g. `-3`, `2`, `(0 1 2)`, `<1, (0 1)>`.
  std::string ToString() const;

  friend bool operator==(const BaseElement&, const BaseElement&) = default;
  /// Deterministic total order matching EnumerateGroup; integers are ordered
  /// by magnitude, then sign (0, 1, -1, 2, -2, ...).
  friend std::strong_ordering operator<=>(const BaseElement& a,
                                          const BaseElement& b);

 private:
  Value value_;
};

bool Conforms(const GroupSpec& spec, const BaseElement& a);

BaseElement Identity(const GroupSpec& spec);
bool IsIdentity(const GroupSpec& spec, const BaseElement& a);

/// Group law. Permutations compose right to left: (a*b)(i) = a(b(i)).
/// Throws DomainError on element/spec mismatch.
BaseElement Multiply(const GroupSpec& spec, const BaseElement& a,
                     const BaseElement& b);
BaseElement Inverse(const GroupSpec& spec, const BaseElement& a);

/// All elements of a finite group, identity first, in the order of
/// operator<=>. Throws DomainError for infinite specs.
std::vector<BaseElement> EnumerateGroup(const GroupSpec& spec);

/// The least non-identity element in enumeration order (1 for Z).
BaseElement FirstNonIdentity(const GroupSpec& spec);

/// Pseudo-random element; Z samples are in [-size_bound, size_bound].
BaseElement SampleElement(const GroupSpec& spec, Rng& rng,
                          std::uint64_t size_bound);

/// Parses one element literal of `spec`. Integers and residues are decimal;
/// permutations accept cycle notation `(0 1 2)(3 4)` (compact `(012)` too,
/// `()` is the identity) or an image list `[1,2,0]`; tuples are `<a, b>`.
BaseElement ParseBaseElement(const GroupSpec& spec, std::string_view text);

/// Cursor variant used by the element-literal parser: consumes one element
/// starting at `pos` and advances it.
BaseElement ParseBaseElementAt(const GroupSpec& spec, std::string_view text,
                               std::size_t& pos);

}  // namespace normtower

#endif  // NORMTOWER_BASEGROUP_H_
