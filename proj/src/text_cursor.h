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

#ifndef NORMTOWER_SRC_TEXT_CURSOR_H_
#define NORMTOWER_SRC_TEXT_CURSOR_H_

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "normtower/error.h"

namespace normtower::internal {

// Whitespace-insensitive scanner shared by the literal parsers.
class TextCursor {
 public:
  TextCursor(std::string_view text, std::size_t& pos, std::string_view what)
      : text_(text), pos_(pos), what_(what) {}

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool Consume(char c) {
    if (Peek() != c || AtEnd()) return false;
    ++pos_;
    return true;
  }

  bool Consume(std::string_view token) {
    SkipSpace();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void Expect(char c) {
    if (!Consume(c)) Fail(std::string("expected '") + c + "'");
  }

  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("expected \"" + std::string(token) + "\"");
  }

  std::int64_t ReadInteger() {
    SkipSpace();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::uint64_t magnitude = ReadNatural();
    if (magnitude > static_cast<std::uint64_t>(
                        std::numeric_limits<std::int64_t>::max())) {
      Fail("integer out of range");
    }
    const auto v = static_cast<std::int64_t>(magnitude);
    return negative ? -v : v;
  }

  std::uint64_t ReadNatural() {
    SkipSpace();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Fail("expected number");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = text_[pos_++] - '0';
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        Fail("number too large");
      }
      value = value * 10 + digit;
    }
    return value;
  }

  // Reads one decimal digit without skipping whitespace first.
  int ReadDigit() {
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Fail("expected digit");
    }
    return text_[pos_++] - '0';
  }

  std::size_t& pos() { return pos_; }
  std::string_view text() const { return text_; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(std::string(what_) + " \"" + std::string(text_) +
                     "\": " + message + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t& pos_;
  std::string_view what_;
};

}  // namespace normtower::internal

#endif  // NORMTOWER_SRC_TEXT_CURSOR_H_
