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

#ifndef NORMTOWER_ERROR_H_
#define NORMTOWER_ERROR_H_

#include <stdexcept>
#include <string>

namespace normtower {

/// Base class of every error raised by the library. The CLI reports
/// ParseError from command-line text as a usage error (exit 2) and every
/// other Error as exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ordinal, group, element or config text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A config violates one of the tower invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (ordinal out of range,
/// element not in the required subgroup, mismatched group, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace normtower

#endif  // NORMTOWER_ERROR_H_
