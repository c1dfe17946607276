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

#ifndef NORMTOWER_REPORT_H_
#define NORMTOWER_REPORT_H_

#include <string>
#include <vector>

#include "normtower/tower.h"

namespace normtower {

struct ReportRow {
  Ordinal beta;
  std::string group;    // G_beta
  std::string witness;  // QuotientSection(beta, first non-identity)
  bool in_next = false;      // witness in H_{beta+1}
  bool outside_beta = false; // witness not in H_beta
  bool quotient_ok = false;  // Quotient(beta, witness) recovers the generator

  bool Strict() const { return in_next && outside_beta && quotient_ok; }
};

/// Strict-growth rows over a finite probe set of beta < alpha (every beta
/// for finite alpha, a fundamental-sequence descent otherwise).
struct TowerReport {
  Ordinal alpha;
  std::vector<ReportRow> rows;

  bool AllStrict() const;
  /// "alpha" when every row is strict; names the first failing beta
  /// otherwise.
  std::string LengthClaim() const;
  std::string ToText() const;
  std::string ToJson() const;
};

TowerReport BuildReport(const TowerConfig& cfg);

}  // namespace normtower

#endif  // NORMTOWER_REPORT_H_
