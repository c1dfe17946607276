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

#include "normtower/report.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "normtower/normtheory.h"

namespace normtower {

namespace {

// Probe rows for finite alpha cover every beta; ProbeBelow caps at 64.
constexpr std::size_t kMaxProbes = 4096;

}  // namespace

bool TowerReport::AllStrict() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(),
                                      [](const ReportRow& r) { return r.Strict(); });
}

std::string TowerReport::LengthClaim() const {
  for (const auto& row : rows) {
    if (!row.Strict()) return "not established (beta = " + row.beta.ToString() + ")";
  }
  return rows.empty() ? "not established (no probes)" : alpha.ToString();
}

std::string TowerReport::ToText() const {
  std::ostringstream out;
  out << "alpha = " << alpha.ToString() << "\n";
  for (const auto& row : rows) {
    out << "beta = " << row.beta.ToString() << "  G = " << row.group
        << "  witness = " << row.witness << "  "
        << (row.Strict() ? "strict" : "NOT STRICT") << "\n";
  }
  out << "length = " << LengthClaim() << "\n";
  return out.str();
}

std::string TowerReport::ToJson() const {
  nlohmann::ordered_json doc;
  doc["alpha"] = alpha.ToString();
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    doc["rows"].push_back({{"beta", row.beta.ToString()},
                           {"group", row.group},
                           {"witness", row.witness},
                           {"in_next", row.in_next},
                           {"outside_beta", row.outside_beta},
                           {"quotient_ok", row.quotient_ok},
                           {"strict", row.Strict()}});
  }
  doc["length"] = LengthClaim();
  doc["all_strict"] = AllStrict();
  return doc.dump(2);
}

TowerReport BuildReport(const TowerConfig& cfg) {
  TowerReport report;
  report.alpha = cfg.alpha();
  for (const Ordinal& beta : ProbeBelow(cfg.alpha(), kMaxProbes)) {
    const GroupSpec& acting = cfg.ActingGroup(beta);
    const BaseElement g0 = FirstNonIdentity(acting);
    const TowerElement witness = QuotientSection(cfg, beta, g0);
    ReportRow row;
    row.beta = beta;
    row.group = acting.ToString();
    row.witness = FormatElement(witness);
    row.in_next = MemberH(cfg, beta.Successor(), witness);
    row.outside_beta = !MemberH(cfg, beta, witness);
    row.quotient_ok = row.in_next && Quotient(cfg, beta, witness) == g0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace normtower
