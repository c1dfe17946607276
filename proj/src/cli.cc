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

#include "normtower/cli.h"

#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "normtower/error.h"
#include "normtower/fuzz.h"
#include "normtower/normtheory.h"
#include "normtower/oracle.h"
#include "normtower/report.h"

namespace normtower {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string config;
  bool json = false;
  bool explain = false;
  std::uint64_t seed = 42;
  std::uint64_t iters = 10'000;
  std::uint64_t cap = kDefaultElementCap;
  std::string beta;
  std::string element;
  bool sampled = false;
  bool generators_only = false;
  std::uint64_t samples = 10'000;
  bool timings = false;
  bool ordinals = false;
  bool inject_fault = false;
};

class Session {
 public:
  Session(const Flags& flags, std::ostream& out, std::ostream& err)
      : flags_(flags), out_(out), err_(err) {}

  int CheckConfig() {
    const TowerConfig cfg = Config();
    if (flags_.json) {
      Json doc;
      doc["valid"] = true;
      doc["config"] = Json::parse(ConfigToJson(cfg));
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << "ok: alpha = " << cfg.alpha().ToString()
           << ", base = " << cfg.base().ToString() << "\n";
    }
    return kExitOk;
  }

  int Eval() {
    const TowerConfig cfg = Config();
    const TowerElement x = EvaluateExpression(cfg, flags_.element);
    Emit({{"value", FormatElement(x)}, {"level", Level(x).ToString()}},
         FormatElement(x));
    return kExitOk;
  }

  int Member(bool normalizes) {
    const TowerConfig cfg = Config();
    const Ordinal beta = Beta();
    const TowerElement x = EvaluateExpression(cfg, flags_.element);
    // normalizes(beta) is membership in H_{beta+1}.
    const bool verdict =
        normalizes ? IsNormalizing(cfg, beta, x) : MemberH(cfg, beta, x);
    const Ordinal traced = normalizes ? beta.Successor() : beta;
    const MembershipTrace trace = MemberHTrace(cfg, traced, x);
    if (flags_.json) {
      Json doc;
      doc["beta"] = beta.ToString();
      doc["element"] = FormatElement(x);
      doc[normalizes ? "normalizes" : "member"] = verdict;
      if (flags_.explain) doc["trace"] = Json::parse(TraceToJson(trace));
      out_ << doc.dump(2) << "\n";
      return kExitOk;
    }
    out_ << (verdict ? "true" : "false") << "\n";
    if (flags_.explain) {
      for (const auto& step : trace.steps) {
        out_ << "  level " << step.level.ToString() << ": "
             << RuleName(step.rule) << "\n";
      }
    }
    return kExitOk;
  }

  int Witness() {
    const TowerConfig cfg = Config();
    const Ordinal beta = Beta();
    const TowerElement x = EvaluateExpression(cfg, flags_.element);
    const WitnessRecord w = WitnessNonNormalizing(cfg, beta, x);
    if (flags_.json) {
      Json doc;
      doc["beta"] = beta.ToString();
      doc["x"] = FormatElement(w.x);
      doc["l"] = FormatElement(w.l);
      doc["conjugate"] = FormatElement(w.conjugate);
      doc["x_outside_next"] = w.x_outside_next;
      doc["l_in_subgroup"] = w.l_in_subgroup;
      doc["conjugate_outside"] = w.conjugate_outside;
      doc["verified"] = w.Verified();
      out_ << doc.dump(2) << "\n";
    } else {
      out_ << "l = " << FormatElement(w.l) << "\n"
           << "conjugate = " << FormatElement(w.conjugate) << "\n"
           << "verified = " << (w.Verified() ? "true" : "false") << "\n";
    }
    return w.Verified() ? kExitOk : kExitDomain;
  }

  int QuotientCommand() {
    const TowerConfig cfg = Config();
    const Ordinal beta = Beta();
    const TowerElement x = EvaluateExpression(cfg, flags_.element);
    const BaseElement g = Quotient(cfg, beta, x);
    Emit({{"beta", beta.ToString()},
          {"group", cfg.ActingGroup(beta).ToString()},
          {"quotient", g.ToString()}},
         g.ToString());
    return kExitOk;
  }

  int Oracle() {
    const TowerConfig cfg = Config();
    OracleOptions options;
    options.cap = flags_.cap;
    options.sampled = flags_.sampled;
    options.generators_only = flags_.generators_only;
    options.samples = flags_.samples;
    options.seed = flags_.seed;
    const OracleReport report = RunOracleSuite(cfg, options);
    if (flags_.json) {
      out_ << report.ToJson(flags_.timings) << "\n";
    } else {
      out_ << "|K| = " << report.size << " (predicted "
           << report.predicted_size << ")\n"
           << "mul/inv cross-check: " << report.mul_pairs_checked
           << " pairs, " << report.mul_failures << " mul failures, "
           << report.inv_failures << " inv failures\n";
      for (const auto& level : report.levels) {
        out_ << "beta = " << level.beta << ": |H| = " << level.h_size
             << " (predicted " << level.h_predicted << "), " << level.mode
             << " normalizer check "
             << (level.normalizer_match ? "matches" : "MISMATCH");
        if (level.mode != "sampled") {
          out_ << " (|N| = " << level.normalizer_size << ")";
        }
        out_ << ", witnesses " << level.witnesses_checked << " checked / "
             << level.witness_failures << " failed, quotient "
             << (level.quotient.isomorphic ? "isomorphic" : "NOT isomorphic")
             << " to G (" << level.quotient.coset_count << " cosets)\n";
        for (const auto& example : level.mismatch_examples) {
          out_ << "  mismatch: " << example << "\n";
        }
      }
      out_ << (report.Passed() ? "PASS" : "FAIL") << "\n";
      for (const auto& [phase, ms] : report.timings_ms) {
        err_ << "timing " << phase << ": " << ms << " ms\n";
      }
    }
    return report.Passed() ? kExitOk : kExitDomain;
  }

  int Fuzz() {
    if (flags_.iters < 1) throw UsageError("--iters must be at least 1");
    FuzzSummary summary;
    if (flags_.ordinals) {
      summary = RunOrdinalFuzz(flags_.seed, flags_.iters);
    } else {
      FuzzOptions options;
      options.seed = flags_.seed;
      options.iterations = flags_.iters;
      options.inject_fault = flags_.inject_fault;
      summary = RunTowerFuzz(Config(), options);
    }
    out_ << (flags_.json ? summary.ToJson() + "\n" : summary.ToText());
    return summary.Passed() ? kExitOk : kExitDomain;
  }

  int Report() {
    const TowerReport report = BuildReport(Config());
    out_ << (flags_.json ? report.ToJson() + "\n" : report.ToText());
    return report.AllStrict() ? kExitOk : kExitDomain;
  }

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

 private:
  TowerConfig Config() {
    if (flags_.config.empty()) throw UsageError("--config is required");
    return LoadConfig(flags_.config);
  }

  Ordinal Beta() {
    if (flags_.beta.empty()) throw UsageError("--beta is required");
    try {
      return ParseOrdinal(flags_.beta);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--beta: ") + e.what());
    }
  }

  void Emit(const Json& doc, const std::string& text) {
    out_ << (flags_.json ? doc.dump(2) : text) << "\n";
  }

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
};

void Diagnose(std::ostream& err, bool json, const std::string& kind,
              const std::string& message) {
  if (json) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Flags flags;
  CLI::App app{"Transfinite wreath towers and their normalizer chains",
               "normtower"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", flags.config, "Tower config (JSON)");
  app.add_flag("--json", flags.json, "Structured output");
  app.add_flag("--explain", flags.explain, "Print the membership trace");
  app.add_option("--seed", flags.seed, "RNG seed");
  app.add_option("--iters", flags.iters, "Fuzz iterations");
  app.add_option("--cap", flags.cap, "Oracle element cap");

  auto with_beta = [&](CLI::App* cmd, bool element_required) {
    cmd->add_option("--beta", flags.beta, "Ordinal index")->required();
    auto* opt = cmd->add_option("element", flags.element, "Element expression");
    if (element_required) opt->required();
    return cmd;
  };
  auto* check = app.add_subcommand("check-config", "Validate a config");
  auto* eval = app.add_subcommand("eval", "Evaluate an element expression");
  eval->add_option("element", flags.element, "Element expression")->required();
  auto* member = with_beta(app.add_subcommand("member", "x in H_beta?"), true);
  auto* normalizes = with_beta(
      app.add_subcommand("normalizes", "x in N_K(H_beta)?"), true);
  auto* witness = with_beta(
      app.add_subcommand("witness", "Certificate that x does not normalize H_beta"),
      true);
  auto* quotient = with_beta(
      app.add_subcommand("quotient", "Image of x in G_beta = H_{beta+1}/H_beta"),
      true);
  auto* oracle = app.add_subcommand("oracle", "Brute-force checks on a finite tower");
  oracle->add_flag("--sampled", flags.sampled, "Sampled conjugation checks");
  oracle->add_flag("--generators-only", flags.generators_only,
                   "Conjugate only by generators of H_beta");
  oracle->add_option("--samples", flags.samples, "Samples per beta (sampled mode)");
  oracle->add_flag("--timings", flags.timings, "Include timings in --json output");
  auto* fuzz = app.add_subcommand("fuzz", "Randomized property suites");
  fuzz->add_flag("--ordinals", flags.ordinals, "Run the ordinal suite (no config)");
  fuzz->add_flag("--inject-fault", flags.inject_fault)->group("");
  auto* report = app.add_subcommand("report", "Strict-growth report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    Diagnose(err, flags.json, "usage", e.what());
    return kExitUsage;
  }

  Session session(flags, out, err);
  try {
    if (*check) return session.CheckConfig();
    if (*eval) return session.Eval();
    if (*member) return session.Member(false);
    if (*normalizes) return session.Member(true);
    if (*witness) return session.Witness();
    if (*quotient) return session.QuotientCommand();
    if (*oracle) return session.Oracle();
    if (*fuzz) return session.Fuzz();
    if (*report) return session.Report();
  } catch (const Session::UsageError& e) {
    Diagnose(err, flags.json, "usage", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    Diagnose(err, flags.json, "parse", e.what());
    return kExitUsage;
  } catch (const ConfigError& e) {
    Diagnose(err, flags.json, "config", e.what());
    return kExitDomain;
  } catch (const Error& e) {
    Diagnose(err, flags.json, "domain", e.what());
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace normtower
