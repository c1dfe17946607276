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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "normtower/tower.h"

namespace normtower {
namespace {

std::string Cfg(const char* name) {
  return std::string(NORMTOWER_CONFIG_DIR) + "/" + name;
}

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = RunCli(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliExitCodes, Matrix) {
  const std::string t3 = Cfg("t3.json");
  const std::string gap = WriteTemp("normtower_gap.json", R"j({"alpha": 4,
      "base": "Z", "assignment": [{"lo": 1, "hi": 2, "group": "C(2)"},
                                  {"lo": 3, "hi": 4, "group": "C(2)"}]})j");
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases = {
      {{"check-config", "--config", t3}, 0},
      {{"check-config", "--config", gap}, 1},
      {{"check-config", "--config", "/nonexistent.json"}, 1},
      {{"check-config"}, 2},
      {{}, 2},
      {{"frobnicate"}, 2},
      {{"member", "--config", t3, "--beta", "1", "--bogus", "b(1)"}, 2},
      {{"member", "--config", t3, "b(1)"}, 2},
      {{"member", "--config", t3, "--beta", "1"}, 2},
      {{"member", "--config", t3, "--beta", "w^", "b(1)"}, 2},
      {{"member", "--config", t3, "--beta", "1", "{d=1; g=7; f={}}"}, 2},
      {{"member", "--config", t3, "--beta", "1", "{d=1; g=1; f={}}"}, 0},
      {{"member", "--config", t3, "--beta", "w^w", "{d=1; g=1; f={}}"}, 1},
      {{"member", "--config", t3, "--beta", "1", "{d=5; g=1; f={}}"}, 1},
      {{"normalizes", "--config", t3, "--beta", "3", "b(1)"}, 1},
      {{"normalizes", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"}, 0},
      {{"witness", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"}, 0},
      {{"witness", "--config", t3, "--beta", "1", "{d=1; g=1; f={}}"}, 1},
      {{"quotient", "--config", t3, "--beta", "1", "{d=1; g=1; f={}}"}, 0},
      {{"quotient", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"}, 1},
      {{"eval", "--config", t3, "inv(b(2)) * b(2)"}, 0},
      {{"eval", "--config", t3, "inv(b(2)"}, 2},
      {{"oracle", "--config", Cfg("config_a.json")}, 0},
      {{"oracle", "--config", t3}, 1},
      {{"oracle", "--config", Cfg("config_c.json"), "--cap", "1000"}, 1},
      {{"fuzz", "--config", t3, "--iters", "0"}, 2},
      {{"fuzz", "--config", t3, "--iters", "50"}, 0},
      {{"fuzz", "--config", t3, "--iters", "50", "--inject-fault"}, 1},
      {{"fuzz", "--ordinals", "--iters", "50"}, 0},
      {{"report", "--config", t3}, 0},
      {{"--help"}, 0},
  };
  for (const auto& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    const Outcome o = Invoke(c.args);
    EXPECT_EQ(o.code, c.code) << joined << "\nstdout: " << o.out
                              << "\nstderr: " << o.err;
    if (c.code != 0) EXPECT_FALSE(o.err.empty() && o.out.empty()) << joined;
  }
}

TEST(CliOutput, MemberExplain) {
  const Outcome o = Invoke({"member", "--config", Cfg("t3.json"), "--beta", "1",
                         "--explain", "{d=1; g=1; f={}}"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "false\n  level 2: GPartNontrivial\n");
}

TEST(CliOutput, BetaExceedsAlpha) {
  const Outcome o = Invoke({"member", "--beta", "w^w", "--config", Cfg("t3.json"),
                         "{d=1; g=1; f={}}"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("beta exceeds alpha"), std::string::npos) << o.err;
  EXPECT_TRUE(o.out.empty());
}

TEST(CliOutput, ConfigErrorNamesTheInterval) {
  const std::string overlap = WriteTemp("normtower_overlap.json", R"j({"alpha": 4,
      "base": "Z", "assignment": [{"lo": 1, "hi": 3, "group": "C(2)"},
                                  {"lo": 2, "hi": 4, "group": "C(2)"}]})j");
  const Outcome o = Invoke({"check-config", "--config", overlap, "--json"});
  EXPECT_EQ(o.code, 1);
  const auto doc = nlohmann::json::parse(o.err);
  EXPECT_EQ(doc["error"], "config");
  EXPECT_NE(doc["message"].get<std::string>().find("[2, 4)"), std::string::npos);
}

TEST(CliOutput, JsonParsesAndLiteralsRoundTrip) {
  const std::string t3 = Cfg("t3.json");
  const TowerConfig cfg = LoadConfig(t3);
  const std::vector<std::vector<std::string>> commands = {
      {"check-config", "--config", t3},
      {"eval", "--config", t3, "{d=1; g=1; f={0: b(1)}} * {d=1; g=0; f={1: b(1)}}"},
      {"member", "--config", t3, "--beta", "1", "--explain", "{d=1; g=1; f={}}"},
      {"normalizes", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"},
      {"witness", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"},
      {"quotient", "--config", t3, "--beta", "1", "{d=1; g=1; f={}}"},
      {"report", "--config", t3},
      {"fuzz", "--config", t3, "--iters", "20"},
      {"oracle", "--config", Cfg("alpha2.json")},
  };
  for (auto args : commands) {
    args.push_back("--json");
    const Outcome o = Invoke(args);
    ASSERT_EQ(o.code, 0) << args[0] << ": " << o.err;
    nlohmann::json doc;
    ASSERT_NO_THROW(doc = nlohmann::json::parse(o.out)) << o.out;
    for (const char* field : {"value", "element", "x", "l", "conjugate"}) {
      if (!doc.contains(field)) continue;
      const std::string literal = doc[field];
      EXPECT_EQ(FormatElement(ParseElement(cfg, literal)), literal);
    }
  }
  const auto eval = nlohmann::json::parse(
      Invoke({"eval", "--json", "--config", t3,
           "{d=1; g=1; f={0: b(1)}} * {d=1; g=0; f={1: b(1)}}"})
          .out);
  EXPECT_EQ(eval["value"], "{d=1; g=1; f={0: b(2)}}");
  const auto witness = nlohmann::json::parse(
      Invoke({"witness", "--json", "--config", t3, "--beta", "1", "{d=2; g=1; f={}}"})
          .out);
  EXPECT_EQ(witness["l"], "{d=2; g=0; f={1: {d=1; g=1; f={}}}}");
  EXPECT_EQ(witness["conjugate"], "{d=1; g=1; f={}}");
  EXPECT_EQ(witness["verified"], true);
}

TEST(CliOutput, ReportRows) {
  auto rows = [](const char* name) {
    const Outcome o = Invoke({"report", "--json", "--config", Cfg(name)});
    EXPECT_EQ(o.code, 0) << o.err;
    const auto doc = nlohmann::json::parse(o.out);
    std::vector<std::string> betas;
    for (const auto& row : doc["rows"]) {
      EXPECT_TRUE(row["strict"].get<bool>());
      betas.push_back(row["beta"]);
    }
    EXPECT_EQ(doc["length"], doc["alpha"]);
    return betas;
  };
  EXPECT_EQ(rows("config_a.json"), (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(rows("alpha2.json"), (std::vector<std::string>{"1"}));
  EXPECT_EQ(rows("config_d.json"),
            (std::vector<std::string>{"1", "2", "3", "4", "w"}));
}

TEST(CliOutput, FuzzIsSeedReproducible) {
  const std::vector<std::string> args = {"fuzz", "--config", Cfg("config_d.json"),
                                         "--seed", "7", "--iters", "300"};
  const Outcome a = Invoke(args);
  const Outcome b = Invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Outcome fault = Invoke({"fuzz", "--config", Cfg("config_d.json"), "--iters",
                             "100", "--inject-fault"});
  EXPECT_EQ(fault.code, 1);
  // Dropping the translation still gives a group law (the direct product),
  // so the failures surface in inverse and conjugation checks.
  EXPECT_NE(fault.out.find("FAIL conjugation_identity"), std::string::npos)
      << fault.out;
  EXPECT_NE(fault.out.find("    x = {"), std::string::npos);
  EXPECT_NE(fault.out.find("(seed 42)"), std::string::npos);
}

TEST(CliOutput, OracleJsonIsByteIdentical) {
  const std::vector<std::string> args = {"oracle", "--json", "--config",
                                         Cfg("config_a.json")};
  EXPECT_EQ(Invoke(args).out, Invoke(args).out);
}

// The installed binary honours the same exit codes as a separate process.
TEST(CliBinary, ExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd =
        std::string(NORMTOWER_BINARY) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  const std::string t3 = Cfg("t3.json");
  EXPECT_EQ(status("member --config " + t3 + " --beta 1 '{d=1; g=1; f={}}'"), 0);
  EXPECT_EQ(status("member --beta 'w^w' --config " + t3 + " '{d=1; g=1; f={}}'"), 1);
  EXPECT_EQ(status("member --config " + t3), 2);
  EXPECT_EQ(status("oracle --config " + Cfg("config_a.json")), 0);
}

}  // namespace
}  // namespace normtower
