// Copyright 2026 The sigmacheck Authors
//
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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_shell(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// Captures stdout; the duration line on stderr is dropped.
RunResult run_cli(const std::string& args) {
  return run_shell(std::string(SIGMACHECK_CLI_PATH) + " " + args +
                   " 2>/dev/null");
}

// Captures stderr only, for inspecting diagnostics.
RunResult run_cli_stderr(const std::string& args) {
  return run_shell(std::string(SIGMACHECK_CLI_PATH) + " " + args +
                   " 2>&1 >/dev/null");
}

}  // namespace

namespace sigmacheck {

TEST(ExitCodes, VerifiedInvocationsExitZero) {
  EXPECT_EQ(run_cli("verify charpoly --group 2x3").exit_code, 0);
  EXPECT_EQ(run_cli("verify commutation --group 2x2").exit_code, 0);
  EXPECT_EQ(run_cli("verify basis --group 3").exit_code, 0);
  EXPECT_EQ(run_cli("table deg5").exit_code, 0);
  EXPECT_EQ(run_cli("table deg6").exit_code, 0);
  EXPECT_EQ(run_cli("verify thm3 --group 2x3 --m 6 --i 6 --j 1").exit_code, 0);
  EXPECT_EQ(run_cli("verify thm1 --n1 1 --n2 4 --m1 1 --m2 2").exit_code, 0);
  EXPECT_EQ(run_cli("verify cyclic-remark").exit_code, 0);
}

TEST(ExitCodes, RefutationsExitOne) {
  const RunResult thm3a =
      run_cli("verify thm3a --group 2 --poly 'z1 + z2' --i 2 --j 2 "
              "--u 2 --d 1");
  EXPECT_EQ(thm3a.exit_code, 1);
  EXPECT_NE(thm3a.output.find("\"witness\": \"(1,-1)\""), std::string::npos);

  const RunResult search =
      run_cli("search counterexample --algebra 'symbol 3 z w' "
              "--predicate sigma-zero --i 2 --trials 20 --seed 5 "
              "--degree-bound 0");
  EXPECT_EQ(search.exit_code, 1);
  EXPECT_NE(search.output.find("\"witness\""), std::string::npos);
}

TEST(ExitCodes, UsageAndParseFailuresExitTwo) {
  EXPECT_EQ(run_cli("nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("verify charpoly").exit_code, 2);
  EXPECT_EQ(run_cli("--format yaml table deg5").exit_code, 2);
  EXPECT_EQ(run_cli("verify charpoly --group 2y3").exit_code, 2);
  EXPECT_EQ(run_cli("verify thm3a --group 2 --poly 'z1 * * z2' --i 2 --j 2 "
                    "--u 2 --d 1")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("verify high-powers --n 4").exit_code, 2);
  EXPECT_EQ(run_cli("search counterexample --algebra 'symbol 2 z w' "
                    "--predicate sigma-zero --trials 5 --seed 1 "
                    "--degree-bound 0")
                .exit_code,
            2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(ExitCodes, ParseDiagnosticsNamePositions) {
  const RunResult poly = run_cli_stderr(
      "verify thm3a --group 2 --poly 'z1 * * z2' --i 2 --j 2 --u 2 --d 1");
  EXPECT_NE(poly.output.find("parse error at position 5"), std::string::npos);

  const RunResult group = run_cli_stderr("verify charpoly --group 2y3");
  EXPECT_NE(group.output.find("parse error at position 1"),
            std::string::npos);
  EXPECT_NE(group.output.find("group literal '2y3'"), std::string::npos);
}

TEST(ExitCodes, NonVerifiedOutcomesExitThree) {
  const RunResult evidence =
      run_cli("search counterexample --algebra 'symbol 2 z w' "
              "--predicate trace0-norm1 --trials 50 --seed 11 "
              "--degree-bound 2");
  EXPECT_EQ(evidence.exit_code, 3);

  const RunResult gated =
      run_cli("verify thm3a --group 3 --poly 'z1 + z2' --i 2 --j 2 "
              "--u 2 --d 1");
  EXPECT_EQ(gated.exit_code, 3);
  EXPECT_NE(gated.output.find("\"hypotheses_not_met\""), std::string::npos);

  const RunResult capped =
      run_cli("verify thm3a --group 2 --poly 'z1 + z2 + z3 + z4' --i 10 "
              "--j 10 --u 4 --d 1");
  EXPECT_EQ(capped.exit_code, 3);
  EXPECT_NE(capped.output.find("\"not_checked\""), std::string::npos);
}

TEST(Reports, JsonIsCanonicalAndOmitsTiming) {
  const RunResult res = run_cli("verify charpoly --group 2x2");
  ASSERT_EQ(res.exit_code, 0);
  const nlohmann::json doc = nlohmann::json::parse(res.output);
  EXPECT_EQ(doc.at("claim_id"), "paired-charpoly");
  EXPECT_EQ(doc.at("status"), "verified");
  EXPECT_EQ(doc.at("params").at("group"), "2x2");
  EXPECT_FALSE(doc.contains("duration_ms"));
  ASSERT_TRUE(doc.at("steps").is_array());
  ASSERT_FALSE(doc.at("steps").empty());
  for (const auto& step : doc.at("steps")) {
    EXPECT_TRUE(step.contains("description"));
    EXPECT_FALSE(step.at("outputs").empty());
  }
  EXPECT_EQ(res.output, doc.dump(2) + "\n");
}

TEST(Reports, RefutedJsonCarriesWitnessStep) {
  const RunResult res = run_cli(
      "verify thm3a --group 2 --poly 'z1 + z2' --i 2 --j 2 --u 2 --d 1");
  ASSERT_EQ(res.exit_code, 1);
  const nlohmann::json doc = nlohmann::json::parse(res.output);
  EXPECT_EQ(doc.at("status"), "refuted");
  bool witness_seen = false;
  for (const auto& step : doc.at("steps"))
    if (step.at("outputs").contains("witness")) witness_seen = true;
  EXPECT_TRUE(witness_seen);
}

TEST(Reports, TextFormatHasOneAlignedLinePerStep) {
  const RunResult res = run_cli("--format text table deg5");
  ASSERT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.output.rfind("claim:", 0), 0u);
  std::istringstream lines(res.output);
  std::string line;
  unsigned steps = 0;
  while (std::getline(lines, line))
    if (line.rfind("step", 0) == 0) ++steps;
  EXPECT_EQ(steps, 10u);
  EXPECT_NE(res.output.find("form_2=a^2 + 6*a*b + 3*b^2"), std::string::npos);
}

TEST(Reports, SeededRunsAreByteIdentical) {
  const std::string args =
      "search counterexample --algebra 'symbol 2 z w' "
      "--predicate trace0-norm1 --trials 100 --seed 9 --degree-bound 2";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  EXPECT_EQ(first.exit_code, 3);
  EXPECT_EQ(second.exit_code, 3);
  EXPECT_EQ(first.output, second.output);
  const nlohmann::json doc = nlohmann::json::parse(first.output);
  EXPECT_EQ(doc.at("seed"), 9);
}

TEST(Reports, OutFlagWritesTheReportFile) {
  const std::string path = ::testing::TempDir() + "sigmacheck_report.json";
  const RunResult res =
      run_cli("--out " + path + " verify thm1 --n1 2 --n2 4 --m1 1 --m2 2");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_TRUE(res.output.empty());
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  const nlohmann::json doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.at("claim_id"), "two-block-fixed-points");
  std::remove(path.c_str());
}

TEST(Reports, DurationGoesToStderrOnly) {
  const RunResult err = run_cli_stderr("verify characters --n1 2 --n2 2");
  EXPECT_EQ(err.exit_code, 0);
  EXPECT_NE(err.output.find("duration_ms:"), std::string::npos);
}

}  // namespace sigmacheck
