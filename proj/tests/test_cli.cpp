// Copyright 2026 The hdec Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string& args) {
  std::string cmd = std::string(HDEC_CLI_PATH) + " " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string ex(const std::string& name) { return std::string(HDEC_EXAMPLES_DIR) + "/" + name; }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("losslessness " + ex("employees.hdec")).code, 0);
  CliResult lossy = cli("losslessness " + ex("employees_nocdc.hdec"));
  EXPECT_EQ(lossy.code, 1);
  EXPECT_NE(lossy.out.find("witness:"), std::string::npos);
  CliResult ns = cli("losslessness " + ex("nonsep.hdec"));
  EXPECT_EQ(ns.code, 2);
  EXPECT_NE(ns.out.find("X-UIND present; CDCs neither globally consistent nor disjoint"),
            std::string::npos);
  EXPECT_EQ(cli("global-consistency " + ex("nonsep.hdec")).code, 1);
  EXPECT_EQ(cli("consistency " + ex("employees.hdec")).code, 0);
  EXPECT_EQ(cli("consistency /nonexistent.hdec").code, 3);
  EXPECT_EQ(cli("frobnicate").code, 3);
  EXPECT_EQ(cli("--budget 50 consistency " + ex("pigeonhole.hdec")).code, 4);
  EXPECT_EQ(cli("consistency " + ex("pigeonhole.hdec")).code, 1);
}

TEST(Cli, TextReports) {
  CliResult r = cli("losslessness " + ex("employees.hdec"));
  EXPECT_EQ(r.out.rfind("LOSSLESS, theorem: FD-only(none)\n", 0), 0u);
  CliResult c = cli("closure " + ex("cdc_uind.hdec"));
  EXPECT_NE(c.out.find("cdc: top -> y1 >= 4"), std::string::npos);
  CliResult k = cli("classify " + ex("cdc_uind.hdec"));
  EXPECT_EQ(k.code, 0);
  EXPECT_NE(k.out.find("Y-UIND-dp"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
  CliResult a = cli("--json --parallel 1 witness " + ex("global.hdec"));
  CliResult b = cli("--json --parallel 4 witness " + ex("global.hdec"));
  EXPECT_EQ(a.code, 1);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["verdict"], "LOSSY");
  EXPECT_EQ(j["theorem_tag"], "X-UIND-gc");
  EXPECT_TRUE(j["witness"].contains("x"));
  EXPECT_TRUE(j["extended_instance_valid"].get<bool>());
  EXPECT_FALSE(j.contains("timing_ms"));
  auto t = nlohmann::json::parse(cli("--json --timing consistency " + ex("employees.hdec")).out);
  EXPECT_TRUE(t.contains("timing_ms"));
}

TEST(Cli, ReduceRoundTripsThroughStdin) {
  CliResult sat = cli("reduce sat " + ex("sat_small.cnf") + " | " + HDEC_CLI_PATH +
                " --oracle consistency -");
  EXPECT_EQ(sat.code, 0) << sat.out;
  CliResult unsat = cli("reduce unsat " + ex("unsat_small.cnf") + " | " + HDEC_CLI_PATH +
                  " --oracle losslessness -");
  EXPECT_EQ(unsat.code, 0) << unsat.out;
}

TEST(Cli, ParseErrorsPointAtTheLine) {
  CliResult r = cli("consistency - < " + ex("../tests/data/bad_coefficient.hdec"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

}  // namespace
