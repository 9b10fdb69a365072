/*
 * Copyright 2026 The hlcd Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs a shell command line from the source tree.
Run sh(const std::string& cmd) {
  const std::string full = "cd " HLCD_SOURCE_DIR " && { " + cmd + "; } 2>/dev/null";
  FILE* p = popen(full.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), got);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kBin = HLCD_CLI_PATH;

TEST(Cli, Dist) {
  auto r = sh(kBin + " dist data/matrices/g_7_19.qmat");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "[19,7,9]\n");
}

TEST(Cli, SimplexPipesIntoWenum) {
  auto r = sh(kBin + " simplex 3 | " + kBin + " wenum");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 + 63 z^16\n");
}

TEST(Cli, ZeroCoordinateIsUsageError) {
  EXPECT_EQ(sh(kBin + " puncture --coords 0 data/matrices/g_7_19.qmat").status, 1);
  EXPECT_EQ(sh(kBin + " puncture data/matrices/g_7_19.qmat").status, 1);
  EXPECT_EQ(sh(kBin + " frobnicate").status, 1);
}

TEST(Cli, MissingFileNamesThePath) {
  auto r = sh(kBin + " dist no/such.qmat 2>&1 </dev/null");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("no/such.qmat"), std::string::npos);
}

TEST(Cli, TransformationChain) {
  auto r = sh(kBin + " puncture --coords 1 data/matrices/g_7_19.qmat | " + kBin + " eaqecc");
  EXPECT_EQ(r.out, "[[18,7,9;11]]\n");
  EXPECT_EQ(sh(kBin + " eaqecc data/matrices/g_7_19.qmat").out, "[[19,7,9;12]]\n");
  EXPECT_EQ(sh(kBin + " shorten --coords 2 data/matrices/g_8_25.qmat | " + kBin + " dist").out, "[24,7,12]\n");
  EXPECT_EQ(sh(kBin + " simplex 2 | " + kBin + " dual | " + kBin + " wenum").out, "1 + 30 z^3 + 15 z^4 + 18 z^5\n");
  EXPECT_EQ(sh(kBin + " simplex 2 | " + kBin + " extend | " + kBin + " dist").out, "[6,2,4]\n");
  EXPECT_EQ(sh(kBin + " lcd data/matrices/g_7_20.qmat").out, "true\n");
}

TEST(Cli, JsonOutput) {
  EXPECT_EQ(sh(kBin + " --format json dist data/matrices/g_7_19.qmat").out, "{\"n\":19,\"k\":7,\"d\":9}\n");
  EXPECT_EQ(sh(kBin + " dist --format json data/matrices/g_7_19.qmat").out, "{\"n\":19,\"k\":7,\"d\":9}\n");
}

TEST(Cli, LimitOverride) {
  EXPECT_EQ(sh(kBin + " dist --limit 3 data/matrices/g_7_19.qmat").status, 1);
}

TEST(Cli, VerifyIsDeterministicAndExitsZero) {
  auto a = sh(kBin + " verify --data data");
  auto b = sh(kBin + " verify --data data --threads 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("match=52 discrepancy=11 unverifiable=33"), std::string::npos);
  auto j = sh(kBin + " verify --format json");
  EXPECT_EQ(j.status, 0);
  EXPECT_EQ(j.out.rfind("{\n  \"summary\"", 0), 0u);
}

TEST(Cli, VerifyFlagsUnexplainedDiscrepancy) {
  // Same corpus without its ledger: the known discrepancies become regressions.
  auto r = sh("tmp=$(mktemp -d) && cp -r data/matrices data/recipes data/bounds $tmp/ && " + kBin +
              " verify --data $tmp; s=$?; rm -rf $tmp; exit $s");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(sh(kBin + " verify --data /nonexistent").status, 1);
}

}  // namespace
