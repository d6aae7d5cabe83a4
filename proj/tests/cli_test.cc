// Copyright 2026 The edgeqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "edgeqaoa/cli.h"

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace edgeqaoa {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "edgeqaoa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = EDGEQAOA_TEST_DATA_DIR;

TEST(Cli, OracleOnIdenticalGraphsIsOne) {
  const Outcome o = run_cli({"oracle", kData + "/overlap_first.graph", kData + "/overlap_first.graph"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("similarity 1\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("difference 0\n"), std::string::npos);
  EXPECT_NE(o.out.find("permutation 0 1 2 3\n"), std::string::npos);
}

TEST(Cli, OracleOnFixturePair) {
  const Outcome o = run_cli({"oracle", kData + "/overlap_first.graph", kData + "/overlap_second.graph"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("similarity 0.875\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("difference 2\n"), std::string::npos);
  EXPECT_NE(o.out.find("slots 16\n"), std::string::npos);
}

TEST(Cli, OracleMissingFileIsValidationError) {
  const Outcome o = run_cli({"oracle", kData + "/missing.graph", kData + "/overlap_first.graph"});
  EXPECT_EQ(o.code, kExitValidation);
  EXPECT_NE(o.err.find("missing.graph"), std::string::npos);
}

TEST(Cli, TailTableRows) {
  const Outcome o = run_cli({"tail"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream f(line);
    uint64_t v, fact, q, pow, tail;
    double ratio;
    f >> v >> fact >> q >> pow >> tail >> ratio;
    ASSERT_TRUE(f) << line;
    EXPECT_EQ(pow - fact, tail);
    EXPECT_EQ(pow, uint64_t{1} << q);
    if (v == 2) {
      EXPECT_EQ(q, 1u);
      EXPECT_EQ(tail, 0u);
    }
    if (v == 4) {
      EXPECT_EQ(fact, 24u);
      EXPECT_EQ(q, 5u);
      EXPECT_EQ(tail, 8u);
    }
    ++rows;
  }
  EXPECT_EQ(rows, 11);
  EXPECT_EQ(run_cli({"tail", "--min-v", "1"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"tail", "--min-v", "5", "--max-v", "4"}).code, kExitValidation);
}

TEST(Cli, PlanPrintsOneRowPerProcessorCount) {
  const Outcome o = run_cli({"plan", "--qubits", "4", "--processors", "1,3,4"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream in(o.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[2].substr(lines[2].size() - 2), " 6");
  EXPECT_EQ(run_cli({"plan", "--qubits", "2", "--processors", "8"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"plan", "--processors", "0"}).code, kExitValidation);
}

TEST(Cli, RunWritesCsvToStdout) {
  const Outcome o =
      run_cli({"run", "--graph-size", "3", "--trials", "2", "--p", "1", "--method", "random", "--seed", "5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.rfind("row,trial,", 0), 0u);
  EXPECT_NE(o.err.find("2 rows written, 0 with errors"), std::string::npos) << o.err;
  const Outcome again =
      run_cli({"run", "--graph-size", "3", "--trials", "2", "--p", "1", "--method", "random", "--seed", "5"});
  EXPECT_EQ(again.out, o.out);
}

TEST(Cli, BadInputsAreValidationErrors) {
  EXPECT_EQ(run_cli({}).code, kExitValidation);
  EXPECT_EQ(run_cli({"bogus"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--config", "missing.ini"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--threads", "many"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--method", "gradient"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--mode", "other"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--p", "0"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"run", "--graph-size", "1"}).code, kExitValidation);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, BinaryRunsAsSubprocess) {
  const std::string cmd = std::string(EDGEQAOA_CLI_PATH) + " oracle " + kData + "/overlap_first.graph " + kData +
                          "/overlap_second.graph";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  ASSERT_TRUE(pipe);
  std::string text;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe.get())) text += buf;
  EXPECT_EQ(text.rfind("similarity 0.875\n", 0), 0u) << text;
}

}  // namespace
}  // namespace edgeqaoa
