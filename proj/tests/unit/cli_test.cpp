// Copyright 2026 The StarPlat Compiler Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace starplat {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "starplatc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("starplat_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string corpus(const std::string& rel) { return std::string(STARPLAT_CORPUS_DIR) + "/" + rel; }

  fs::path dir_;
};

TEST_F(Cli, RunPrintsTsv) {
  const Outcome o = cli({"run", corpus("sssp.sp"), "-g", corpus("graphs/path3.txt"), "-a", "src=0"});
  EXPECT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_NE(o.out.find("#node dist\n0\t0\n1\t4\n2\t7\n"), std::string::npos);
}

TEST_F(Cli, SimulateAppendsTrace) {
  const Outcome o =
      cli({"simulate", corpus("sssp.sp"), "-g", corpus("graphs/path3.txt"), "-a", "src=0", "-n", "2", "--trace"});
  EXPECT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_NE(o.out.find("#trace\nsuperstep\trank\tlocal_updates\tmsgs_out\tfinished\n"), std::string::npos);
  const Outcome plain = cli({"run", corpus("sssp.sp"), "-g", corpus("graphs/path3.txt"), "-a", "src=0"});
  EXPECT_EQ(o.out.substr(0, plain.out.size()), plain.out);
}

TEST_F(Cli, CompileWritesSourceAndRuntime) {
  const Outcome o = cli({"compile", corpus("tc.sp"), "-b", "omp", "-o", dir_.string(), "--no-timing"});
  EXPECT_EQ(o.code, cli::kOk) << o.err;
  EXPECT_TRUE(fs::exists(dir_ / "tc_omp.cc"));
  EXPECT_TRUE(fs::exists(dir_ / "runtime.h"));
  EXPECT_NE(o.out.find("tc_omp.cc"), std::string::npos);
}

TEST_F(Cli, TypeErrorIsPositioned) {
  const std::string p = write("bad.sp", "function f(Graph g) {\n  int x = y;\n}\n");
  const Outcome o = cli({"check", p});
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find(p + ":2:11: error: TypeError:"), std::string::npos) << o.err;
}

TEST_F(Cli, ParseErrorIsPositioned) {
  const std::string p = write("bad.sp", "function f(Graph g) {\n  int x = ;\n}\n");
  const Outcome o = cli({"dump-ast", p});
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find(p + ":2:"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("ParseError"), std::string::npos) << o.err;
}

TEST_F(Cli, MalformedGraphIsPositioned) {
  const std::string g = write("bad.txt", "0 1\n1 x\n");
  const Outcome o = cli({"run", corpus("sssp.sp"), "-g", g, "-a", "src=0"});
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find(g + ":2:"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("FormatError"), std::string::npos) << o.err;
}

TEST_F(Cli, IterationCapFromFlagAndEnvironment) {
  const std::string p = write("osc.sp",
                              "function f(Graph g) {\n  int x = 0;\n  bool done = False;\n"
                              "  fixedPoint until (done: x > 5) {\n    x = 1 - x;\n  }\n}\n");
  const std::string g = corpus("graphs/path3.txt");
  Outcome o = cli({"run", p, "-g", g, "--max-iters", "7"});
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find("did not converge within 7 iterations"), std::string::npos) << o.err;
  ::setenv("STARPLAT_MAX_ITERS", "9", 1);
  o = cli({"run", p, "-g", g});
  ::unsetenv("STARPLAT_MAX_ITERS");
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find("within 9 iterations"), std::string::npos) << o.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, cli::kUsage);
  EXPECT_EQ(cli({"run", "--no-such-flag"}).code, cli::kUsage);
  EXPECT_EQ(cli({"compile", corpus("tc.sp"), "-b", "opencl"}).code, cli::kUsage);
  EXPECT_EQ(cli({"run", corpus("sssp.sp"), "-g", corpus("graphs/path3.txt"), "-a", "src"}).code, cli::kUsage);
  EXPECT_EQ(cli({"simulate", corpus("sssp.sp"), "-g", corpus("graphs/path3.txt"), "-a", "src=0"}).code, cli::kUsage);
}

TEST_F(Cli, MissingInputFile) {
  const Outcome o = cli({"check", (dir_ / "none.sp").string()});
  EXPECT_EQ(o.code, cli::kDiagnostics);
  EXPECT_NE(o.err.find("IoError"), std::string::npos);
}

TEST_F(Cli, GraphToolIsDeterministic) {
  const std::vector<std::string> cmd = {"graph-tool", "weights", corpus("graphs/grid6.txt"), "--lo", "1",
                                        "--hi",       "9",       "--seed",                     "7"};
  const Outcome a = cli(cmd);
  EXPECT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, cli(cmd).out);
  EXPECT_FALSE(a.out.empty());
  const Outcome info = cli({"graph-tool", "info", corpus("graphs/k4.txt"), "--undirected"});
  EXPECT_EQ(info.code, cli::kOk) << info.err;
}

}  // namespace
}  // namespace starplat
