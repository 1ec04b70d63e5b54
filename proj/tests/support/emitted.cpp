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

#include "emitted.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace starplat::testing {

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  static std::atomic<int> counter{0};
  fs::path dir = fs::temp_directory_path() /
                 ("starplat_emit_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

bool have_compiler(const std::string& compiler, bool openmp) {
  const fs::path dir = scratch_dir();
  std::ofstream(dir / "probe.cc") << "#include <vector>\nint main() { std::vector<int> v(1); return v[0]; }\n";
  const std::string cmd = compiler + " -std=c++20 " + (openmp ? "-fopenmp " : "") + (dir / "probe.cc").string() +
                          " -o " + (dir / "probe").string() + " >/dev/null 2>&1";
  const bool ok = std::system(cmd.c_str()) == 0;
  fs::remove_all(dir);
  return ok;
}

EmittedRun compile_and_run(const EmittedUnit& unit, const std::string& compiler, bool openmp,
                           const std::string& graph_path, bool directed, const ArgMap& args) {
  const fs::path dir = scratch_dir();
  std::ofstream(dir / unit.file_name) << unit.source;
  std::ofstream(dir / "runtime.h") << unit.header;
  const fs::path exe = dir / "prog";
  const fs::path log = dir / "log.txt";
  const std::string build = compiler + " -std=c++20 -O2 " + (openmp ? "-fopenmp " : "") +
                            (dir / unit.file_name).string() + " -o " + exe.string() + " >" + log.string() + " 2>&1";
  EmittedRun r;
  if (std::system(build.c_str()) != 0) {
    r.output = slurp(log);
    fs::remove_all(dir);
    return r;
  }
  std::string run = exe.string() + " " + graph_path + (directed ? "" : " --undirected");
  for (const auto& [k, v] : args) run += " " + k + "=" + v;
  const fs::path out = dir / "out.tsv";
  run += " >" + out.string() + " 2>" + log.string();
  r.ok = std::system(run.c_str()) == 0;
  r.output = r.ok ? slurp(out) : slurp(log);
  fs::remove_all(dir);
  return r;
}

}  // namespace starplat::testing
