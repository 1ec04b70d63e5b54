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

#include <fstream>
#include <sstream>

#include "emitted.hpp"
#include "starplat/codegen.hpp"
#include "starplat/corpus.hpp"

namespace starplat {
namespace {

const Target kTargets[] = {Target::Seq, Target::Omp, Target::Mpi, Target::Cuda};

EmittedUnit emit_entry(const CorpusEntry& e, Target t) {
  EmitOptions o;
  o.target = t;
  o.timing = false;
  o.name = e.name;
  return emit(analyze_source(e.source()), o);
}

std::size_t count(const std::string& hay, std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Codegen, TargetNames) {
  EXPECT_EQ(parse_target("omp"), Target::Omp);
  EXPECT_EQ(parse_target("cuda"), Target::Cuda);
  EXPECT_EQ(parse_target("opencl"), std::nullopt);
  EXPECT_EQ(to_string(Target::Mpi), "mpi");
}

TEST(Codegen, MatchesGoldenFiles) {
  for (const auto& e : corpus()) {
    for (Target t : kTargets) {
      const EmittedUnit u = emit_entry(e, t);
      EXPECT_EQ(u.file_name, e.name + "_" + std::string(to_string(t)) + (t == Target::Cuda ? ".cu" : ".cc"));
      const std::string golden = read_file(std::string(STARPLAT_CORPUS_DIR) + "/golden/" + u.file_name);
      ASSERT_FALSE(golden.empty()) << u.file_name;
      EXPECT_EQ(u.source, golden) << u.file_name;
      EXPECT_EQ(u.header, runtime_header());
    }
  }
}

TEST(Codegen, OutputIsDeterministic) {
  for (const auto& e : corpus())
    for (Target t : kTargets) EXPECT_EQ(emit_entry(e, t).source, emit_entry(e, t).source);
}

TEST(Codegen, StructuralCounts) {
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    std::size_t remote_sites = 0;
    for (const auto& [id, r] : tp.regions) remote_sites += r.remote_write_sites.size();
    const std::size_t attaches = count(std::string(e.source()), "attachNodeProperty") +
                                 count(std::string(e.source()), "attachEdgeProperty");
    EXPECT_EQ(count(emit_entry(e, Target::Omp).source, "#pragma omp parallel for"), tp.regions.size()) << e.name;
    EXPECT_EQ(count(emit_entry(e, Target::Cuda).source, "__global__"), tp.regions.size() + attaches) << e.name;
    EXPECT_EQ(count(emit_entry(e, Target::Mpi).source, "sp__rt::Outbox<"), remote_sites) << e.name;
    EXPECT_EQ(count(emit_entry(e, Target::Seq).source, "#pragma"), 0u) << e.name;
  }
}

TEST(Codegen, ReductionPragma) {
  const TypedProgram tp = analyze_source(corpus_snippet("reduction"));
  const std::string omp = emit_openmp(tp).source;
  EXPECT_NE(omp.find("#pragma omp parallel for reduction(+:accum)"), std::string::npos);
  EXPECT_NE(emit_openmp(tp, Schedule::Static).source.find("schedule(static)"), std::string::npos);
  EXPECT_NE(emit_mpi(tp).source.find("sp__rt::allreduce("), std::string::npos);
}

TEST(Codegen, SsspCudaRoundTripsFinishedFlag) {
  const TypedProgram tp = analyze_source(find_corpus_entry("sssp")->source());
  const std::string cu = emit_cuda(tp, analyze_transfers(tp)).source;
  EXPECT_NE(cu.find("cudaMemcpy(d_finished, &finished"), std::string::npos);
  EXPECT_NE(cu.find("cudaMemcpy(&finished, d_finished"), std::string::npos);
  EXPECT_NE(cu.find("atomicMin("), std::string::npos);
}

TEST(Codegen, GeneratedNamesUseReservedPrefix) {
  const TypedProgram tp = analyze_source(find_corpus_entry("pr")->source());
  const std::string src = emit_sequential(tp).source;
  EXPECT_NE(src.find("sp__"), std::string::npos);
  EXPECT_NE(src.find("sp__rt::Output& sp__out"), std::string::npos);
  EXPECT_THROW(analyze_source("function f(Graph g) { int sp__x = 1; }"), Error);
}

struct CompiledCase {
  const char* entry;
  const char* fixture;
};

void check_compiled(Target t, bool openmp) {
  if (!testing::have_compiler("g++", openmp)) GTEST_SKIP() << "no host C++ compiler";
  const CompiledCase cases[] = {{"sssp", "wdig6"}, {"sssp", "rand200_a"}, {"pr", "cycle4"},
                                {"pr", "rand200_b"}, {"tc", "k5"},         {"tc", "grid6"}};
  for (const auto& c : cases) {
    const CorpusEntry& e = *find_corpus_entry(c.entry);
    const Fixture& f = *find_fixture(c.fixture);
    const CsrGraph g = load_fixture(STARPLAT_CORPUS_DIR, f, &e);
    const std::string want = to_tsv(run(analyze_source(e.source()), g, e.default_args(g), e.run_options(g)));
    const testing::EmittedRun r =
        testing::compile_and_run(emit_entry(e, t), "g++", openmp, std::string(STARPLAT_CORPUS_DIR) + "/graphs/" + f.file,
                                 f.directed && !e.undirected, e.default_args(g));
    ASSERT_TRUE(r.ok) << c.entry << " " << c.fixture << "\n" << r.output;
    EXPECT_EQ(compare_tsv(want, r.output, e.tolerance), std::nullopt) << c.entry << " " << c.fixture;
  }
}

TEST(CodegenCompiled, SequentialMatchesInterpreter) { check_compiled(Target::Seq, false); }
TEST(CodegenCompiled, OpenMpMatchesInterpreter) { check_compiled(Target::Omp, true); }

}  // namespace
}  // namespace starplat
