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

#include <benchmark/benchmark.h>

#include "starplat/bsp.hpp"
#include "starplat/codegen.hpp"
#include "starplat/corpus.hpp"
#include "starplat/parser.hpp"

namespace starplat {
namespace {

const CorpusEntry& entry(const char* name) { return *find_corpus_entry(name); }

CsrGraph graph(const CorpusEntry& e, const char* fixture) {
  return load_fixture(STARPLAT_CORPUS_DIR, *find_fixture(fixture), &e);
}

void BM_Parse(benchmark::State& state) {
  const std::string_view src = entry("bc").source();
  for (auto _ : state) benchmark::DoNotOptimize(parse_source(src));
}
BENCHMARK(BM_Parse);

void BM_Analyze(benchmark::State& state) {
  const std::string_view src = entry("bc").source();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_source(src));
}
BENCHMARK(BM_Analyze);

void BM_Interpret(benchmark::State& state, const char* name) {
  const CorpusEntry& e = entry(name);
  const CsrGraph g = graph(e, "rand200_a");
  const TypedProgram tp = analyze_source(e.source());
  const ArgMap args = e.default_args(g);
  for (auto _ : state) benchmark::DoNotOptimize(run(tp, g, args, e.run_options(g)));
}
BENCHMARK_CAPTURE(BM_Interpret, sssp, "sssp")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Interpret, pr, "pr")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Interpret, tc, "tc")->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
  const CorpusEntry& e = entry("sssp");
  const CsrGraph g = graph(e, "rand200_a");
  const TypedProgram tp = analyze_source(e.source());
  const ArgMap args = e.default_args(g);
  SimOptions o;
  o.nranks = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(tp, g, args, o));
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Emit(benchmark::State& state) {
  const TypedProgram tp = analyze_source(entry("bc").source());
  EmitOptions o;
  o.target = static_cast<Target>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emit(tp, o));
}
BENCHMARK(BM_Emit)->DenseRange(0, 3);

}  // namespace
}  // namespace starplat

BENCHMARK_MAIN();
