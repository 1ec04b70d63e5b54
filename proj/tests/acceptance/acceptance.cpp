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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ast_equal.hpp"
#include "cli.hpp"
#include "emitted.hpp"
#include "starplat/bsp.hpp"
#include "starplat/codegen.hpp"
#include "starplat/corpus.hpp"
#include "starplat/oracles.hpp"
#include "starplat/parser.hpp"

namespace starplat {
namespace {

const std::string kCorpus = STARPLAT_CORPUS_DIR;

/// Collects failures for one criterion; `detail` is printed after PASS.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

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

CsrGraph fixture_graph(const CorpusEntry& e, const std::string& name) {
  return load_fixture(kCorpus, *find_fixture(name), &e);
}

void ac1_round_trip(Check& c) {
  for (const auto& e : corpus()) {
    const ast::Program first = parse_source(e.source());
    const std::string printed = pretty_print(first);
    const ast::Program second = parse_source(printed);
    if (auto d = testing::ast_diff(first, second)) c.expect(false, e.name + ": " + *d);
    c.expect(pretty_print(second) == printed, e.name + ": printing is not idempotent");
  }
  c.detail = std::to_string(corpus().size()) + " programs";
}

void ac2_oracles(Check& c) {
  std::set<std::string> used;
  int runs = 0;
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    for (const auto& name : e.graphs) {
      const CsrGraph g = fixture_graph(e, name);
      const ArgMap args = e.default_args(g);
      const RunResult r = run(tp, g, args, e.run_options(g));
      if (auto d = check_oracle(e, g, args, r)) c.expect(false, e.name + " on " + name + ": " + *d);
      used.insert(name);
      ++runs;
    }
  }
  const CorpusEntry& pr = *find_corpus_entry("pr");
  for (const char* name : {"cycle3", "cycle4", "cycle10"}) {
    const CsrGraph g = fixture_graph(pr, name);
    const RunResult r = run(analyze_source(pr.source()), g, pr.default_args(g), pr.run_options(g));
    for (const auto& v : r.node_prop("pageRank")->values)
      c.expect(std::abs(v.d - 1.0 / g.n) <= 1e-9, std::string("pr on ") + name + " is not uniform");
  }
  c.expect(used.size() >= 10, "fewer than 10 fixtures");
  c.detail = std::to_string(runs) + " runs on " + std::to_string(used.size()) + " fixtures";
}

void ac3_simulator(Check& c) {
  std::mt19937_64 rng(31337);
  int runs = 0;
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    for (const auto& name : e.graphs) {
      const CsrGraph g = fixture_graph(e, name);
      const ArgMap args = e.default_args(g);
      const std::string want = to_tsv(run(tp, g, args, e.run_options(g)));
      for (int k : {1, 2, 3, 7}) {
        SimOptions o;
        o.nranks = k;
        o.run = e.run_options(g);
        const std::string got = to_tsv(simulate(tp, g, args, o).result);
        const std::string where = e.name + " on " + name + " with " + std::to_string(k) + " ranks";
        if (auto d = compare_tsv(want, got, e.tolerance)) c.expect(false, where + ": " + *d);
        o.rank_order.resize(k);
        for (int r = 0; r < k; ++r) o.rank_order[r] = k - 1 - r;
        c.expect(to_tsv(simulate(tp, g, args, o).result) == got, where + ": reversed rank order differs");
        std::shuffle(o.rank_order.begin(), o.rank_order.end(), rng);
        c.expect(to_tsv(simulate(tp, g, args, o).result) == got, where + ": shuffled rank order differs");
        runs += 3;
      }
    }
  }
  c.detail = std::to_string(runs) + " simulations";
}

void ac4_aggregation(Check& c) {
  const CsrGraph g = parse_edge_list("3 0 1\n3 1 2\n0 2 8\n1 2 3\n", true);
  SimOptions o;
  o.nranks = 2;
  const SimResult s = simulate(analyze_source(find_corpus_entry("sssp")->source()), g, {{"src", "3"}}, o);
  c.expect(s.trace.size() >= 2, "fewer than two supersteps");
  if (s.trace.size() >= 2) {
    const RankStats& r0 = s.trace[1].ranks.at(0);
    c.expect(r0.msgs_out == 1, "rank 0 sent " + std::to_string(r0.msgs_out) + " messages in superstep 1");
    c.expect(r0.raw_msgs_out == 2, "rank 0 produced " + std::to_string(r0.raw_msgs_out) + " raw messages");
  }
  c.expect(s.result.node_prop("dist")->values[2].i == 5, "dist[2] is not the minimum 5");
  c.detail = "1 aggregated message carrying dist 5";
}

void ac5_goldens(Check& c) {
  int files = 0;
  for (const auto& e : corpus()) {
    const TypedProgram tp = analyze_source(e.source());
    std::size_t remote_sites = 0;
    for (const auto& [id, r] : tp.regions) remote_sites += r.remote_write_sites.size();
    const std::string src(e.source());
    const std::size_t attaches = count(src, "attachNodeProperty") + count(src, "attachEdgeProperty");
    for (Target t : {Target::Seq, Target::Omp, Target::Mpi, Target::Cuda}) {
      EmitOptions opt;
      opt.target = t;
      opt.timing = false;
      opt.name = e.name;
      const EmittedUnit u = emit(tp, opt);
      c.expect(u.source == read_file(kCorpus + "/golden/" + u.file_name), u.file_name + " differs from golden");
      c.expect(emit(tp, opt).source == u.source, u.file_name + " is not deterministic");
      if (t == Target::Omp)
        c.expect(count(u.source, "#pragma omp parallel for") == tp.regions.size(), u.file_name + ": pragma count");
      if (t == Target::Cuda)
        c.expect(count(u.source, "__global__") == tp.regions.size() + attaches, u.file_name + ": kernel count");
      if (t == Target::Mpi)
        c.expect(count(u.source, "sp__rt::Outbox<") == remote_sites, u.file_name + ": outbox count");
      ++files;
    }
  }
  const std::string omp = emit_openmp(analyze_source(corpus_snippet("reduction"))).source;
  c.expect(omp.find("#pragma omp parallel for reduction(+:accum)") != std::string::npos, "reduction pragma missing");
  c.detail = std::to_string(files) + " goldens";
}

void ac6_compiled(Check& c) {
  if (!testing::have_compiler("g++", true)) {
    c.detail = "skipped: no host compiler with OpenMP";
    return;
  }
  const std::pair<const char*, const char*> cases[] = {
      {"sssp", "wdig6"}, {"sssp", "rand200_a"}, {"pr", "cycle4"}, {"pr", "rand200_b"}, {"tc", "k5"}, {"tc", "grid6"}};
  int builds = 0;
  for (const auto& [entry, fixture] : cases) {
    const CorpusEntry& e = *find_corpus_entry(entry);
    const Fixture& f = *find_fixture(fixture);
    const CsrGraph g = load_fixture(kCorpus, f, &e);
    const TypedProgram tp = analyze_source(e.source());
    const std::string want = to_tsv(run(tp, g, e.default_args(g), e.run_options(g)));
    for (Target t : {Target::Seq, Target::Omp}) {
      EmitOptions opt;
      opt.target = t;
      opt.timing = false;
      opt.name = e.name;
      const std::string where = std::string(entry) + "/" + std::string(to_string(t)) + " on " + fixture;
      const testing::EmittedRun r = testing::compile_and_run(emit(tp, opt), "g++", t == Target::Omp,
                                                             kCorpus + "/graphs/" + f.file,
                                                             f.directed && !e.undirected, e.default_args(g));
      if (!r.ok) {
        c.expect(false, where + ": " + r.output.substr(0, 200));
        continue;
      }
      if (auto d = compare_tsv(want, r.output, e.tolerance)) c.expect(false, where + ": " + *d);
      ++builds;
    }
  }
  c.detail = std::to_string(builds) + " compiled programs";
}

int run_cli(std::vector<std::string> args, std::string& err) {
  args.insert(args.begin(), "starplatc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream e;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, e);
  err = e.str();
  return code;
}

void ac7_errors(Check& c) {
  const char* const oscillating = R"(function Oscillate(Graph g) {
  int x = 0;
  bool done = False;
  fixedPoint until (done: x > 5) {
    x = 1 - x;
  }
})";
  const CsrGraph g = parse_edge_list("0 1\n1 2\n", true);
  try {
    run(analyze_source(oscillating), g, {});
    c.expect(false, "oscillating program terminated");
  } catch (const RuntimeError& e) {
    c.expect(std::string(e.what()).find("did not converge") != std::string::npos, "cap message");
    c.expect(e.pos().has_value(), "cap error has no position");
  }
  try {
    SimOptions o;
    o.nranks = 2;
    simulate(analyze_source(oscillating), g, {}, o);
    c.expect(false, "simulated oscillating program terminated");
  } catch (const RuntimeError&) {
  }

  const std::string dir = std::filesystem::temp_directory_path().string();
  const std::string bad_sp = dir + "/starplat_ac7_bad.sp";
  const std::string bad_graph = dir + "/starplat_ac7_bad.txt";
  std::ofstream(bad_sp) << "function f(Graph g) {\n  int x = 1 +;\n}\n";
  std::ofstream(bad_graph) << "0 1\n1 -2\n";
  std::string err;
  c.expect(run_cli({"check", bad_sp}, err) != 0 && err.find(bad_sp + ":2:") != std::string::npos,
           "malformed DSL: " + err);
  c.expect(run_cli({"run", kCorpus + "/sssp.sp", "-g", bad_graph, "-a", "src=0"}, err) != 0 &&
               err.find(bad_graph + ":2:") != std::string::npos,
           "malformed graph: " + err);
  std::filesystem::remove(bad_sp);
  std::filesystem::remove(bad_graph);
  c.detail = "cap, DSL and graph diagnostics";
}

}  // namespace
}  // namespace starplat

int main() {
  using starplat::Check;
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"AC1 round-trip", starplat::ac1_round_trip},   {"AC2 oracles", starplat::ac2_oracles},
      {"AC3 simulator", starplat::ac3_simulator},     {"AC4 aggregation", starplat::ac4_aggregation},
      {"AC5 goldens", starplat::ac5_goldens},         {"AC6 compiled", starplat::ac6_compiled},
      {"AC7 errors", starplat::ac7_errors}};
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    if (c.failures.empty()) {
      std::printf("PASS %s (%s)\n", name, c.detail.c_str());
    } else {
      ++failed;
      std::printf("FAIL %s: %s", name, c.failures.front().c_str());
      if (c.failures.size() > 1) std::printf(" (+%zu more)", c.failures.size() - 1);
      std::printf("\n");
    }
  }
  return failed == 0 ? 0 : 1;
}
