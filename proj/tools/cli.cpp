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


#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "starplat/bsp.hpp"
#include "starplat/codegen.hpp"
#include "starplat/graph.hpp"
#include "starplat/interpreter.hpp"
#include "starplat/parser.hpp"
#include "starplat/sema.hpp"

namespace starplat::cli {

namespace {

// Usage problems found after CLI11 accepted the command line.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ArgMap parse_args(const std::vector<std::string>& items) {
  ArgMap args;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError{"--arg expects name=value, got '" + item + "'"};
    args[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return args;
}

std::optional<long long> iteration_cap(std::optional<long long> flag) {
  if (flag) {
    if (*flag < 1) throw UsageError{"--max-iters must be positive"};
    return flag;
  }
  const char* env = std::getenv("STARPLAT_MAX_ITERS");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError{"STARPLAT_MAX_ITERS must be a positive integer"};
  return v;
}

std::vector<int> parse_rank_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw UsageError{"--rank-order expects comma-separated integers"};
    order.push_back(static_cast<int>(v));
  }
  return order;
}

struct Options {
  std::string input;
  std::string graph;
  bool undirected = false;
  std::vector<std::string> args;
  std::string function;
  std::optional<long long> max_iters;
  // compile
  std::string backend;
  std::string output = ".";
  std::string schedule = "dynamic";
  bool no_timing = false;
  // simulate
  int nranks = 0;
  std::string rank_order;
  bool local_fixpoint = false;
  bool trace = false;
  // graph-tool
  std::string action;
  int lo = 1;
  int hi = 100;
  std::uint64_t seed = 1;
};

// Throws starplat::Error with the position of the offending file attached
// by the caller.
class Driver {
 public:
  Driver(Options o, std::ostream& out, std::ostream& err) : o_(std::move(o)), out_(out), err_(err) {}

  int compile() {
    const auto target = parse_target(o_.backend);
    if (!target) throw UsageError{"unknown backend '" + o_.backend + "' (expected seq, omp, mpi or cuda)"};
    if (o_.schedule != "dynamic" && o_.schedule != "static")
      throw UsageError{"--schedule expects dynamic or static"};
    TypedProgram tp = load_program();
    EmitOptions eo;
    eo.target = *target;
    eo.schedule = o_.schedule == "static" ? Schedule::Static : Schedule::Dynamic;
    eo.timing = !o_.no_timing;
    eo.name = std::filesystem::path(o_.input).stem().string();
    eo.function = o_.function;
    const EmittedUnit unit = dsl_step([&] { return emit(tp, eo); });
    std::filesystem::create_directories(o_.output);
    write(o_.output + "/" + unit.file_name, unit.source);
    write(o_.output + "/runtime.h", unit.header);
    out_ << o_.output << "/" << unit.file_name << "\n";
    return kOk;
  }

  int run() {
    TypedProgram tp = load_program();
    const CsrGraph g = load_graph();
    const ArgMap args = parse_args(o_.args);
    RunOptions ro;
    ro.function = o_.function;
    ro.max_iterations = iteration_cap(o_.max_iters);
    const RunResult r = dsl_step([&] { return starplat::run(tp, g, args, ro); });
    out_ << to_tsv(r);
    return kOk;
  }

  int simulate() {
    if (o_.nranks < 1) throw UsageError{"--nranks must be at least 1"};
    TypedProgram tp = load_program();
    const CsrGraph g = load_graph();
    SimOptions so;
    so.nranks = o_.nranks;
    if (!o_.rank_order.empty()) so.rank_order = parse_rank_order(o_.rank_order);
    so.local_fixpoint_per_superstep = o_.local_fixpoint;
    so.run.function = o_.function;
    so.run.max_iterations = iteration_cap(o_.max_iters);
    const ArgMap args = parse_args(o_.args);
    const SimResult r = dsl_step([&] { return starplat::simulate(tp, g, args, so); });
    out_ << to_tsv(r.result);
    if (o_.trace) out_ << "#trace\n" << trace_tsv(r.trace);
    return kOk;
  }

  int dump_ast() {
    const std::string source = read_file(o_.input);
    const ast::Program p = dsl_step([&] { return parse_source(source); });
    out_ << dump_sexpr(p);
    return kOk;
  }

  int check() {
    TypedProgram tp = load_program();
    for (const auto& w : tp.warnings) err_ << format_diagnostic(o_.input, w) << "\n";
    return kOk;
  }

  int graph_tool() {
    CsrGraph g = load_graph_file(o_.input);
    if (o_.action == "weights") {
      g = assign_random_weights(g, o_.lo, o_.hi, o_.seed);
      out_ << format_edge_list(g);
    } else if (o_.action == "info") {
      out_ << "vertices\t" << g.n << "\nedges\t" << g.m << "\ndirected\t" << (g.directed ? "True" : "False")
           << "\n";
      if (g.m > 0) out_ << "min_wt\t" << min_wt(g) << "\nmax_wt\t" << max_wt(g) << "\n";
    } else {
      throw UsageError{"unknown graph-tool action '" + o_.action + "' (expected weights or info)"};
    }
    return kOk;
  }

 private:
  // Errors from DSL processing carry positions in the input program.
  template <class F>
  auto dsl_step(F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (Error& e) {
      throw Located{o_.input, e.diagnostic()};
    }
  }

 public:
  struct Located {
    std::string file;
    Diagnostic diagnostic;
  };

 private:
  TypedProgram load_program() {
    const std::string source = read_file(o_.input);
    return dsl_step([&] { return analyze_source(source); });
  }

  CsrGraph load_graph() {
    if (o_.graph.empty()) throw UsageError{"--graph is required"};
    return load_graph_file(o_.graph);
  }

  CsrGraph load_graph_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
      return parse_edge_list(text, !o_.undirected);
    } catch (Error& e) {
      throw Located{path, e.diagnostic()};
    }
  }

  void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
  }

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"StarPlat graph DSL compiler", "starplatc"};
  app.require_subcommand(1);
  Options o;

  auto add_graph = [&](CLI::App* c) {
    c->add_option("--graph,-g", o.graph, "Edge list: one `u v [w]` per line");
    c->add_flag("--undirected", o.undirected, "Treat every edge as undirected");
    c->add_option("--arg,-a", o.args, "Program argument name=value (repeatable)");
    c->add_option("--function,-f", o.function, "Function to run (default: the first)");
    c->add_option("--max-iters", o.max_iters, "fixedPoint iteration cap (default 2n+16)");
  };

  auto* compile = app.add_subcommand("compile", "Emit code for a backend");
  compile->add_option("input", o.input, "DSL source")->required();
  compile->add_option("--backend,-b", o.backend, "seq, omp, mpi or cuda")->required();
  compile->add_option("--output,-o", o.output, "Output directory");
  compile->add_option("--schedule", o.schedule, "OpenMP schedule: dynamic or static");
  compile->add_option("--function,-f", o.function, "Function main() calls (default: the first)");
  compile->add_flag("--no-timing", o.no_timing, "Omit timing code");

  auto* run = app.add_subcommand("run", "Interpret a program and print results as TSV");
  run->add_option("input", o.input, "DSL source")->required();
  add_graph(run);

  auto* sim = app.add_subcommand("simulate", "Run a program on the BSP simulator");
  sim->add_option("input", o.input, "DSL source")->required();
  add_graph(sim);
  sim->add_option("--nranks,-n", o.nranks, "Number of simulated ranks")->required();
  sim->add_option("--rank-order", o.rank_order, "Comma-separated rank execution order");
  sim->add_flag("--local-fixpoint", o.local_fixpoint, "Iterate locally to a fixpoint before exchanging");
  sim->add_flag("--trace", o.trace, "Append the superstep trace");

  auto* dump = app.add_subcommand("dump-ast", "Print the syntax tree as an s-expression");
  dump->add_option("input", o.input, "DSL source")->required();

  auto* check = app.add_subcommand("check", "Parse and type-check only");
  check->add_option("input", o.input, "DSL source")->required();

  auto* tool = app.add_subcommand("graph-tool", "Inspect or reweight an edge list");
  tool->add_option("action", o.action, "weights or info")->required();
  tool->add_option("input", o.input, "Edge list")->required();
  tool->add_flag("--undirected", o.undirected, "Treat every edge as undirected");
  tool->add_option("--lo", o.lo, "Smallest weight");
  tool->add_option("--hi", o.hi, "Largest weight");
  tool->add_option("--seed", o.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "starplatc: " << e.what() << "\n";
    return kUsage;
  }

  Driver d(o, out, err);
  try {
    if (app.got_subcommand(compile)) return d.compile();
    if (app.got_subcommand(run)) return d.run();
    if (app.got_subcommand(sim)) return d.simulate();
    if (app.got_subcommand(dump)) return d.dump_ast();
    if (app.got_subcommand(check)) return d.check();
    return d.graph_tool();
  } catch (const UsageError& e) {
    err << "starplatc: " << e.message << "\n";
    return kUsage;
  } catch (const Driver::Located& e) {
    err << format_diagnostic(e.file, e.diagnostic) << "\n";
    return kDiagnostics;
  } catch (const Error& e) {
    err << "starplatc: " << e.kind() << ": " << e.what() << "\n";
    return kDiagnostics;
  } catch (const std::exception& e) {
    err << "starplatc: " << e.what() << "\n";
    return kDiagnostics;
  }
}

}  // namespace starplat::cli
