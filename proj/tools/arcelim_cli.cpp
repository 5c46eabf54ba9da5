// Copyright 2026 The arcelim Authors
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

// arcelim: generate graphs, run arc-elimination DFS/BFS, check them against
// sequential references and tabulate the step model.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcelim/bench.hpp"
#include "arcelim/elim_graph.hpp"
#include "arcelim/generators.hpp"
#include "arcelim/graph.hpp"
#include "arcelim/oracle.hpp"
#include "arcelim/par_engine.hpp"
#include "arcelim/traversal.hpp"

namespace {

using namespace arcelim;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

const std::map<std::string, TraversalKind> kKindNames{{"dfs", TraversalKind::kDfs},
                                                      {"bfs", TraversalKind::kBfs}};
const std::map<std::string, Backend> kBackendNames{{"simulated", Backend::kSimulated},
                                                   {"threaded", Backend::kThreaded}};

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  return read_edge_list_file(path);
}

struct GenOptions {
  gen::FamilySpec spec{.family = "path"};
  std::string out = "-";
};

int cmd_gen(const GenOptions& o) {
  const Graph g = gen::generate(o.spec);
  if (o.out == "-") {
    write_edge_list(std::cout, g);
  } else {
    write_edge_list_file(o.out, g);
  }
  return kExitOk;
}

struct RunOptions {
  TraversalKind kind = TraversalKind::kDfs;
  std::string input;
  Vertex start = 0;
  Number a0 = 0;
  std::size_t procs = 1;
  Backend mode = Backend::kSimulated;
  bool trace = false;
  bool validate_writes = false;
};

int cmd_run(const RunOptions& o) {
  const Graph g = load_graph(o.input);
  TraceObserver tracer(std::cout);
  const bench::Measurement run =
      bench::measure(g, o.kind, o.start,
                     {.processors = o.procs,
                      .backend = o.mode,
                      .a = o.a0,
                      .observer = o.trace ? &tracer : nullptr,
                      .validate_writes = o.validate_writes});
  write_result(std::cout, run.result);
  std::cout << "visited=" << run.result.visited_count << '\n'
            << "next_number=" << run.result.next_number << '\n'
            << run.build.to_key_value("build.") << run.traverse.to_key_value("traverse.");
  return kExitOk;
}

struct VerifyOptions {
  std::string input;
  std::vector<std::string> kinds{"dfs", "bfs"};
  std::string starts = "all";
  std::size_t procs = 1;
  Backend mode = Backend::kSimulated;
  std::string result;  // optional stored result dump to check instead
  Number a0 = 0;
};

std::vector<Vertex> parse_starts(const std::string& text, std::size_t n) {
  std::vector<Vertex> starts;
  if (text == "all") {
    for (std::size_t v = 0; v < n; ++v) starts.push_back(static_cast<Vertex>(v));
    return starts;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) starts.push_back(static_cast<Vertex>(std::stoul(item)));
  return starts;
}

int report(const MatchReport& r, TraversalKind kind, Vertex s) {
  if (r.match) {
    std::cout << "PASS " << to_string(kind) << " start=" << s << '\n';
    return kExitOk;
  }
  std::cout << "FAIL " << to_string(kind) << " start=" << s;
  if (r.first_mismatch) std::cout << " first_mismatch=" << *r.first_mismatch;
  std::cout << ": " << r.detail << '\n';
  return kExitMismatch;
}

int cmd_verify(const VerifyOptions& o) {
  const Graph g = load_graph(o.input);
  const auto starts = parse_starts(o.starts, g.num_vertices());

  if (!o.result.empty()) {
    if (o.kinds.size() != 1 || starts.size() != 1) {
      throw CLI::ValidationError("--result needs exactly one --kinds and one --starts value");
    }
    std::ifstream in(o.result);
    if (!in) throw std::runtime_error("cannot open " + o.result);
    const TraversalResult stored = parse_result(in);
    const TraversalKind kind = kKindNames.at(o.kinds.front());
    const auto expected = oracle::seq_traverse(kind, g, starts.front(), o.a0);
    return report(compare_results(expected, stored), kind, starts.front());
  }

  int status = kExitOk;
  std::size_t checked = 0;
  for (const auto& name : o.kinds) {
    const TraversalKind kind = kKindNames.at(name);
    for (Vertex s : starts) {
      if (s >= g.num_vertices()) throw InvalidStart(s);
      if (report(verify_against_oracle(g, s, kind, o.procs, o.mode), kind, s) != kExitOk) {
        status = kExitMismatch;
      }
      ++checked;
    }
  }
  std::cout << (status == kExitOk ? "OK " : "MISMATCH ") << checked << " checks\n";
  return status;
}

struct BenchOptions {
  gen::FamilySpec spec{.family = "complete"};
  std::vector<std::size_t> sizes{64};
  std::size_t degree = 0;
  std::vector<std::size_t> procs{1, 2, 4, 8};
  std::vector<std::string> kinds{"dfs"};
  Backend mode = Backend::kSimulated;
  Vertex start = 0;
  std::string out = "-";
};

int cmd_bench(const BenchOptions& o) {
  std::vector<bench::BenchCase> cases;
  for (std::size_t size : o.sizes) {
    gen::FamilySpec spec = o.spec;
    if (spec.family == "layered") {
      spec.width = size;
    } else {
      spec.n = size;
      if (o.degree > 0) spec.m = o.degree * size;
    }
    cases.push_back({spec.family, gen::generate(spec)});
  }
  std::vector<TraversalKind> kinds;
  for (const auto& k : o.kinds) kinds.push_back(kKindNames.at(k));

  const auto records = bench::run_bench(cases, o.procs, kinds, o.mode, o.start);
  if (o.out == "-") {
    bench::write_csv(std::cout, records);
  } else {
    std::ofstream out(o.out);
    if (!out) throw std::runtime_error("cannot write " + o.out);
    bench::write_csv(out, records);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered parallel DFS/BFS by arc elimination"};
  app.require_subcommand(1);

  const std::size_t default_procs = processors_from_env(1);
  const std::vector<std::string> families{"path", "complete", "star", "gnm", "layered", "sample"};

  GenOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen_cmd->add_option("--family", gen_opts.spec.family)->check(CLI::IsMember(families))->required();
  gen_cmd->add_option("--n", gen_opts.spec.n, "Vertex count");
  gen_cmd->add_option("--m", gen_opts.spec.m, "Arc count (gnm)");
  gen_cmd->add_option("--width", gen_opts.spec.width, "Layer width (layered)");
  gen_cmd->add_option("--depth", gen_opts.spec.depth, "Layer count (layered)");
  gen_cmd->add_option("--seed", gen_opts.spec.seed);
  gen_cmd->add_option("--out", gen_opts.out, "Output file, '-' for stdout");

  std::string run_kind = "dfs";
  std::string run_mode = "simulated";
  std::string verify_mode = "simulated";
  std::string bench_mode = "simulated";

  RunOptions run_opts;
  run_opts.procs = default_procs;
  auto* run_cmd = app.add_subcommand("run", "Run one traversal and print the result and step counts");
  run_cmd->add_option("kind", run_kind, "dfs or bfs")->check(CLI::IsMember({"dfs", "bfs"}))->required();
  run_cmd->add_option("--input", run_opts.input, "Edge-list file, '-' for stdin")->required();
  run_cmd->add_option("--start", run_opts.start);
  run_cmd->add_option("--a0", run_opts.a0, "Number of the start vertex");
  run_cmd->add_option("--procs", run_opts.procs)->check(CLI::PositiveNumber);
  run_cmd->add_option("--mode", run_mode)->check(CLI::IsMember({"simulated", "threaded"}));
  run_cmd->add_flag("--trace", run_opts.trace, "Print one line per visit");
  run_cmd->add_flag("--validate-writes", run_opts.validate_writes,
                    "Check that par-block bodies write disjoint locations");

  VerifyOptions verify_opts;
  verify_opts.procs = default_procs;
  auto* verify_cmd = app.add_subcommand("verify", "Compare traversals against sequential references");
  verify_cmd->add_option("--input", verify_opts.input, "Edge-list file, '-' for stdin")->required();
  verify_cmd->add_option("--kinds", verify_opts.kinds)->delimiter(',')->check(CLI::IsMember({"dfs", "bfs"}));
  verify_cmd->add_option("--starts", verify_opts.starts, "'all' or a comma-separated list");
  verify_cmd->add_option("--procs", verify_opts.procs)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", verify_mode)->check(CLI::IsMember({"simulated", "threaded"}));
  verify_cmd->add_option("--result", verify_opts.result, "Check a stored 'run' result dump instead");
  verify_cmd->add_option("--a0", verify_opts.a0, "Start number used for --result");

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Tabulate step counts and model speedup as CSV");
  bench_cmd->add_option("--family", bench_opts.spec.family)->check(CLI::IsMember(families));
  bench_cmd->add_option("--sizes", bench_opts.sizes, "Vertex counts (layer widths for layered)")
      ->delimiter(',');
  bench_cmd->add_option("--m", bench_opts.spec.m, "Arc count (gnm)");
  bench_cmd->add_option("--degree", bench_opts.degree, "Average out-degree, m = degree * n (gnm)");
  bench_cmd->add_option("--depth", bench_opts.spec.depth, "Layer count (layered)");
  bench_cmd->add_option("--seed", bench_opts.spec.seed);
  bench_cmd->add_option("--procs", bench_opts.procs)->delimiter(',')->check(CLI::PositiveNumber);
  bench_cmd->add_option("--kinds", bench_opts.kinds)->delimiter(',')->check(CLI::IsMember({"dfs", "bfs"}));
  bench_cmd->add_option("--mode", bench_mode)->check(CLI::IsMember({"simulated", "threaded"}));
  bench_cmd->add_option("--start", bench_opts.start);
  bench_cmd->add_option("--out", bench_opts.out, "CSV file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  run_opts.kind = kKindNames.at(run_kind);
  run_opts.mode = kBackendNames.at(run_mode);
  verify_opts.mode = kBackendNames.at(verify_mode);
  bench_opts.mode = kBackendNames.at(bench_mode);

  try {
    if (*gen_cmd) return cmd_gen(gen_opts);
    if (*run_cmd) return cmd_run(run_opts);
    if (*verify_cmd) return cmd_verify(verify_opts);
    if (*bench_cmd) return cmd_bench(bench_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
