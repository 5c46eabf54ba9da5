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

#include "arcelim/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "arcelim/elim_graph.hpp"

namespace arcelim::bench {

CostReport Measurement::total() const {
  return {build.time_steps + traverse.time_steps, build.sync_steps + traverse.sync_steps,
          build.work + traverse.work, build.seq_steps + traverse.seq_steps};
}

Measurement measure(const Graph& g, TraversalKind kind, Vertex start, const MeasureOptions& options) {
  ParEngine engine(options.processors, options.backend);
  engine.set_write_validation(options.validate_writes);

  Measurement out;
  const auto t0 = std::chrono::steady_clock::now();
  ElimGraph eg = ElimGraph::build(g, engine);
  out.build = engine.report();
  out.result = traverse(kind, eg, start, options.a, engine, options.observer);
  const auto t1 = std::chrono::steady_clock::now();
  out.traverse = engine.report() - out.build;
  out.wall_nanos = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  return out;
}

std::vector<BenchRecord> run_bench(std::span<const BenchCase> cases, std::span<const std::size_t> procs,
                                   std::span<const TraversalKind> kinds, Backend mode, Vertex start) {
  std::vector<BenchRecord> records;
  for (const BenchCase& c : cases) {
    for (TraversalKind kind : kinds) {
      const Measurement baseline = measure(c.graph, kind, start, {});
      const double base_time = static_cast<double>(baseline.total().time_steps);
      for (std::size_t p : procs) {
        const Measurement run = measure(c.graph, kind, start, {.processors = p, .backend = mode});
        const CostReport total = run.total();
        BenchRecord r;
        r.family = c.family;
        r.n = c.graph.num_vertices();
        r.m = c.graph.num_arcs();
        r.p = p;
        r.mode = mode;
        r.kind = kind;
        r.time_steps = total.time_steps;
        r.sync_steps_build = run.build.sync_steps;
        r.sync_steps_traverse = run.traverse.sync_steps;
        r.work = total.work;
        r.seq_steps = total.seq_steps;
        if (mode == Backend::kThreaded) r.wall_nanos = run.wall_nanos;
        r.speedup_model = base_time / static_cast<double>(total.time_steps);
        records.push_back(std::move(r));
      }
    }
  }
  return records;
}

std::string csv_header() {
  return "family,n,m,p,mode,kind,time_steps,sync_steps_build,sync_steps_traverse,work,seq_steps,"
         "wall_nanos,speedup_model";
}

std::string to_csv_row(const BenchRecord& r) {
  char speedup[32];
  std::snprintf(speedup, sizeof speedup, "%.6f", r.speedup_model);
  std::ostringstream out;
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.p << ',' << to_string(r.mode) << ','
      << to_string(r.kind) << ',' << r.time_steps << ',' << r.sync_steps_build << ','
      << r.sync_steps_traverse << ',' << r.work << ',' << r.seq_steps << ',';
  if (r.wall_nanos) out << *r.wall_nanos;
  out << ',' << speedup;
  return out.str();
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

}  // namespace arcelim::bench
