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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcelim/graph.hpp"
#include "arcelim/par_engine.hpp"
#include "arcelim/traversal.hpp"

namespace arcelim::bench {

/// One build + traversal with the build and traversal phases accounted
/// separately.
struct Measurement {
  TraversalResult result;
  CostReport build;
  CostReport traverse;
  std::uint64_t wall_nanos = 0;

  CostReport total() const;
};

struct MeasureOptions {
  std::size_t processors = 1;
  Backend backend = Backend::kSimulated;
  Number a = 0;
  TraversalObserver* observer = nullptr;
  bool validate_writes = false;
};

Measurement measure(const Graph& g, TraversalKind kind, Vertex start, const MeasureOptions& options);

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t p = 1;
  Backend mode = Backend::kSimulated;
  TraversalKind kind = TraversalKind::kDfs;
  std::uint64_t time_steps = 0;  // build + traversal
  std::uint64_t sync_steps_build = 0;
  std::uint64_t sync_steps_traverse = 0;
  std::uint64_t work = 0;
  std::uint64_t seq_steps = 0;
  std::optional<std::uint64_t> wall_nanos;  // threaded mode only
  double speedup_model = 1.0;               // time_steps(p=1) / time_steps(p)
};

struct BenchCase {
  std::string family;
  Graph graph;
};

/// One record per (case, kind, p), in that nesting order. speedup_model
/// always uses a simulated p = 1 run as the baseline.
std::vector<BenchRecord> run_bench(std::span<const BenchCase> cases, std::span<const std::size_t> procs,
                                   std::span<const TraversalKind> kinds, Backend mode, Vertex start = 0);

std::string csv_header();
std::string to_csv_row(const BenchRecord& record);
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace arcelim::bench
