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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arcelim/elim_graph.hpp"
#include "arcelim/graph.hpp"
#include "arcelim/par_engine.hpp"

namespace arcelim {

enum class TraversalKind { kDfs, kBfs };

std::string_view to_string(TraversalKind kind);
std::optional<TraversalKind> parse_traversal_kind(std::string_view name);

/// Per-vertex outcome of a traversal. Absent values mean unvisited (or, for
/// parent, the start vertex; for distance, a DFS run).
struct TraversalResult {
  std::vector<std::optional<Number>> traversal;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::optional<std::uint32_t>> distance;
  std::size_t visited_count = 0;
  Number next_number = 0;

  friend bool operator==(const TraversalResult&, const TraversalResult&) = default;
};

class InvalidStart : public std::invalid_argument {
 public:
  explicit InvalidStart(std::uint64_t start);
};

/// Queues and counters of the level-synchronous BFS driver.
struct BfsLevelState {
  std::vector<Vertex> q;
  std::vector<Vertex> q_next;
  std::uint32_t level = 0;
  Number number = 0;
};

/// Hooks for instrumentation and tracing. Called on the driver thread
/// between par-blocks.
class TraversalObserver {
 public:
  virtual ~TraversalObserver() = default;

  /// After v's incoming arcs are gone and its number is assigned. `level`
  /// is the BFS distance, nullopt for DFS.
  virtual void on_visit(const ElimGraph& eg, Vertex v, Number number,
                        std::optional<std::uint32_t> level) {
    (void)eg, (void)v, (void)number, (void)level;
  }

  /// After a BFS level has been fully expanded; state.q_next holds the
  /// vertices discovered for the following level.
  virtual void on_level_complete(const ElimGraph& eg, const BfsLevelState& state) {
    (void)eg, (void)state;
  }
};

/// Writes "visit v number=k level=l" per visit ("level=-" for DFS).
class TraceObserver : public TraversalObserver {
 public:
  explicit TraceObserver(std::ostream& out) : out_(out) {}
  void on_visit(const ElimGraph& eg, Vertex v, Number number,
                std::optional<std::uint32_t> level) override;

 private:
  std::ostream& out_;
};

/// Ordered DFS by arc elimination. Reachable vertices get consecutive
/// numbers from `a` in the order of the textbook recursive DFS that scans
/// adjacency arrays left to right. One par-block per visited vertex.
///
/// `s` must not be visited yet; on a freshly built ElimGraph the returned
/// result describes exactly this run. On a reused one it also carries the
/// results of earlier runs (see dfs_forest).
TraversalResult dfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                    TraversalObserver* observer = nullptr);

/// Ordered, level-synchronous BFS by arc elimination. s gets `a`, the k-th
/// vertex discovered after it gets a + k. Same preconditions as dfs.
TraversalResult bfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                    TraversalObserver* observer = nullptr);

TraversalResult traverse(TraversalKind kind, ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                         TraversalObserver* observer = nullptr);

// Whole-graph sweeps: restart from every still unvisited vertex in id
// order, continuing the numbering. Arcs eliminated by earlier roots stay
// eliminated, which yields the usual DFS forest (resp. BFS forest with
// distances relative to each root).
TraversalResult dfs_forest(ElimGraph& eg, Number a, ParEngine& engine,
                           TraversalObserver* observer = nullptr);
TraversalResult bfs_forest(ElimGraph& eg, Number a, ParEngine& engine,
                           TraversalObserver* observer = nullptr);

/// Field-by-field comparison outcome.
struct MatchReport {
  bool match = true;
  std::optional<Vertex> first_mismatch;
  std::string detail;
};

/// Compares traversal, parent and distance vertex by vertex and reports the
/// lowest mismatching vertex id.
MatchReport compare_results(const TraversalResult& expected, const TraversalResult& actual);

/// Runs the arc-elimination traversal and the sequential oracle from s
/// with a = 0 and compares them.
MatchReport verify_against_oracle(const Graph& g, Vertex s, TraversalKind kind,
                                  std::size_t processors = 1,
                                  Backend backend = Backend::kSimulated);

// Result text format: one line "v traversal parent distance" per vertex,
// sorted by v, with "-" for absent values.
void write_result(std::ostream& out, const TraversalResult& r);
std::string serialize_result(const TraversalResult& r);

/// Inverse of write_result. visited_count and next_number are recomputed
/// from the traversal column (next_number = max + 1, or 0 if none visited).
TraversalResult parse_result(std::istream& in);

}  // namespace arcelim
