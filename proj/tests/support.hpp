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

// Test-only helpers shared by the unit suites and the acceptance binary.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arcelim/elim_graph.hpp"
#include "arcelim/graph.hpp"
#include "arcelim/traversal.hpp"

namespace arcelim::testing {

/// Checks after every visit that no live arc targets a visited vertex, and
/// after every BFS level that no live arc joins two vertices of q_next.
/// Records the first violation instead of failing on the spot.
class InvariantObserver : public TraversalObserver {
 public:
  void on_visit(const ElimGraph& eg, Vertex v, Number, std::optional<std::uint32_t>) override {
    ++visits;
    visited.push_back(v);
    for (Vertex u = 0; u < eg.num_vertices(); ++u) {
      for (Vertex t : eg.live_targets(u)) {
        if (eg.visited(t)) fail("live arc " + std::to_string(u) + "->" + std::to_string(t) +
                                " into visited vertex after visiting " + std::to_string(v));
      }
    }
  }

  void on_level_complete(const ElimGraph& eg, const BfsLevelState& state) override {
    levels.push_back(state.q_next);
    std::vector<bool> in_next(eg.num_vertices(), false);
    for (Vertex v : state.q_next) in_next[v] = true;
    for (Vertex u : state.q_next) {
      for (Vertex t : eg.live_targets(u)) {
        if (in_next[t]) fail("live arc inside next level: " + std::to_string(u) + "->" + std::to_string(t));
      }
    }
  }

  bool ok() const { return !violation; }

  std::size_t visits = 0;
  std::vector<Vertex> visited;
  std::vector<std::vector<Vertex>> levels;
  std::optional<std::string> violation;

 private:
  void fail(const std::string& what) {
    if (!violation) violation = what;
  }
};

/// After a traversal with elimination counts enabled: every arc eliminated
/// at most once, and exactly once iff its target was visited.
inline std::optional<std::string> check_single_elimination(const ElimGraph& eg) {
  const auto counts = eg.elimination_counts();
  for (Vertex u = 0; u < eg.num_vertices(); ++u) {
    const auto out = eg.out(u);
    for (Slot i = 0; i < out.size(); ++i) {
      const std::uint32_t c = counts[eg.arc_index({u, i})];
      const std::uint32_t want = eg.visited(out[i]) ? 1 : 0;
      if (c != want) {
        return "arc " + std::to_string(u) + "->" + std::to_string(out[i]) + " eliminated " +
               std::to_string(c) + " times";
      }
    }
  }
  return std::nullopt;
}

/// Each ordered pair u != v is an arc with probability `prob`; adjacency
/// lists ascending.
inline Graph bernoulli_graph(std::size_t n, double prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(prob);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && coin(rng)) lists[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(lists);
}

/// Graph on n vertices (no self-loops) whose arcs are the set bits of
/// `mask` over the ordered pairs enumerated row-major; lists ascending.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::vector<Vertex>> lists(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (mask >> bit & 1) lists[u].push_back(static_cast<Vertex>(v));
      ++bit;
    }
  }
  return Graph::from_adjacency(lists);
}

/// All-pairs hop distances by Floyd-Warshall; nullopt when unreachable.
inline std::vector<std::vector<std::optional<std::uint32_t>>> hop_distances(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.out(static_cast<Vertex>(u))) {
      if (v != u) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  std::vector<std::vector<std::optional<std::uint32_t>>> out(n, std::vector<std::optional<std::uint32_t>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] < kInf) out[i][j] = d[i][j];
  return out;
}

/// Parent pointers form a tree rooted at s spanning exactly the visited
/// set, each parent numbered before its child.
inline std::optional<std::string> check_tree(const TraversalResult& r, Vertex s) {
  const std::size_t n = r.traversal.size();
  for (std::size_t v = 0; v < n; ++v) {
    const bool visited = r.traversal[v].has_value();
    const bool has_parent = r.parent[v].has_value();
    if (has_parent != (visited && v != s)) return "parent presence wrong at " + std::to_string(v);
    if (!has_parent) continue;
    const Vertex p = *r.parent[v];
    if (!r.traversal[p] || *r.traversal[p] >= *r.traversal[v]) {
      return "parent of " + std::to_string(v) + " not visited before it";
    }
  }
  return std::nullopt;
}

}  // namespace arcelim::testing
