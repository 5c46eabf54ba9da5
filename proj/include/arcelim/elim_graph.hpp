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
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arcelim/graph.hpp"
#include "arcelim/par_engine.hpp"

namespace arcelim {

/// prev[] value of the first live slot.
inline constexpr Slot kNil = std::numeric_limits<Slot>::max();

class AlreadyEliminated : public std::logic_error {
 public:
  explicit AlreadyEliminated(ArcRef arc);

  ArcRef arc() const { return arc_; }

 private:
  ArcRef arc_;
};

/// Mutable search structure over a Graph.
///
/// Every adjacency array carries a doubly linked list of its live slots
/// (next/prev indices, `first` for the head, `outdeg` as end sentinel) and
/// every vertex knows its incoming arcs as (source, slot) pairs. Eliminating
/// an arc unlinks its slot in O(1); the adjacency array is never modified.
///
/// All per-slot arrays are stored flat, indexed by offset(u) + slot, with
/// slot values local to their list.
///
/// Mutation happens only inside par-blocks of a single driver. Within one
/// eliminate_incoming block every arc comes from a distinct source and one
/// slot per source list is removed, so the block's writes are disjoint.
class ElimGraph {
 public:
  /// One par-block over all vertices initializing indeg and
  /// first, then, for each u in ascending order, one par-block over u's
  /// slots appending (u, i) to the target's in-table and linking slot i.
  /// Costs n + 1 synchronizations. In-tables come out ordered by source id.
  static ElimGraph build(const Graph& g, ParEngine& engine);

  std::size_t num_vertices() const { return first_.size(); }
  std::size_t num_arcs() const { return targets_.size(); }

  std::size_t outdegree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  std::size_t indegree(Vertex v) const { return indeg_[v]; }

  std::span<const Vertex> out(Vertex u) const {
    return {targets_.data() + offsets_[u], outdegree(u)};
  }
  std::span<const ArcRef> in(Vertex v) const {
    return {in_arcs_.data() + in_offsets_[v], indeg_[v]};
  }

  Slot first(Vertex u) const { return first_[u]; }
  Slot next(Vertex u, Slot i) const { return next_[offsets_[u] + i]; }
  Slot prev(Vertex u, Slot i) const { return prev_[offsets_[u] + i]; }

  bool is_live(ArcRef a) const;
  bool exhausted(Vertex u) const { return first_[u] == outdegree(u); }

  /// Target of u's first live arc, or nullopt once u's list is exhausted.
  std::optional<Vertex> first_live_target(Vertex u) const {
    const Slot f = first_[u];
    if (f == outdegree(u)) return std::nullopt;
    return targets_[offsets_[u] + f];
  }

  /// Live targets of u in list order.
  std::vector<Vertex> live_targets(Vertex u) const;

  /// Unlinks a live slot. Throws AlreadyEliminated for a dead one.
  void eliminate(ArcRef arc) { unlink(arc, nullptr); }

  /// Eliminates every incoming arc of v in a single par-block.
  void eliminate_incoming(Vertex v, ParEngine& engine);

  // Search results, set by the traversal drivers.
  const std::optional<Number>& traversal(Vertex v) const { return traversal_[v]; }
  const std::optional<std::uint32_t>& distance(Vertex v) const { return distance_[v]; }
  const std::optional<Vertex>& parent(Vertex v) const { return parent_[v]; }
  bool visited(Vertex v) const { return traversal_[v].has_value(); }

  void set_traversal(Vertex v, Number number) { traversal_[v] = number; }
  void set_distance(Vertex v, std::uint32_t d) { distance_[v] = d; }
  void set_parent(Vertex v, Vertex p) { parent_[v] = p; }

  /// Starts counting elimination attempts per arc (instrumented mode).
  void enable_elimination_counts() { elimination_counts_.assign(num_arcs(), 0); }
  /// Attempts per arc, indexed by arc_index(); empty unless enabled.
  std::span<const std::uint32_t> elimination_counts() const { return elimination_counts_; }
  std::size_t arc_index(ArcRef a) const { return offsets_[a.source] + a.slot; }

  /// One line per vertex: "u: live=[t1,t2,...] first=f indeg=d".
  void dump(std::ostream& out) const;
  std::string dump() const;

 private:
  ElimGraph() = default;

  void unlink(ArcRef arc, ParEngine* engine);

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Slot> next_;
  std::vector<Slot> prev_;
  std::vector<Slot> first_;

  std::vector<std::size_t> in_offsets_;
  std::vector<ArcRef> in_arcs_;
  std::vector<std::uint32_t> indeg_;

  std::vector<std::optional<Number>> traversal_;
  std::vector<std::optional<std::uint32_t>> distance_;
  std::vector<std::optional<Vertex>> parent_;

  std::vector<std::uint32_t> elimination_counts_;
};

}  // namespace arcelim
