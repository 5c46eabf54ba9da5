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

#include "arcelim/elim_graph.hpp"

#include <ostream>
#include <sstream>

namespace arcelim {

AlreadyEliminated::AlreadyEliminated(ArcRef arc)
    : std::logic_error("arc " + std::to_string(arc.source) + "[" + std::to_string(arc.slot) +
                       "] already eliminated"),
      arc_(arc) {}

ElimGraph ElimGraph::build(const Graph& g, ParEngine& engine) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_arcs();

  ElimGraph eg;
  eg.offsets_.assign(g.offsets().begin(), g.offsets().end());
  if (eg.offsets_.empty()) eg.offsets_.push_back(0);
  eg.targets_.assign(g.targets().begin(), g.targets().end());
  eg.next_.resize(m);
  eg.prev_.resize(m);
  eg.first_.resize(n);
  eg.indeg_.resize(n);
  eg.traversal_.resize(n);
  eg.distance_.resize(n);
  eg.parent_.resize(n);

  // Allocation of the in-tables: exact sizes from a counting pass.
  eg.in_offsets_.assign(n + 1, 0);
  for (Vertex t : eg.targets_) ++eg.in_offsets_[t + 1];
  for (std::size_t v = 0; v < n; ++v) eg.in_offsets_[v + 1] += eg.in_offsets_[v];
  eg.in_arcs_.resize(m);

  engine.par_for(n, [&](std::size_t u) {
    eg.indeg_[u] = 0;
    eg.first_[u] = 0;
    engine.note_write(&eg.indeg_[u]);
    engine.note_write(&eg.first_[u]);
  });

  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t base = eg.offsets_[u];
    engine.par_for(eg.offsets_[u + 1] - base, [&, u, base](std::size_t i) {
      const Vertex v = eg.targets_[base + i];
      const std::uint32_t d = eg.indeg_[v];
      ArcRef& cell = eg.in_arcs_[eg.in_offsets_[v] + d];
      cell = ArcRef{static_cast<Vertex>(u), static_cast<Slot>(i)};
      eg.indeg_[v] = d + 1;
      eg.next_[base + i] = static_cast<Slot>(i + 1);
      eg.prev_[base + i] = i == 0 ? kNil : static_cast<Slot>(i - 1);
      engine.note_write(&cell);
      engine.note_write(&eg.indeg_[v]);
      engine.note_write(&eg.next_[base + i]);
      engine.note_write(&eg.prev_[base + i]);
    });
  }
  return eg;
}

// A dead slot is never linked again, so following its stale prev index
// never leads back to it.
bool ElimGraph::is_live(ArcRef a) const {
  if (a.slot >= outdegree(a.source)) return false;
  const Slot p = prev(a.source, a.slot);
  if (p == kNil) return first_[a.source] == a.slot;
  return next(a.source, p) == a.slot;
}

void ElimGraph::unlink(ArcRef a, ParEngine* engine) {
  if (!elimination_counts_.empty()) ++elimination_counts_[arc_index(a)];
  if (!is_live(a)) throw AlreadyEliminated(a);

  const std::size_t base = offsets_[a.source];
  const Slot p = prev_[base + a.slot];
  const Slot x = next_[base + a.slot];
  if (p == kNil) {
    first_[a.source] = x;
    if (engine) engine->note_write(&first_[a.source]);
  } else {
    next_[base + p] = x;
    if (engine) engine->note_write(&next_[base + p]);
  }
  if (x < outdegree(a.source)) {
    prev_[base + x] = p;
    if (engine) engine->note_write(&prev_[base + x]);
  }
}

void ElimGraph::eliminate_incoming(Vertex v, ParEngine& engine) {
  const std::span<const ArcRef> arcs = in(v);
  engine.par_for(arcs.size(), [&](std::size_t i) { unlink(arcs[i], &engine); });
}

std::vector<Vertex> ElimGraph::live_targets(Vertex u) const {
  std::vector<Vertex> live;
  const std::size_t deg = outdegree(u);
  for (Slot i = first_[u]; i < deg; i = next(u, i)) live.push_back(targets_[offsets_[u] + i]);
  return live;
}

void ElimGraph::dump(std::ostream& out) const {
  for (std::size_t u = 0; u < num_vertices(); ++u) {
    const auto v = static_cast<Vertex>(u);
    out << u << ": live=[";
    const auto live = live_targets(v);
    for (std::size_t k = 0; k < live.size(); ++k) out << (k ? "," : "") << live[k];
    out << "] first=" << first_[u] << " indeg=" << indeg_[u] << '\n';
  }
}

std::string ElimGraph::dump() const {
  std::ostringstream out;
  dump(out);
  return out.str();
}

}  // namespace arcelim
