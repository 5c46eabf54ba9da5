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

#include "arcelim/oracle.hpp"

#include <deque>
#include <utility>

namespace arcelim::oracle {

namespace {

TraversalResult empty_result(std::size_t n, Number a) {
  TraversalResult r;
  r.traversal.resize(n);
  r.parent.resize(n);
  r.distance.resize(n);
  r.next_number = a;
  return r;
}

}  // namespace

TraversalResult seq_dfs(const Graph& g, Vertex s, Number a) {
  const std::size_t n = g.num_vertices();
  if (s >= n) throw InvalidStart(s);
  TraversalResult r = empty_result(n, a);

  // Simulated recursion: (vertex, index of the next arc to scan).
  std::vector<std::pair<Vertex, std::size_t>> stack;
  r.traversal[s] = r.next_number++;
  stack.emplace_back(s, 0);
  while (!stack.empty()) {
    auto& [u, i] = stack.back();
    const auto out = g.out(u);
    while (i < out.size() && r.traversal[out[i]]) ++i;
    if (i == out.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex v = out[i++];
    r.traversal[v] = r.next_number++;
    r.parent[v] = u;
    stack.emplace_back(v, 0);
  }
  r.visited_count = static_cast<std::size_t>(r.next_number - a);
  return r;
}

TraversalResult seq_bfs(const Graph& g, Vertex s, Number a) {
  const std::size_t n = g.num_vertices();
  if (s >= n) throw InvalidStart(s);
  TraversalResult r = empty_result(n, a);

  std::deque<Vertex> queue;
  r.traversal[s] = r.next_number++;
  r.distance[s] = 0;
  queue.push_back(s);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.out(u)) {
      if (r.traversal[v]) continue;
      r.traversal[v] = r.next_number++;
      r.distance[v] = *r.distance[u] + 1;
      r.parent[v] = u;
      queue.push_back(v);
    }
  }
  r.visited_count = static_cast<std::size_t>(r.next_number - a);
  return r;
}

TraversalResult seq_traverse(TraversalKind kind, const Graph& g, Vertex s, Number a) {
  return kind == TraversalKind::kDfs ? seq_dfs(g, s, a) : seq_bfs(g, s, a);
}

}  // namespace arcelim::oracle
