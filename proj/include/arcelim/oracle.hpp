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

#include "arcelim/graph.hpp"
#include "arcelim/traversal.hpp"

// Textbook sequential DFS and BFS with visited marks. They read nothing but
// the Graph and serve as ground truth for the arc-elimination drivers.
namespace arcelim::oracle {

/// Forward DFS scanning each adjacency array left to right, numbering on
/// first visit from a. Throws InvalidStart.
TraversalResult seq_dfs(const Graph& g, Vertex s, Number a);

/// FIFO BFS with first-discovery parents and distances; s gets a and
/// vertices are numbered in discovery order. Throws InvalidStart.
TraversalResult seq_bfs(const Graph& g, Vertex s, Number a);

TraversalResult seq_traverse(TraversalKind kind, const Graph& g, Vertex s, Number a);

}  // namespace arcelim::oracle
