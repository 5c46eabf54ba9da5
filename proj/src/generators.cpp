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

#include "arcelim/generators.hpp"

#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace arcelim::gen {

TooManyArcs::TooManyArcs(std::size_t n, std::size_t m)
    : GeneratorError("cannot place " + std::to_string(m) + " distinct arcs on " + std::to_string(n) +
                     " vertices") {}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound representable, so accepted draws are uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw GeneratorError(std::string(what) + " must be positive");
}

void require_vertex_range(std::size_t n) {
  if (n > std::numeric_limits<Vertex>::max()) throw GeneratorError("too many vertices");
}

// Virtual array 0..size-1 for a partial Fisher-Yates shuffle. Dense when
// the sample is a large fraction of the population, sparse otherwise.
class PairPool {
 public:
  PairPool(std::uint64_t size, std::uint64_t samples) : size_(size) {
    dense_ = size <= 4 * samples + 1024;
    if (dense_) {
      values_.resize(size);
      std::iota(values_.begin(), values_.end(), std::uint64_t{0});
    }
  }

  std::uint64_t get(std::uint64_t i) const {
    if (dense_) return values_[i];
    auto it = swapped_.find(i);
    return it == swapped_.end() ? i : it->second;
  }

  void set(std::uint64_t i, std::uint64_t value) {
    if (dense_) {
      values_[i] = value;
    } else {
      swapped_[i] = value;
    }
  }

  std::uint64_t size() const { return size_; }

 private:
  std::uint64_t size_;
  bool dense_;
  std::vector<std::uint64_t> values_;
  std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

}  // namespace

Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_positive(n, "vertex count");
  require_vertex_range(n);
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
  if (m > pairs) throw TooManyArcs(n, m);

  Rng rng(seed);
  PairPool pool(pairs, m);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.below(pool.size() - i);
    const std::uint64_t pick = pool.get(j);
    pool.set(j, pool.get(i));
    pool.set(i, pick);

    // Pair index -> (u, v) skipping the diagonal.
    const auto u = static_cast<Vertex>(pick / (n - 1));
    auto v = static_cast<Vertex>(pick % (n - 1));
    if (v >= u) ++v;
    lists[u].push_back(v);
  }
  return Graph::from_adjacency(lists);
}

Graph complete(std::size_t n) {
  require_positive(n, "vertex count");
  require_vertex_range(n);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t u = 0; u < n; ++u) {
    lists[u].reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) lists[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(lists);
}

Graph path(std::size_t n) {
  require_positive(n, "vertex count");
  require_vertex_range(n);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t u = 0; u + 1 < n; ++u) lists[u].push_back(static_cast<Vertex>(u + 1));
  return Graph::from_adjacency(lists);
}

Graph star_out(std::size_t n) {
  require_positive(n, "vertex count");
  require_vertex_range(n);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t v = 1; v < n; ++v) lists[0].push_back(static_cast<Vertex>(v));
  return Graph::from_adjacency(lists);
}

Graph layered_dag(std::size_t width, std::size_t depth, std::uint64_t seed) {
  require_positive(width, "layer width");
  require_positive(depth, "layer count");
  const std::size_t n = width * depth;
  if (n / depth != width) throw GeneratorError("too many vertices");
  require_vertex_range(n);

  Rng rng(seed);
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t layer = 0; layer + 1 < depth; ++layer) {
    for (std::size_t j = 0; j < width; ++j) {
      auto& out = lists[layer * width + j];
      out.reserve(width);
      for (std::size_t k = 0; k < width; ++k) out.push_back(static_cast<Vertex>((layer + 1) * width + k));
      for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
    }
  }
  return Graph::from_adjacency(lists);
}

Graph generate(const FamilySpec& spec) {
  if (spec.family == "path") return path(spec.n);
  if (spec.family == "complete") return complete(spec.n);
  if (spec.family == "star") return star_out(spec.n);
  if (spec.family == "gnm") return gnm(spec.n, spec.m, spec.seed);
  if (spec.family == "layered") return layered_dag(spec.width, spec.depth, spec.seed);
  if (spec.family == "sample") return sample_graph();
  throw GeneratorError("unknown graph family '" + spec.family + "'");
}

Graph sample_graph() {
  return Graph::from_adjacency({
      {1, 2, 3, 4},
      {5, 0},
      {5, 3, 6, 0},
      {6, 5, 0},
      {0, 3, 6},
      {7, 3, 2, 1},
      {},
      {8, 6},
      {4, 3},
  });
}

}  // namespace arcelim::gen
