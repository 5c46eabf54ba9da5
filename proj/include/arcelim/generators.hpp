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
#include <random>
#include <stdexcept>
#include <string>

#include "arcelim/graph.hpp"

namespace arcelim::gen {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooManyArcs : public GeneratorError {
 public:
  TooManyArcs(std::size_t n, std::size_t m);
};

/// Platform-independent seeded source. std::mt19937_64's output sequence is
/// fixed by the standard; bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// m distinct arcs (u, v), u != v, sampled uniformly without replacement
/// by a partial Fisher-Yates shuffle over all n(n-1) ordered pairs. Each
/// source's adjacency order is the sampling order.
Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed);

/// All ordered pairs u != v, targets ascending.
Graph complete(std::size_t n);

/// i -> i+1.
Graph path(std::size_t n);

/// 0 -> i for i = 1..n-1, ascending.
Graph star_out(std::size_t n);

/// `depth` layers of `width` vertices (vertex layer*width + j), with every
/// vertex of a layer pointing to every vertex of the next one:
/// n = width*depth, m = width^2*(depth-1). The seed shuffles each
/// adjacency array.
Graph layered_dag(std::size_t width, std::size_t depth, std::uint64_t seed);

/// Family name plus parameters, as taken by the CLI. Unused fields are
/// ignored by families that do not need them.
struct FamilySpec {
  std::string family;  // path | complete | star | gnm | layered | sample
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t width = 0;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};

/// Dispatches on spec.family; throws GeneratorError for unknown names.
Graph generate(const FamilySpec& spec);

/// The nine-vertex example graph used throughout the tests and docs
/// (data/sample.el).
Graph sample_graph();

}  // namespace arcelim::gen
