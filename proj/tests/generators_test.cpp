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

#include <gtest/gtest.h>

#include <set>

namespace arcelim::gen {
namespace {

using Lists = std::vector<std::vector<Vertex>>;

void expect_simple(const Graph& g) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    std::set<Vertex> seen;
    for (Vertex v : g.out(u)) {
      EXPECT_LT(v, g.num_vertices());
      EXPECT_NE(u, v) << "self-loop";
      EXPECT_TRUE(seen.insert(v).second) << "duplicate";
    }
  }
}

TEST(GnmTest, Edgeless) {
  const Graph g = gnm(5, 0, 1);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_arcs(), 0u);
}

TEST(GnmTest, SaturatedIsComplete) {
  const Graph g = gnm(4, 12, 7);
  EXPECT_EQ(g.num_arcs(), 12u);
  for (Vertex u = 0; u < 4; ++u) {
    std::set<Vertex> targets(g.out(u).begin(), g.out(u).end());
    EXPECT_EQ(targets.size(), 3u);
    EXPECT_FALSE(targets.contains(u));
  }
}

TEST(GnmTest, DeterministicPerSeed) {
  const Graph a = gnm(100, 5000, 42);
  const Graph b = gnm(100, 5000, 42);
  EXPECT_EQ(to_edge_list(a), to_edge_list(b));
  EXPECT_NE(to_edge_list(a), to_edge_list(gnm(100, 5000, 43)));
  EXPECT_EQ(a.num_arcs(), 5000u);
  expect_simple(a);
}

TEST(GnmTest, SparseLargeUsesSameContract) {
  const Graph g = gnm(100000, 300000, 3);
  EXPECT_EQ(g.num_arcs(), 300000u);
  expect_simple(g);
}

TEST(GnmTest, TooManyArcs) {
  EXPECT_THROW(gnm(3, 7, 0), TooManyArcs);
  EXPECT_THROW(gnm(1, 1, 0), TooManyArcs);
  EXPECT_NO_THROW(gnm(3, 6, 0));
}

TEST(GnmTest, ArcsRoughlyUniform) {
  // Over many seeds each of the 12 ordered pairs of 4 vertices should
  // appear about half the time when m = 6.
  std::vector<int> hits(16, 0);
  const int trials = 4000;
  for (int seed = 0; seed < trials; ++seed) {
    const Graph g = gnm(4, 6, seed);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v : g.out(u)) ++hits[u * 4 + v];
  }
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) {
      if (u == v) {
        EXPECT_EQ(hits[u * 4 + v], 0);
      } else {
        EXPECT_NEAR(hits[u * 4 + v] / double(trials), 0.5, 0.05);
      }
    }
  }
}

TEST(RngTest, BelowStaysInRange) {
  Rng rng(11);
  std::vector<int> buckets(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto x = rng.below(7);
    ASSERT_LT(x, 7u);
    ++buckets[x];
  }
  for (int b : buckets) EXPECT_NEAR(b, 10000, 600);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(FamiliesTest, Path) {
  EXPECT_EQ(path(3).out_lists(), (Lists{{1}, {2}, {}}));
  EXPECT_EQ(path(1).num_arcs(), 0u);
}

TEST(FamiliesTest, Complete) {
  const Graph g = complete(3);
  EXPECT_EQ(g.num_arcs(), 6u);
  EXPECT_EQ(g.out_lists(), (Lists{{1, 2}, {0, 2}, {0, 1}}));
}

TEST(FamiliesTest, Star) {
  EXPECT_EQ(star_out(4).out_lists(), (Lists{{1, 2, 3}, {}, {}, {}}));
}

TEST(FamiliesTest, LayeredDag) {
  const Graph g = layered_dag(3, 2, 0);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_arcs(), 9u);
  for (Vertex u = 0; u < 3; ++u) {
    std::set<Vertex> targets(g.out(u).begin(), g.out(u).end());
    EXPECT_EQ(targets, (std::set<Vertex>{3, 4, 5}));
  }
  for (Vertex u = 3; u < 6; ++u) EXPECT_EQ(g.outdegree(u), 0u);

  const Graph big = layered_dag(16, 5, 9);
  EXPECT_EQ(big.num_arcs(), 16u * 16u * 4u);
  EXPECT_EQ(to_edge_list(big), to_edge_list(layered_dag(16, 5, 9)));
  expect_simple(big);
}

TEST(FamiliesTest, RejectsZeroSizes) {
  EXPECT_THROW(path(0), GeneratorError);
  EXPECT_THROW(complete(0), GeneratorError);
  EXPECT_THROW(star_out(0), GeneratorError);
  EXPECT_THROW(gnm(0, 0, 0), GeneratorError);
  EXPECT_THROW(layered_dag(0, 3, 0), GeneratorError);
  EXPECT_THROW(layered_dag(3, 0, 0), GeneratorError);
}

TEST(FamiliesTest, GenerateDispatch) {
  EXPECT_EQ(generate({.family = "path", .n = 4}), path(4));
  EXPECT_EQ(generate({.family = "complete", .n = 5}), complete(5));
  EXPECT_EQ(generate({.family = "star", .n = 5}), star_out(5));
  EXPECT_EQ(generate({.family = "gnm", .n = 20, .m = 50, .seed = 4}), gnm(20, 50, 4));
  EXPECT_EQ(generate({.family = "layered", .width = 4, .depth = 3, .seed = 2}), layered_dag(4, 3, 2));
  EXPECT_EQ(generate({.family = "sample"}), sample_graph());
  EXPECT_THROW(generate({.family = "torus", .n = 4}), GeneratorError);
}

TEST(FamiliesTest, OutputsAreValidGraphs) {
  for (const Graph& g : {complete(20), path(50), star_out(30), gnm(64, 1024, 1), layered_dag(8, 8, 3),
                         sample_graph()}) {
    expect_simple(g);
    EXPECT_EQ(Graph::from_adjacency(g.out_lists()), g);
  }
}

}  // namespace
}  // namespace arcelim::gen
