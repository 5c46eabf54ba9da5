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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arcelim {

using Vertex = std::uint32_t;
using Slot = std::uint32_t;
using Number = std::uint64_t;

/// An arc identified by its position in the source's adjacency array.
struct ArcRef {
  Vertex source = 0;
  Slot slot = 0;

  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TargetOutOfRange : public GraphError {
 public:
  TargetOutOfRange(Vertex source, std::size_t slot, std::uint64_t target);

  Vertex source() const { return source_; }
  std::size_t slot() const { return slot_; }
  std::uint64_t target() const { return target_; }

 private:
  Vertex source_;
  std::size_t slot_;
  std::uint64_t target_;
};

class DuplicateArc : public GraphError {
 public:
  DuplicateArc(Vertex source, Vertex target);

  Vertex source() const { return source_; }
  Vertex target() const { return target_; }

 private:
  Vertex source_;
  Vertex target_;
};

class SyntaxError : public GraphError {
 public:
  SyntaxError(std::size_t line_no, const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CountMismatch : public GraphError {
 public:
  CountMismatch(std::size_t declared, std::size_t seen);

  std::size_t declared() const { return declared_; }
  std::size_t seen() const { return seen_; }

 private:
  std::size_t declared_;
  std::size_t seen_;
};

/// Immutable simple digraph stored as ordered adjacency arrays.
///
/// Vertices are 0..n-1. The order of targets within each out-list is
/// significant: ordered DFS and BFS explore arcs in exactly this order.
/// Self-loops are allowed, parallel arcs are not.
class Graph {
 public:
  Graph() = default;

  /// Validates and copies the given out-lists, preserving their order.
  /// Throws TargetOutOfRange or DuplicateArc; never returns a partial graph.
  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& lists);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_arcs() const { return targets_.size(); }

  std::size_t outdegree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  Vertex target(Vertex u, Slot i) const { return targets_[offsets_[u] + i]; }

  std::span<const Vertex> out(Vertex u) const {
    return {targets_.data() + offsets_[u], outdegree(u)};
  }

  /// CSR view: out(u) is targets()[offsets()[u] .. offsets()[u+1]).
  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const Vertex> targets() const { return targets_; }

  std::vector<std::vector<Vertex>> out_lists() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> targets)
      : offsets_(std::move(offsets)), targets_(std::move(targets)) {}

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

inline std::size_t outdegree(const Graph& g, Vertex u) { return g.outdegree(u); }

// Edge-list text format:
//
//   # comment
//   n m
//   u v        (m lines, 0-based)
//
// Per-source adjacency order is the order of appearance. LF or CRLF line
// endings, blank lines and trailing whitespace are accepted.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace arcelim
