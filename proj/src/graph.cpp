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

#include "arcelim/graph.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace arcelim {

TargetOutOfRange::TargetOutOfRange(Vertex source, std::size_t slot, std::uint64_t target)
    : GraphError("target out of range: arc " + std::to_string(source) + "[" +
                 std::to_string(slot) + "] -> " + std::to_string(target)),
      source_(source),
      slot_(slot),
      target_(target) {}

DuplicateArc::DuplicateArc(Vertex source, Vertex target)
    : GraphError("duplicate arc " + std::to_string(source) + " -> " + std::to_string(target)),
      source_(source),
      target_(target) {}

SyntaxError::SyntaxError(std::size_t line_no, const std::string& what)
    : GraphError("line " + std::to_string(line_no) + ": " + what), line_(line_no) {}

CountMismatch::CountMismatch(std::size_t declared, std::size_t seen)
    : GraphError("declared " + std::to_string(declared) + " arcs, found " + std::to_string(seen)),
      declared_(declared),
      seen_(seen) {}

Graph Graph::from_adjacency(const std::vector<std::vector<Vertex>>& lists) {
  const std::size_t n = lists.size();
  if (n > std::numeric_limits<Vertex>::max()) {
    throw GraphError("too many vertices");
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) offsets[u + 1] = offsets[u] + lists[u].size();

  std::vector<Vertex> targets;
  targets.reserve(offsets[n]);

  // seen[t] == u + 1 iff t already occurs in u's list.
  std::vector<std::size_t> seen(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    const auto src = static_cast<Vertex>(u);
    for (std::size_t i = 0; i < lists[u].size(); ++i) {
      const Vertex t = lists[u][i];
      if (t >= n) throw TargetOutOfRange(src, i, t);
      if (seen[t] == u + 1) throw DuplicateArc(src, t);
      seen[t] = u + 1;
      targets.push_back(t);
    }
  }
  return Graph(std::move(offsets), std::move(targets));
}

std::vector<std::vector<Vertex>> Graph::out_lists() const {
  std::vector<std::vector<Vertex>> lists(num_vertices());
  for (std::size_t u = 0; u < lists.size(); ++u) {
    auto span = out(static_cast<Vertex>(u));
    lists[u].assign(span.begin(), span.end());
  }
  return lists;
}

namespace {

// Splits a line into whitespace-separated tokens. Returns nullopt for
// blank and comment lines.
std::optional<std::vector<std::string_view>> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    if (tokens.empty() && line[i] == '#') return std::nullopt;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) return std::nullopt;
  return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw SyntaxError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::uint64_t m = 0;
  std::size_t seen = 0;
  std::vector<std::vector<Vertex>> lists;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens) continue;
    if (tokens->size() != 2) {
      throw SyntaxError(line_no, "expected two fields, got " + std::to_string(tokens->size()));
    }
    const std::uint64_t first = parse_count((*tokens)[0], line_no);
    const std::uint64_t second = parse_count((*tokens)[1], line_no);

    if (!n) {
      if (first > std::numeric_limits<Vertex>::max()) throw SyntaxError(line_no, "vertex count too large");
      n = first;
      m = second;
      lists.resize(*n);
      continue;
    }
    if (seen == m) throw CountMismatch(m, seen + 1);
    if (first >= *n) {
      throw SyntaxError(line_no, "source vertex " + std::to_string(first) + " out of range");
    }
    if (second > std::numeric_limits<Vertex>::max()) {
      throw TargetOutOfRange(static_cast<Vertex>(first), lists[first].size(), second);
    }
    lists[first].push_back(static_cast<Vertex>(second));
    ++seen;
  }
  if (!n) throw SyntaxError(line_no, "missing header line 'n m'");
  if (seen != m) throw CountMismatch(m, seen);
  return Graph::from_adjacency(lists);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_arcs() << '\n';
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    for (Vertex t : g.out(static_cast<Vertex>(u))) out << u << ' ' << t << '\n';
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace arcelim
