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

#include "arcelim/traversal.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "arcelim/oracle.hpp"

namespace arcelim {

std::string_view to_string(TraversalKind kind) {
  return kind == TraversalKind::kDfs ? "dfs" : "bfs";
}

std::optional<TraversalKind> parse_traversal_kind(std::string_view name) {
  if (name == "dfs") return TraversalKind::kDfs;
  if (name == "bfs") return TraversalKind::kBfs;
  return std::nullopt;
}

InvalidStart::InvalidStart(std::uint64_t start)
    : std::invalid_argument("invalid start vertex " + std::to_string(start)) {}

void TraceObserver::on_visit(const ElimGraph&, Vertex v, Number number,
                             std::optional<std::uint32_t> level) {
  out_ << "visit " << v << " number=" << number << " level=";
  if (level) {
    out_ << *level;
  } else {
    out_ << '-';
  }
  out_ << '\n';
}

namespace {

void check_start(const ElimGraph& eg, Vertex s) {
  if (s >= eg.num_vertices() || eg.visited(s)) throw InvalidStart(s);
}

TraversalResult snapshot(const ElimGraph& eg, std::size_t visited_count, Number next_number) {
  const std::size_t n = eg.num_vertices();
  TraversalResult r;
  r.traversal.reserve(n);
  r.parent.reserve(n);
  r.distance.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    r.traversal.push_back(eg.traversal(static_cast<Vertex>(v)));
    r.parent.push_back(eg.parent(static_cast<Vertex>(v)));
    r.distance.push_back(eg.distance(static_cast<Vertex>(v)));
  }
  r.visited_count = visited_count;
  r.next_number = next_number;
  return r;
}

// Driver cost policy: one seq_tick per visit, per evaluation of the
// "live arc left?" test, per dequeue and per BFS level.

struct RunTotals {
  std::size_t visited = 0;
  Number next = 0;
};

RunTotals run_dfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                 TraversalObserver* observer) {
  RunTotals run{0, a};
  auto visit = [&](Vertex v) {
    eg.eliminate_incoming(v, engine);
    eg.set_traversal(v, run.next);
    engine.seq_tick();
    if (observer) observer->on_visit(eg, v, run.next, std::nullopt);
    ++run.next;
    ++run.visited;
  };

  // Replaces the recursion. After a child returns, the parent's first live
  // arc is re-read: the child's visit eliminated the arc that was there.
  std::vector<Vertex> stack;
  visit(s);
  stack.push_back(s);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    engine.seq_tick();
    if (auto v = eg.first_live_target(u)) {
      eg.set_parent(*v, u);
      visit(*v);
      stack.push_back(*v);
    } else {
      stack.pop_back();
    }
  }
  return run;
}

RunTotals run_bfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                 TraversalObserver* observer) {
  BfsLevelState state;
  std::size_t visited = 1;

  eg.eliminate_incoming(s, engine);
  eg.set_traversal(s, a);
  eg.set_distance(s, 0);
  engine.seq_tick();
  if (observer) observer->on_visit(eg, s, a, 0);
  state.number = a;
  state.q.push_back(s);

  do {
    ++state.level;
    engine.seq_tick();
    state.q_next.clear();
    for (std::size_t head = 0; head < state.q.size(); ++head) {
      const Vertex u = state.q[head];
      engine.seq_tick();
      for (;;) {
        engine.seq_tick();
        const auto v = eg.first_live_target(u);
        if (!v) break;
        // A live arc never points at a visited vertex.
        eg.eliminate_incoming(*v, engine);
        ++state.number;
        eg.set_traversal(*v, state.number);
        eg.set_distance(*v, state.level);
        eg.set_parent(*v, u);
        state.q_next.push_back(*v);
        engine.seq_tick();
        ++visited;
        if (observer) observer->on_visit(eg, *v, state.number, state.level);
      }
    }
    if (observer) observer->on_level_complete(eg, state);
    std::swap(state.q, state.q_next);
  } while (!state.q.empty());

  return {visited, state.number + 1};
}

}  // namespace

TraversalResult dfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                    TraversalObserver* observer) {
  check_start(eg, s);
  const RunTotals run = run_dfs(eg, s, a, engine, observer);
  return snapshot(eg, run.visited, run.next);
}

TraversalResult bfs(ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                    TraversalObserver* observer) {
  check_start(eg, s);
  const RunTotals run = run_bfs(eg, s, a, engine, observer);
  return snapshot(eg, run.visited, run.next);
}

TraversalResult traverse(TraversalKind kind, ElimGraph& eg, Vertex s, Number a, ParEngine& engine,
                         TraversalObserver* observer) {
  return kind == TraversalKind::kDfs ? dfs(eg, s, a, engine, observer)
                                     : bfs(eg, s, a, engine, observer);
}

namespace {

template <class Run>
TraversalResult forest(ElimGraph& eg, Number a, Run run) {
  std::size_t visited = 0;
  Number next = a;
  for (std::size_t v = 0; v < eg.num_vertices(); ++v) {
    if (eg.visited(static_cast<Vertex>(v))) continue;
    const RunTotals r = run(static_cast<Vertex>(v), next);
    visited += r.visited;
    next = r.next;
  }
  return snapshot(eg, visited, next);
}

}  // namespace

TraversalResult dfs_forest(ElimGraph& eg, Number a, ParEngine& engine,
                           TraversalObserver* observer) {
  return forest(eg, a, [&](Vertex s, Number next) { return run_dfs(eg, s, next, engine, observer); });
}

TraversalResult bfs_forest(ElimGraph& eg, Number a, ParEngine& engine,
                           TraversalObserver* observer) {
  return forest(eg, a, [&](Vertex s, Number next) { return run_bfs(eg, s, next, engine, observer); });
}

namespace {

template <class T>
std::string show(const std::optional<T>& value) {
  return value ? std::to_string(*value) : std::string("-");
}

}  // namespace

MatchReport compare_results(const TraversalResult& expected, const TraversalResult& actual) {
  MatchReport report;
  const std::size_t n = expected.traversal.size();
  if (actual.traversal.size() != n || actual.parent.size() != expected.parent.size() ||
      actual.distance.size() != expected.distance.size()) {
    report.match = false;
    report.detail = "vertex count differs: expected " + std::to_string(n) + ", got " +
                    std::to_string(actual.traversal.size());
    return report;
  }
  auto mismatch = [&](std::size_t v, std::string_view field, const std::string& want,
                      const std::string& got) {
    report.match = false;
    report.first_mismatch = static_cast<Vertex>(v);
    report.detail = "vertex " + std::to_string(v) + " " + std::string(field) + ": expected " +
                    want + ", got " + got;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (expected.traversal[v] != actual.traversal[v]) {
      mismatch(v, "traversal", show(expected.traversal[v]), show(actual.traversal[v]));
      return report;
    }
    if (expected.parent[v] != actual.parent[v]) {
      mismatch(v, "parent", show(expected.parent[v]), show(actual.parent[v]));
      return report;
    }
    if (expected.distance[v] != actual.distance[v]) {
      mismatch(v, "distance", show(expected.distance[v]), show(actual.distance[v]));
      return report;
    }
  }
  if (expected.visited_count != actual.visited_count) {
    report.match = false;
    report.detail = "visited_count: expected " + std::to_string(expected.visited_count) +
                    ", got " + std::to_string(actual.visited_count);
  } else if (expected.next_number != actual.next_number) {
    report.match = false;
    report.detail = "next_number: expected " + std::to_string(expected.next_number) + ", got " +
                    std::to_string(actual.next_number);
  }
  return report;
}

MatchReport verify_against_oracle(const Graph& g, Vertex s, TraversalKind kind,
                                  std::size_t processors, Backend backend) {
  ParEngine engine(processors, backend);
  ElimGraph eg = ElimGraph::build(g, engine);
  const TraversalResult actual = traverse(kind, eg, s, 0, engine);
  const TraversalResult expected = oracle::seq_traverse(kind, g, s, 0);
  return compare_results(expected, actual);
}

void write_result(std::ostream& out, const TraversalResult& r) {
  for (std::size_t v = 0; v < r.traversal.size(); ++v) {
    out << v << ' ' << show(r.traversal[v]) << ' ' << show(r.parent[v]) << ' '
        << show(r.distance[v]) << '\n';
  }
}

std::string serialize_result(const TraversalResult& r) {
  std::ostringstream out;
  write_result(out, r);
  return out.str();
}

namespace {

template <class T>
std::optional<T> parse_field(std::string_view token, std::size_t line_no) {
  if (token == "-") return std::nullopt;
  T value{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw SyntaxError(line_no, "bad result field '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

TraversalResult parse_result(std::istream& in) {
  TraversalResult r;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string v, t, p, d, extra;
    if (!(fields >> v >> t >> p >> d) || (fields >> extra)) {
      throw SyntaxError(line_no, "expected 'v traversal parent distance'");
    }
    const auto vertex = parse_field<std::size_t>(v, line_no);
    if (!vertex || *vertex != r.traversal.size()) {
      throw SyntaxError(line_no, "vertices must be listed in order from 0");
    }
    r.traversal.push_back(parse_field<Number>(t, line_no));
    r.parent.push_back(parse_field<Vertex>(p, line_no));
    r.distance.push_back(parse_field<std::uint32_t>(d, line_no));
  }
  std::optional<Number> max_number;
  for (const auto& t : r.traversal) {
    if (!t) continue;
    ++r.visited_count;
    max_number = max_number ? std::max(*max_number, *t) : *t;
  }
  r.next_number = max_number ? *max_number + 1 : 0;
  return r;
}

}  // namespace arcelim
