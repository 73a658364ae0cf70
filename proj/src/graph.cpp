// Copyright 2026 The qwalk Authors
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

#include "qwalk/graph.hpp"

#include <algorithm>

#include "qwalk/error.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

Edge make_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

namespace {

std::string edge_str(const Edge &e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

Graph::Graph(int n_nodes, std::set<Edge> edges, std::optional<int> padded_from)
    : n_nodes_(n_nodes), edges_(), padded_from_(padded_from) {
  if (n_nodes < 2 || !is_power_of_two(n_nodes)) {
    throw Error(ErrorCode::ValidationError,
                "node count " + std::to_string(n_nodes) +
                    " is not a power of two >= 2");
  }
  const int live = padded_from.value_or(n_nodes);
  if (live < 1 || live > n_nodes) {
    throw Error(ErrorCode::ValidationError,
                "padded_from " + std::to_string(live) + " outside [1, " +
                    std::to_string(n_nodes) + "]");
  }
  for (const Edge &raw : edges) {
    const Edge e = make_edge(raw.first, raw.second);
    if (e.first < 1 || e.second > live) {
      throw Error(ErrorCode::ValidationError,
                  "edge " + edge_str(e) + " has an endpoint outside [1, " +
                      std::to_string(live) + "]");
    }
    edges_.insert(e);
  }
}

Graph Graph::make_padded(int n_nodes, std::set<Edge> edges) {
  if (n_nodes < 1) {
    throw Error(ErrorCode::ValidationError,
                "node count must be positive, got " + std::to_string(n_nodes));
  }
  const int padded = static_cast<int>(std::max(2L, next_power_of_two(n_nodes)));
  std::optional<int> from;
  if (padded != n_nodes) from = n_nodes;
  return Graph(padded, std::move(edges), from);
}

bool Graph::has_edge(int a, int b) const {
  return edges_.count(make_edge(a, b)) > 0;
}

int Graph::allowed_state_count() const {
  int m = 0;
  for (const Edge &e : edges_) m += (e.first == e.second) ? 1 : 2;
  return m;
}

Graph complete_graph(int n) {
  if (n < 1) {
    throw Error(ErrorCode::ValidationError,
                "complete graph needs n >= 1, got " + std::to_string(n));
  }
  std::set<Edge> edges;
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) edges.insert({j, k});
  }
  return Graph::make_padded(n, std::move(edges));
}

Graph remove_edges(const Graph &g, const std::vector<Edge> &removals) {
  std::set<Edge> edges = g.edges();
  for (const Edge &raw : removals) {
    const Edge e = make_edge(raw.first, raw.second);
    if (edges.erase(e) == 0) {
      throw Error(ErrorCode::RemovalNotPresent,
                  "edge " + edge_str(e) + " is not in the graph");
    }
  }
  return Graph(g.n_nodes(), std::move(edges), g.padded_from());
}

CoinDirections coin_directions(const Graph &g, int j) {
  if (j < 1 || j > g.n_nodes()) {
    throw Error(ErrorCode::NodeOutOfRange,
                "node " + std::to_string(j) + " outside [1, " +
                    std::to_string(g.n_nodes()) + "]");
  }
  CoinDirections out{j, {}};
  for (const Edge &e : g.edges()) {
    if (e.first == j) {
      out.allowed.push_back(e.second);
    } else if (e.second == j) {
      out.allowed.push_back(e.first);
    }
  }
  std::sort(out.allowed.begin(), out.allowed.end());
  return out;
}

}  // namespace qwalk
