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

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

/// Unordered node pair, stored with first <= second. Nodes are 1-based.
using Edge = std::pair<int, int>;

Edge make_edge(int a, int b);

/**
 * Undirected graph on a power-of-two number of nodes, self loops allowed.
 *
 * Values are immutable once constructed. Nodes beyond `padded_from()` were
 * added to reach a power of two and never carry edges.
 */
class Graph {
 public:
  /**
   * Validates and stores the edge list. `n_nodes` must already be a power of
   * two >= 2; use `make_padded` for arbitrary node counts.
   */
  Graph(int n_nodes, std::set<Edge> edges,
        std::optional<int> padded_from = std::nullopt);

  /// Pads `n_nodes` up to a power of two (minimum 2) with isolated nodes.
  static Graph make_padded(int n_nodes, std::set<Edge> edges);

  int n_nodes() const { return n_nodes_; }
  const std::set<Edge> &edges() const { return edges_; }
  std::optional<int> padded_from() const { return padded_from_; }

  bool has_edge(int a, int b) const;

  /// Number of ordered basis states |j,k> allowed by the edge set.
  int allowed_state_count() const;

  bool operator==(const Graph &other) const = default;

 private:
  int n_nodes_;
  std::set<Edge> edges_;
  std::optional<int> padded_from_;
};

/// Allowed coin directions S_j of one node, ascending.
struct CoinDirections {
  int node;
  std::vector<int> allowed;
};

/// Complete graph with self loops on the first n nodes, padded to 2^m.
Graph complete_graph(int n);

/// Throws RemovalNotPresent if any pair is not currently an edge.
Graph remove_edges(const Graph &g, const std::vector<Edge> &removals);

/// Throws NodeOutOfRange for j outside [1, n_nodes].
CoinDirections coin_directions(const Graph &g, int j);

}  // namespace qwalk
