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

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

/// Grouping used by a coin application: rows (Horizontal) or columns.
enum class Orientation { Horizontal, Vertical };

/**
 * Amplitude array A_{j,k} of the walker: row j is the node, column k the
 * coin state. Public indices are 1-based to match node labels.
 */
class StateSpace {
 public:
  explicit StateSpace(int n);
  explicit StateSpace(MatrixXcd amps);

  int n() const { return static_cast<int>(amps_.rows()); }

  /// 1-based element access.
  complex_t &at(int j, int k) { return amps_(j - 1, k - 1); }
  complex_t at(int j, int k) const { return amps_(j - 1, k - 1); }

  const MatrixXcd &amps() const { return amps_; }
  MatrixXcd &amps() { return amps_; }

  double norm() const { return amps_.norm(); }

 private:
  MatrixXcd amps_;
};

/// probs[j-1] = sum_k |A_{j,k}|^2.
struct NodeDistribution {
  std::vector<double> probs;

  double total() const;
};

StateSpace localized_state(int n, int j, int k);

/// Equal amplitude on every allowed |j,k>; throws EmptyGraph without edges.
StateSpace uniform_state(const Graph &g);

StateSpace transpose(const StateSpace &s);

NodeDistribution node_distribution(const StateSpace &s);

/// Largest |A_{j,k}| over states whose edge {j,k} is absent from g.
double max_isolated_amplitude(const StateSpace &s, const Graph &g);

}  // namespace qwalk
