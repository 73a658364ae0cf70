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

#include "qwalk/state_space.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

StateSpace::StateSpace(int n) : amps_(MatrixXcd::Zero(n, n)) {}

StateSpace::StateSpace(MatrixXcd amps) : amps_(std::move(amps)) {
  if (amps_.rows() != amps_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude array is not square");
  }
}

double NodeDistribution::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

StateSpace localized_state(int n, int j, int k) {
  if (j < 1 || j > n || k < 1 || k > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "|" + std::to_string(j) + "," + std::to_string(k) +
                    "> outside a " + std::to_string(n) + "x" +
                    std::to_string(n) + " state space");
  }
  StateSpace s(n);
  s.at(j, k) = 1.0;
  return s;
}

StateSpace uniform_state(const Graph &g) {
  const int m = g.allowed_state_count();
  if (m == 0) throw Error(ErrorCode::EmptyGraph, "graph has no edges");
  const double a = 1.0 / std::sqrt(static_cast<double>(m));
  StateSpace s(g.n_nodes());
  for (const Edge &e : g.edges()) {
    s.at(e.first, e.second) = a;
    s.at(e.second, e.first) = a;
  }
  return s;
}

StateSpace transpose(const StateSpace &s) {
  return StateSpace(MatrixXcd(s.amps().transpose()));
}

NodeDistribution node_distribution(const StateSpace &s) {
  NodeDistribution d;
  d.probs.resize(s.n());
  for (int j = 0; j < s.n(); ++j) d.probs[j] = s.amps().row(j).squaredNorm();
  return d;
}

double max_isolated_amplitude(const StateSpace &s, const Graph &g) {
  double worst = 0.0;
  for (int j = 1; j <= s.n(); ++j) {
    for (int k = 1; k <= s.n(); ++k) {
      if (!g.has_edge(j, k)) worst = std::max(worst, std::abs(s.at(j, k)));
    }
  }
  return worst;
}

}  // namespace qwalk
