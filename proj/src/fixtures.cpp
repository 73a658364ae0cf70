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

#include "qwalk/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qwalk {

MatrixXcd random_unitary(int dim, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXcd z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) z(i, k) = complex_t(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<MatrixXcd> qr(z);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR();
  for (int i = 0; i < dim; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Graph random_graph(int n, double removal_fraction, Rng &rng) {
  const Graph full = complete_graph(n);
  std::vector<Edge> edges(full.edges().begin(), full.edges().end());
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto count = static_cast<std::size_t>(
      std::lround(std::clamp(removal_fraction, 0.0, 1.0) * edges.size()));
  edges.resize(count);
  return remove_edges(full, edges);
}

}  // namespace qwalk
