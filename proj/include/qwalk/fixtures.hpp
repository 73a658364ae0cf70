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

#include <random>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

using Rng = std::mt19937_64;

/// Haar-random unitary (QR of a complex Ginibre matrix, phases fixed).
MatrixXcd random_unitary(int dim, Rng &rng);

/**
 * Complete graph on n nodes (padded) with round(removal_fraction * |E|)
 * uniformly chosen edges removed.
 */
Graph random_graph(int n, double removal_fraction, Rng &rng);

}  // namespace qwalk
