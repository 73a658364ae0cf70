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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

enum class CoinFamily { Hadamard, Grover, Dft, Custom };

std::string to_string(CoinFamily family);

/// Throws ValidationError on unknown names.
CoinFamily coin_family_from_string(const std::string &name);

/// One coin choice: a named family, or an explicit unitary when Custom.
struct CoinChoice {
  CoinFamily family = CoinFamily::Grover;
  std::optional<MatrixXcd> matrix;
  std::string label;
};

/// Default coin for every node plus optional per-node overrides (1-based).
struct CoinSpec {
  CoinChoice base;
  std::map<int, CoinChoice> overrides;

  const CoinChoice &for_node(int j) const;
};

/// Per-node coins, coins[j-1] acting on row (or column) j.
struct CoinSet {
  int n = 0;
  std::vector<MatrixXcd> coins;

  static CoinSet identity(int n);
};

/**
 * Standard dim-dimensional coin. Hadamard is the tensor power of the 2x2
 * Hadamard and needs dim = 2^m; Grover is 2/dim J - I; DFT has entries
 * w^{ab}/sqrt(dim), w = exp(2 pi i / dim).
 */
MatrixXcd named_coin(CoinFamily family, int dim);

/// Resolves a choice to a dim x dim unitary (custom matrices are checked).
MatrixXcd coin_block(const CoinChoice &choice, int dim);

/**
 * Coin of node j: the |S_j|-dimensional coin embedded at the allowed
 * directions, identity on every isolated direction.
 */
MatrixXcd masked_coin(const Graph &g, int j, const CoinSpec &spec);

CoinSet build_coin_set(const Graph &g, const CoinSpec &spec);

/**
 * Checks dimensions and unitarity (1e-10); with a graph also checks that
 * every isolated direction is masked to exactly 0/1.
 */
void validate_coin_set(const CoinSet &c, const Graph *g = nullptr);

}  // namespace qwalk
