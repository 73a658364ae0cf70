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

#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

std::string to_string(CoinFamily family) {
  switch (family) {
    case CoinFamily::Hadamard: return "hadamard";
    case CoinFamily::Grover: return "grover";
    case CoinFamily::Dft: return "dft";
    case CoinFamily::Custom: return "custom";
  }
  return "unknown";
}

CoinFamily coin_family_from_string(const std::string &name) {
  if (name == "hadamard") return CoinFamily::Hadamard;
  if (name == "grover") return CoinFamily::Grover;
  if (name == "dft") return CoinFamily::Dft;
  if (name == "custom") return CoinFamily::Custom;
  throw Error(ErrorCode::ValidationError, "unknown coin family '" + name + "'");
}

const CoinChoice &CoinSpec::for_node(int j) const {
  auto it = overrides.find(j);
  return it == overrides.end() ? base : it->second;
}

CoinSet CoinSet::identity(int n) {
  CoinSet c;
  c.n = n;
  c.coins.assign(n, MatrixXcd::Identity(n, n));
  return c;
}

MatrixXcd named_coin(CoinFamily family, int dim) {
  if (dim < 1) {
    throw Error(ErrorCode::DimensionUnsupported,
                "coin dimension must be positive, got " + std::to_string(dim));
  }
  switch (family) {
    case CoinFamily::Hadamard: {
      if (!is_power_of_two(dim)) {
        throw Error(ErrorCode::DimensionUnsupported,
                    "hadamard coin needs a power-of-two dimension, got " +
                        std::to_string(dim));
      }
      MatrixXcd h2(2, 2);
      h2 << 1, 1, 1, -1;
      h2 /= std::sqrt(2.0);
      MatrixXcd h = MatrixXcd::Identity(1, 1);
      while (h.rows() < dim) {
        const Eigen::Index m = h.rows();
        MatrixXcd next(2 * m, 2 * m);
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) next.block(a * m, b * m, m, m) = h2(a, b) * h;
        }
        h = std::move(next);
      }
      return h;
    }
    case CoinFamily::Grover:
      return MatrixXcd::Constant(dim, dim, 2.0 / dim) -
             MatrixXcd::Identity(dim, dim);
    case CoinFamily::Dft: {
      MatrixXcd f(dim, dim);
      const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
      for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
          // reduce the exponent first so large dims keep full precision
          const double phase =
              2.0 * std::numbers::pi * ((a * b) % dim) / static_cast<double>(dim);
          f(a, b) = std::polar(scale, phase);
        }
      }
      return f;
    }
    case CoinFamily::Custom:
      break;
  }
  throw Error(ErrorCode::DimensionUnsupported,
              "custom coins need an explicit matrix");
}

MatrixXcd coin_block(const CoinChoice &choice, int dim) {
  if (choice.family != CoinFamily::Custom) return named_coin(choice.family, dim);
  const std::string name = choice.label.empty() ? "custom" : choice.label;
  if (!choice.matrix) {
    throw Error(ErrorCode::ValidationError,
                "custom coin '" + name + "' has no matrix");
  }
  const MatrixXcd &m = *choice.matrix;
  if (m.rows() != dim || m.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "custom coin '" + name + "' is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + " but the node has " +
                    std::to_string(dim) + " allowed directions");
  }
  const double defect = unitarity_defect(m);
  if (defect > 1e-10) {
    std::ostringstream msg;
    msg << "custom coin '" << name << "' is not unitary (defect " << defect
        << ")";
    throw Error(ErrorCode::NotUnitary, msg.str());
  }
  return m;
}

MatrixXcd masked_coin(const Graph &g, int j, const CoinSpec &spec) {
  const CoinDirections dirs = coin_directions(g, j);
  const int n = g.n_nodes();
  MatrixXcd coin = MatrixXcd::Identity(n, n);
  const int active = static_cast<int>(dirs.allowed.size());
  if (active == 0) return coin;
  const MatrixXcd block = coin_block(spec.for_node(j), active);
  for (int a = 0; a < active; ++a) {
    for (int b = 0; b < active; ++b) {
      coin(dirs.allowed[a] - 1, dirs.allowed[b] - 1) = block(a, b);
    }
  }
  return coin;
}

CoinSet build_coin_set(const Graph &g, const CoinSpec &spec) {
  CoinSet set;
  set.n = g.n_nodes();
  set.coins.reserve(set.n);
  std::optional<ErrorCode> first_code;
  std::string failures;
  for (int j = 1; j <= set.n; ++j) {
    try {
      set.coins.push_back(masked_coin(g, j, spec));
    } catch (const Error &e) {
      if (!first_code) first_code = e.code();
      if (!failures.empty()) failures += "; ";
      failures += "node " + std::to_string(j) + ": " + e.what();
    }
  }
  if (first_code) throw Error(*first_code, failures);
  return set;
}

void validate_coin_set(const CoinSet &c, const Graph *g) {
  if (static_cast<int>(c.coins.size()) != c.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "coin set holds " + std::to_string(c.coins.size()) +
                    " coins for dimension " + std::to_string(c.n));
  }
  if (g && g->n_nodes() != c.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "coin set dimension " + std::to_string(c.n) +
                    " does not match graph order " +
                    std::to_string(g->n_nodes()));
  }
  for (int j = 1; j <= c.n; ++j) {
    const MatrixXcd &coin = c.coins[j - 1];
    if (coin.rows() != c.n || coin.cols() != c.n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "coin of node " + std::to_string(j) + " is " +
                      std::to_string(coin.rows()) + "x" +
                      std::to_string(coin.cols()));
    }
    const double defect = unitarity_defect(coin);
    if (defect > 1e-10) {
      std::ostringstream msg;
      msg << "coin of node " << j << " is not unitary (defect " << defect << ")";
      throw Error(ErrorCode::NotUnitary, msg.str());
    }
    if (!g) continue;
    for (int k = 1; k <= c.n; ++k) {
      if (g->has_edge(j, k)) continue;
      for (int i = 1; i <= c.n; ++i) {
        const complex_t expect = (i == k) ? 1.0 : 0.0;
        if (coin(i - 1, k - 1) != expect || coin(k - 1, i - 1) != expect) {
          throw Error(ErrorCode::ValidationError,
                      "coin of node " + std::to_string(j) +
                          " couples isolated direction " + std::to_string(k));
        }
      }
    }
  }
}

}  // namespace qwalk
