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

#include <doctest.h>

#include <cmath>

#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/state_space.hpp"
#include "support/oracles.hpp"

using namespace qwalk;

namespace {

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected a qwalk::Error");
  return ErrorCode::Io;
}

CoinSpec spec_of(CoinFamily f) {
  CoinSpec s;
  s.base.family = f;
  return s;
}

// Graph on four nodes with S_1 = {1,2}.
Graph restricted_four() {
  return remove_edges(complete_graph(4), {{1, 3}, {1, 4}});
}

}  // namespace

TEST_CASE("named coins") {
  const double r = 1.0 / std::sqrt(2.0);
  MatrixXcd h(2, 2);
  h << r, r, r, -r;
  CHECK(max_abs_diff(named_coin(CoinFamily::Hadamard, 2), h) <= 1e-15);

  MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(max_abs_diff(named_coin(CoinFamily::Grover, 2), swap) <= 1e-15);

  const MatrixXcd g4 = named_coin(CoinFamily::Grover, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CHECK(std::abs(g4(a, b) - complex_t(a == b ? -0.5 : 0.5)) <= 1e-15);
    }
  }

  CHECK(code_of([] { named_coin(CoinFamily::Hadamard, 3); }) ==
        ErrorCode::DimensionUnsupported);

  SUBCASE("every family is unitary where defined") {
    for (int dim = 1; dim <= 9; ++dim) {
      CHECK(is_unitary(named_coin(CoinFamily::Grover, dim)));
      CHECK(is_unitary(named_coin(CoinFamily::Dft, dim)));
      if (is_power_of_two(dim)) CHECK(is_unitary(named_coin(CoinFamily::Hadamard, dim)));
    }
  }
  SUBCASE("DFT entries") {
    const MatrixXcd f = named_coin(CoinFamily::Dft, 3);
    const complex_t w = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(std::abs(f(1, 2) - w * w / std::sqrt(3.0)) <= 1e-15);
    CHECK(std::abs(f(2, 2) - w / std::sqrt(3.0)) <= 1e-15);
  }
  SUBCASE("1-dimensional blocks are the scalar 1") {
    CHECK(named_coin(CoinFamily::Grover, 1)(0, 0) == complex_t(1.0));
    CHECK(named_coin(CoinFamily::Dft, 1)(0, 0) == complex_t(1.0));
  }
}

TEST_CASE("masked coins") {
  SUBCASE("2-dim grover embedded as a swap") {
    MatrixXcd expected = MatrixXcd::Identity(4, 4);
    expected.topLeftCorner(2, 2) << 0, 1, 1, 0;
    CHECK(masked_coin(restricted_four(), 1, spec_of(CoinFamily::Grover)) ==
          expected);
  }
  SUBCASE("no removals gives the full coin") {
    CHECK(max_abs_diff(masked_coin(complete_graph(4), 2, spec_of(CoinFamily::Hadamard)),
                       named_coin(CoinFamily::Hadamard, 4)) <= 1e-15);
  }
  SUBCASE("empty direction set gives identity") {
    CHECK(masked_coin(complete_graph(3), 4, spec_of(CoinFamily::Dft)) ==
          MatrixXcd::Identity(4, 4));
  }
  SUBCASE("hadamard on three directions") {
    const Graph g = remove_edges(complete_graph(4), {{1, 4}});
    CHECK(code_of([&] { masked_coin(g, 1, spec_of(CoinFamily::Hadamard)); }) ==
          ErrorCode::DimensionUnsupported);
  }
  SUBCASE("non-contiguous embedding") {
    const Graph g = remove_edges(complete_graph(4), {{2, 2}, {2, 3}});
    const MatrixXcd c = masked_coin(g, 2, spec_of(CoinFamily::Grover));
    const MatrixXcd block = named_coin(CoinFamily::Grover, 2);
    CHECK(c(0, 0) == block(0, 0));
    CHECK(c(0, 3) == block(0, 1));
    CHECK(c(3, 0) == block(1, 0));
    CHECK(c(3, 3) == block(1, 1));
    CHECK(c(1, 1) == complex_t(1.0));
    CHECK(c(2, 2) == complex_t(1.0));
  }
}

TEST_CASE("coin sets") {
  SUBCASE("complete 2-graph, hadamard") {
    const CoinSet c = build_coin_set(complete_graph(2), spec_of(CoinFamily::Hadamard));
    REQUIRE(c.coins.size() == 2);
    CHECK(c.coins[0] == named_coin(CoinFamily::Hadamard, 2));
    CHECK(c.coins[1] == named_coin(CoinFamily::Hadamard, 2));
  }
  SUBCASE("2-graph minus the self loop at 1") {
    const Graph g = remove_edges(complete_graph(2), {{1, 1}});
    const CoinSet c = build_coin_set(g, spec_of(CoinFamily::Grover));
    CHECK(c.coins[0] == MatrixXcd::Identity(2, 2));
    MatrixXcd swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(c.coins[1] == swap);
  }
  SUBCASE("per-node overrides") {
    CoinSpec spec = spec_of(CoinFamily::Grover);
    spec.overrides[1].family = CoinFamily::Dft;
    const CoinSet c = build_coin_set(complete_graph(4), spec);
    CHECK(max_abs_diff(c.coins[0], c.coins[1]) > 0.1);
    CHECK(c.coins[1] == c.coins[2]);
    for (const auto &m : c.coins) CHECK(unitarity_defect(m) <= 1e-10);
  }
  SUBCASE("errors are reported per node") {
    const Graph g = remove_edges(complete_graph(4), {{1, 4}, {2, 4}});
    try {
      build_coin_set(g, spec_of(CoinFamily::Hadamard));
      FAIL("expected DimensionUnsupported");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::DimensionUnsupported);
      const std::string what = e.what();
      CHECK(what.find("node 1") != std::string::npos);
      CHECK(what.find("node 2") != std::string::npos);
    }
  }
}

TEST_CASE("custom coins") {
  CoinSpec spec;
  spec.base.family = CoinFamily::Custom;
  spec.base.label = "mine";
  SUBCASE("valid") {
    Rng rng(1);
    spec.base.matrix = random_unitary(4, rng);
    const CoinSet c = build_coin_set(complete_graph(4), spec);
    CHECK(c.coins[0] == *spec.base.matrix);
  }
  SUBCASE("wrong dimension") {
    spec.base.matrix = MatrixXcd::Identity(2, 2);
    CHECK(code_of([&] { build_coin_set(complete_graph(4), spec); }) ==
          ErrorCode::DimensionMismatch);
  }
  SUBCASE("not unitary") {
    spec.base.matrix = MatrixXcd::Constant(2, 2, 1.0);
    CHECK(code_of([&] { build_coin_set(complete_graph(2), spec); }) ==
          ErrorCode::NotUnitary);
  }
}

TEST_CASE("property: masked entries are bit-exact") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 15), 0.4, rng);
    const CoinSet c = build_coin_set(
        g, spec_of(trial % 2 ? CoinFamily::Dft : CoinFamily::Grover));
    const int n = g.n_nodes();
    for (int j = 1; j <= n; ++j) {
      const MatrixXcd &m = c.coins[j - 1];
      CHECK(unitarity_defect(m) <= 1e-10);
      for (int k = 1; k <= n; ++k) {
        if (g.has_edge(j, k)) continue;
        for (int x = 0; x < n; ++x) {
          const complex_t want = x == k - 1 ? 1.0 : 0.0;
          CHECK(m(k - 1, x) == want);
          CHECK(m(x, k - 1) == want);
        }
      }
    }
    CHECK_NOTHROW(validate_coin_set(c, &g));
  }
}

TEST_CASE("property: isolated amplitudes stay exactly zero") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
    if (g.edges().empty()) continue;
    const CoinSet c = build_coin_set(g, spec_of(CoinFamily::Dft));
    const StateSpace s = testing::random_state_on(g, rng);
    // rows and columns share a mask since the graph is undirected
    CHECK(max_isolated_amplitude(testing::unflatten(
                                     testing::full_coin_operator(c) *
                                         testing::flatten(s),
                                     g.n_nodes()),
                                 g) == 0.0);
    CHECK(max_isolated_amplitude(
              transpose(testing::unflatten(testing::full_coin_operator(c) *
                                               testing::flatten(transpose(s)),
                                           g.n_nodes())),
              g) == 0.0);
  }
}

TEST_CASE("coin set validation") {
  CoinSet c = CoinSet::identity(4);
  CHECK_NOTHROW(validate_coin_set(c));
  c.coins[2](0, 0) = 2.0;
  CHECK(code_of([&] { validate_coin_set(c); }) == ErrorCode::NotUnitary);
  c.coins.pop_back();
  CHECK(code_of([&] { validate_coin_set(c); }) == ErrorCode::DimensionMismatch);

  const Graph g = remove_edges(complete_graph(2), {{1, 2}});
  CoinSet swapped = CoinSet::identity(2);
  swapped.coins[0] << 0, 1, 1, 0;
  CHECK(code_of([&] { validate_coin_set(swapped, &g); }) ==
        ErrorCode::ValidationError);
}
