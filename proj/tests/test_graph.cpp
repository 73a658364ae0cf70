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

#include "qwalk/error.hpp"
#include "qwalk/fixtures.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/io.hpp"

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

bool symmetric(const Graph &g) {
  for (int j = 1; j <= g.n_nodes(); ++j) {
    for (int k : coin_directions(g, j).allowed) {
      const auto back = coin_directions(g, k).allowed;
      if (std::find(back.begin(), back.end(), j) == back.end()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("complete graphs") {
  SUBCASE("n = 2") {
    const Graph g = complete_graph(2);
    CHECK(g.n_nodes() == 2);
    CHECK(g.edges() == std::set<Edge>{{1, 1}, {1, 2}, {2, 2}});
    CHECK_FALSE(g.padded_from().has_value());
  }
  SUBCASE("n = 3 pads to 4 with an isolated node") {
    const Graph g = complete_graph(3);
    CHECK(g.n_nodes() == 4);
    CHECK(g.padded_from() == 3);
    CHECK(g.edges().size() == 6);
    CHECK(coin_directions(g, 4).allowed.empty());
  }
  SUBCASE("n = 6 has 21 edges on 8 nodes") {
    const Graph g = complete_graph(6);
    CHECK(g.n_nodes() == 8);
    CHECK(g.edges().size() == 21);
  }
  SUBCASE("n = 1 still yields a two-node space") {
    const Graph g = complete_graph(1);
    CHECK(g.n_nodes() == 2);
    CHECK(g.edges() == std::set<Edge>{{1, 1}});
  }
}

TEST_CASE("edge removal") {
  const Graph g = complete_graph(2);
  CHECK(remove_edges(g, {{1, 2}}).edges() == std::set<Edge>{{1, 1}, {2, 2}});
  CHECK(remove_edges(g, {{1, 1}}).edges() == std::set<Edge>{{1, 2}, {2, 2}});
  CHECK(remove_edges(g, {{2, 1}}).edges() == std::set<Edge>{{1, 1}, {2, 2}});
  CHECK(remove_edges(g, {{1, 2}}).n_nodes() == 2);

  const Graph once = remove_edges(g, {{1, 2}});
  CHECK(code_of([&] { remove_edges(once, {{1, 2}}); }) ==
        ErrorCode::RemovalNotPresent);
}

TEST_CASE("coin directions") {
  const Graph g = complete_graph(2);
  CHECK(coin_directions(g, 1).allowed == std::vector<int>{1, 2});
  CHECK(coin_directions(remove_edges(g, {{1, 1}}), 1).allowed ==
        std::vector<int>{2});
  CHECK(coin_directions(complete_graph(3), 4).allowed.empty());
  CHECK(code_of([&] { coin_directions(g, 0); }) == ErrorCode::NodeOutOfRange);
  CHECK(code_of([&] { coin_directions(g, 3); }) == ErrorCode::NodeOutOfRange);
}

TEST_CASE("graph invariants are enforced on construction") {
  CHECK(code_of([] { Graph(3, {}); }) == ErrorCode::ValidationError);
  CHECK(code_of([] { Graph(4, {{1, 5}}); }) == ErrorCode::ValidationError);
  // padded nodes carry no edges
  CHECK(code_of([] { Graph(4, {{1, 4}}, 3); }) == ErrorCode::ValidationError);
}

TEST_CASE("property: undirected symmetry survives random removals") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    Graph g = random_graph(n, frac(rng), rng);
    CHECK(symmetric(g));
    if (!g.edges().empty()) {
      std::vector<Edge> one{*std::next(g.edges().begin(), rng() % g.edges().size())};
      g = remove_edges(g, one);
      CHECK(symmetric(g));
    }
  }
}

TEST_CASE("removing every edge empties every direction set") {
  for (int n : {1, 2, 3, 5, 8}) {
    const Graph full = complete_graph(n);
    const Graph empty = remove_edges(
        full, std::vector<Edge>(full.edges().begin(), full.edges().end()));
    for (int j = 1; j <= empty.n_nodes(); ++j) {
      CHECK(coin_directions(empty, j).allowed.empty());
    }
  }
}

TEST_CASE("graph file parsing") {
  SUBCASE("complete 2-graph") {
    const Graph g = parse_graph(R"({"nodes":2,"edges":[[1,1],[1,2],[2,2]]})");
    CHECK(g == complete_graph(2));
  }
  SUBCASE("three nodes pad to four") {
    const Graph g = parse_graph(R"({"nodes":3,"edges":[[1,2],[3,3]]})");
    CHECK(g.n_nodes() == 4);
    CHECK(g.padded_from() == 3);
  }
  SUBCASE("out-of-range endpoint") {
    CHECK(code_of([] { parse_graph(R"({"nodes":2,"edges":[[1,3]]})"); }) ==
          ErrorCode::ValidationError);
  }
  SUBCASE("duplicates, either orientation") {
    CHECK(code_of([] { parse_graph(R"({"nodes":2,"edges":[[1,2],[2,1]]})"); }) ==
          ErrorCode::ValidationError);
  }
  SUBCASE("syntax errors report a line") {
    try {
      parse_graph("{\n\"nodes\": 2,\n\"edges\": [[1,2],]\n}");
      FAIL("expected ParseError");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("field errors name the field") {
    try {
      parse_graph(R"({"nodes":2,"edges":[[1,1],[1,"x"]]})");
      FAIL("expected ParseError");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("edges[1][1]") != std::string::npos);
    }
    CHECK(code_of([] { parse_graph(R"({"edges":[]})"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_graph(R"({"nodes":2,"edges":[[1]]})"); }) ==
          ErrorCode::ParseError);
  }
}

TEST_CASE("property: parse -> serialize -> parse round-trips") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(n, 0.5, rng);
    const Graph once = parse_graph(serialize_graph(g));
    CHECK(once == g);
    CHECK(parse_graph(serialize_graph(once)) == once);
  }
}
