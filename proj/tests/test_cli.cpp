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

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qwalk/io.hpp"

using namespace qwalk;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string &name)
      : path(fs::temp_directory_path() / ("qwalk_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string &f) const { return (path / f).string(); }
};

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("run") {
  TempDir dir("run");
  write_text_file(dir / "g2.json", R"({"nodes":2,"edges":[[1,1],[1,2],[2,2]]})");

  SUBCASE("complete 2-graph, hadamard, two steps") {
    const Result r = invoke({"run", "--graph", dir / "g2.json", "--coin-family",
                             "hadamard", "--init", "localized:1,1", "--steps", "2",
                             "--mode", "walkless", "--out", dir / "o", "--svg",
                             "--trajectory"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(read_text_file(dir / "o/distribution.csv"));
    REQUIRE(rows.size() == 6);
    CHECK(rows[4][0] == "2");
    CHECK(rows[5][1] == "2");
    CHECK(std::abs(std::stod(rows[4][2]) - 0.5) <= 1e-12);
    CHECK(std::abs(std::stod(rows[5][2]) - 0.5) <= 1e-12);
    CHECK(fs::exists(dir / "o/final_state.json"));
    CHECK(fs::exists(dir / "o/final_state.csv"));
    CHECK(fs::exists(dir / "o/distribution.svg"));
    CHECK(json::parse(read_text_file(dir / "o/trajectory.json")).size() == 3);
  }
  SUBCASE("zero steps reports the initial distribution") {
    const Result r = invoke({"run", "--graph", dir / "g2.json", "--init",
                             "localized:1,2", "--steps", "0", "--out", dir / "z"});
    CHECK(r.code == 0);
    const auto rows = csv_rows(read_text_file(dir / "z/distribution.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"0", "1", "1"});
    CHECK(rows[1] == std::vector<std::string>{"0", "2", "0"});
  }
  SUBCASE("every mode writes rows that sum to one") {
    for (const char *mode : {"explicit", "walkless", "compiled", "lattice"}) {
      const std::string out = dir / (std::string("m_") + mode);
      const Result r = invoke({"run", "--random-graph", "4", "--seed", "7", "--steps",
                               "9", "--mode", mode, "--out", out});
      REQUIRE(r.code == 0);
      std::map<std::string, double> sums;
      for (const auto &row : csv_rows(read_text_file(out + "/distribution.csv"))) {
        sums[row[0]] += std::stod(row[2]);
      }
      CHECK(sums.size() == 10);
      for (const auto &[step, s] : sums) CHECK(std::abs(s - 1.0) <= 1e-9);
    }
  }
  SUBCASE("outputs are deterministic") {
    for (const char *o : {"d1", "d2"}) {
      REQUIRE(invoke({"run", "--random-graph", "8", "--seed", "3", "--mode", "compiled",
                      "--out", dir / o})
                  .code == 0);
    }
    CHECK(read_text_file(dir / "d1/distribution.csv") ==
          read_text_file(dir / "d2/distribution.csv"));
    CHECK(read_text_file(dir / "d1/final_state.json") ==
          read_text_file(dir / "d2/final_state.json"));
  }
  SUBCASE("missing graph file") {
    const Result r = invoke({"run", "--graph", dir / "nope.json", "--out", dir / "x"});
    CHECK(r.code == cli::kExitInput);
    CHECK(r.err.find("nope.json") != std::string::npos);
  }
  SUBCASE("bad arguments") {
    CHECK(invoke({"run", "--graph", dir / "g2.json"}).code != 0);
    CHECK(invoke({"run", "--graph", dir / "g2.json", "--init", "middle", "--out",
                  dir / "x"})
              .code == cli::kExitInput);
    CHECK(invoke({"run", "--graph", dir / "g2.json", "--mode", "sideways", "--out",
                  dir / "x"})
              .code == cli::kExitInput);
    CHECK(invoke({"frobnicate"}).code != 0);
  }
  SUBCASE("initial amplitude on a removed edge") {
    write_text_file(dir / "g.json", R"({"nodes":2,"edges":[[1,1],[2,2]]})");
    const Result r = invoke({"run", "--graph", dir / "g.json", "--init", "localized:1,2",
                             "--out", dir / "x"});
    CHECK(r.code == cli::kExitInput);
    CHECK(r.err.find("|1,2>") != std::string::npos);
  }
}

TEST_CASE("verify") {
  TempDir dir("verify");
  SUBCASE("complete 4-graph, grover, 8 steps") {
    write_text_file(dir / "g4.json",
                    R"({"nodes":4,"edges":[[1,1],[1,2],[1,3],[1,4],[2,2],[2,3],[2,4],[3,3],[3,4],[4,4]]})");
    const Result r = invoke({"verify", "--graph", dir / "g4.json", "--steps", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("compiled <-> lattice") != std::string::npos);
  }
  SUBCASE("seeded random 8-graph, 5 steps") {
    const Result r = invoke({"verify", "--random-graph", "8", "--seed", "11", "--steps", "5"});
    CHECK(r.code == 0);
  }
  SUBCASE("non-unitary custom coin") {
    write_text_file(dir / "coins.json",
                    R"({"default":"bad","custom":{"bad":[[1,0],[1,0],[0,0],[1,0]]}})");
    const Result r = invoke({"verify", "--random-graph", "2", "--removal", "0", "--coins",
                             dir / "coins.json"});
    CHECK(r.code == cli::kExitNumerical);
    CHECK(r.err.find("unitar") != std::string::npos);
  }
}

TEST_CASE("compile") {
  TempDir dir("compile");
  auto intervals = [&](int n) {
    const std::string out = dir / ("n" + std::to_string(n));
    const Result r = invoke({"compile", "--random-graph", std::to_string(n), "--removal",
                             "0", "--coin-family", "hadamard", "--out", out});
    REQUIRE(r.code == 0);
    const json summary = json::parse(read_text_file(out + "/summary.json"));
    CHECK(summary["walkless_stages_per_step"] == n - 1);
    for (int j = 1; j <= n; ++j) {
      CHECK(fs::exists(out + "/program_node" + std::to_string(j) + ".json"));
      const json s = json::parse(
          read_text_file(out + "/schedule_node" + std::to_string(j) + ".json"));
      CHECK(s["stages"].size() == static_cast<std::size_t>(n - 1));
    }
    return summary["intervals"].get<std::vector<int>>();
  };
  CHECK(intervals(2) == std::vector<int>{1});
  CHECK(intervals(4) == std::vector<int>{1, 2, 1});
  CHECK(intervals(8) == std::vector<int>{1, 2, 1, 4, 1, 2, 1});
}

TEST_CASE("cost") {
  Result r = invoke({"cost", "--nodes", "4", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["walkless_stages_per_step"] == 3);
  CHECK(j["circuit_stages_per_step"] == 128.0);

  r = invoke({"cost", "-n", "2", "--json"});
  j = json::parse(r.out);
  CHECK(j["walkless_stages_per_step"] == 1);
  CHECK(j["circuit_stages_per_step"] == 16.0);

  r = invoke({"cost", "-n", "4"});
  CHECK(r.out.find("128") != std::string::npos);

  r = invoke({"cost", "-n", "6"});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.err.find("NotPowerOfTwo") != std::string::npos);
}
