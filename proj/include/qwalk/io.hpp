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

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/csd.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/state_space.hpp"

namespace qwalk {

/**
 * Graph file: {"nodes": <int>, "edges": [[j, k], ...]}, 1-based unordered
 * pairs. Throws ParseError (with line or field context) or ValidationError
 * (out-of-range endpoint, duplicate edge). The result is padded to 2^m.
 */
Graph parse_graph(const std::string &text);

/// Inverse of parse_graph; writes the unpadded node count.
std::string serialize_graph(const Graph &g);

/**
 * Coin spec file:
 *   {"default": "grover", "overrides": {"3": "dft"},
 *    "custom": {"mine": [[re, im], ...]}}
 * Custom matrices are row-major lists of [re, im] pairs and are referenced
 * by name from "default" or "overrides".
 */
CoinSpec parse_coin_spec(const std::string &text);

std::string state_to_csv(const StateSpace &s);
std::string state_to_json(const StateSpace &s);

/// "step,node,probability" rows; step 0 is the initial state.
std::string distributions_to_csv(const std::vector<NodeDistribution> &d);

std::string program_to_json(const CsdProgram &p);
std::string schedule_to_json(const PulseSchedule &s);
PulseSchedule parse_schedule(const std::string &text);

/// "x,y,spin,re,im" for every site and spin.
std::string lattice_to_csv(const LatticeState &ls);
std::string trace_to_json(const PairProtocolTrace &t);

/// Static bar chart of a node distribution.
std::string distribution_svg(const NodeDistribution &d, const std::string &title);

/// Throws Io naming the path.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace qwalk
