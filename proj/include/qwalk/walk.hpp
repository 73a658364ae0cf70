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

#include <functional>
#include <string>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/lattice.hpp"
#include "qwalk/state_space.hpp"

namespace qwalk {

/**
 * Explicit: coin then transposition every step. Walkless: alternate row and
 * column coin groupings, no transposition. Compiled and Lattice follow the
 * walkless order but execute each coin as its pulse schedule, abstractly or
 * on the lattice model.
 */
enum class WalkMode { Explicit, Walkless, Compiled, Lattice };

std::string to_string(WalkMode mode);
WalkMode walk_mode_from_string(const std::string &name);

/// Coins used at 1-based step i; the run's coin set is used when empty.
using CoinSchedule = std::function<CoinSet(int step)>;

struct WalkRun {
  Graph graph;
  CoinSet coins;
  StateSpace initial;
  int n_steps = 0;
  WalkMode mode = WalkMode::Walkless;
  bool record_trajectory = false;
  /// Lattice mode only; `n` is taken from the graph.
  LatticeConfig lattice;
  CoinSchedule coin_schedule;
  /// Lattice mode only; called after every stage.
  StageObserver lattice_observer;
};

struct OpCounts {
  int coin_applications = 0;
  int transpositions = 0;
};

struct WalkResult {
  StateSpace final_state;
  /// Node distribution after each step, index 0 is the initial state.
  std::vector<NodeDistribution> distributions;
  /// Per-step snapshots (index 0 = initial) when requested.
  std::vector<StateSpace> trajectory;
  OpCounts ops;
  double max_norm_error = 0.0;
  double max_isolated_amplitude = 0.0;
};

StateSpace apply_coins_horizontal(const StateSpace &s, const CoinSet &c);
StateSpace apply_coins_vertical(const StateSpace &s, const CoinSet &c);

/// transpose(apply_coins_horizontal(s, c)).
StateSpace step_explicit(const StateSpace &s, const CoinSet &c);

/**
 * Evolves the walk. Throws InitialAmplitudeOnIsolatedState when the initial
 * state populates a state whose edge is absent, DimensionMismatch or
 * NotUnitary for a bad coin set.
 */
WalkResult run(const WalkRun &walk);

/**
 * Runs the walk in two modes and returns the max amplitude deviation at
 * every step, with explicit-mode states transposed at odd steps so both
 * sides are compared in the walkless frame.
 */
std::vector<double> compare_modes(const WalkRun &walk, WalkMode a, WalkMode b);

struct EquivalenceReport {
  std::vector<double> deviations;
  double max_deviation = 0.0;
};

/// Explicit vs walkless; throws EquivalenceViolation above tol.
EquivalenceReport verify_equivalence(const WalkRun &walk, double tol);

}  // namespace qwalk
