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

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/csd.hpp"
#include "qwalk/state_space.hpp"

namespace qwalk {

/// Internal state of an atom: Ground is |0>, Excited is |1>.
enum class Spin { Ground = 0, Excited = 1 };

/// Row: operations along a lattice row (the coin index varies). Column: the
/// transpose.
enum class Axis { Row, Column };

/**
 * Imperfection knobs, all zero for the ideal protocol.
 *
 * rotation_overshoot scales the mixing angle of every pi transfer by
 * (1 + eps), leaving some population behind in |0>. transport_leakage is the
 * probability fraction of each moving packet that drops into the stationary
 * potential one site along its path; with spacing >= 2 that site is a buffer
 * site.
 */
struct NoiseModel {
  double rotation_overshoot = 0.0;
  double transport_leakage = 0.0;
};

struct LatticeConfig {
  int n = 2;
  int spacing = 2;
  double wavelength = 785.0;
  NoiseModel noise;

  /// Sites per axis: (n - 1) * spacing + 1.
  int extent() const { return (n - 1) * spacing + 1; }
};

/// 0-based lattice coordinates.
struct Site {
  int x;
  int y;

  bool operator==(const Site &) const = default;
};

class LatticeState {
 public:
  explicit LatticeState(const LatticeConfig &cfg);

  const LatticeConfig &config() const { return cfg_; }
  int extent() const { return extent_; }

  /// Throws SiteOutOfRange.
  complex_t &amp(int x, int y, Spin s);
  complex_t amp(int x, int y, Spin s) const;

  /// Key site of walk state |j,k> (1-based).
  Site key_site(int j, int k) const;

  /// Key site of key index `key` on `line` (both 1-based) along an axis.
  Site line_site(Axis axis, int line, int key) const;

  bool is_key(int x, int y) const;

  double norm() const;
  double population(Spin s) const;
  double intermediate_population() const;

 private:
  std::size_t index(int x, int y) const;

  LatticeConfig cfg_;
  int extent_;
  std::vector<std::array<complex_t, 2>> sites_;
};

/// The five intermediate states of one pairwise interaction.
struct PairProtocolTrace {
  std::vector<LatticeState> states;
  std::vector<double> thetas;
};

/// One line's share of a stage executed across the lattice.
struct LineStage {
  int line;
  const Stage *stage;
};

LatticeState load_state(const StateSpace &s, const LatticeConfig &cfg);

/// u acts on (|1>, |0>) at each listed site. Throws SiteOutOfRange.
void stirap_rotate(LatticeState &ls, std::span<const Site> sites,
                   const Matrix2cd &u);

/**
 * Moves every |1> amplitude by `shift` sites along the axis. Returns the
 * polarization angle 2 pi shift / wavelength implied by the move.
 * Throws TransportOutOfRange, leaving the state untouched.
 */
double transport(LatticeState &ls, Axis axis, int shift);

/**
 * Five-step interaction applying u to the key amplitudes (p, q) on `line`:
 * flip p to |1>, carry it onto q, rotate at q, carry it back, flip back.
 */
void pair_interact(LatticeState &ls, Axis axis, int line, int p, int q,
                   const Matrix2cd &u, PairProtocolTrace *trace = nullptr);

/**
 * Runs one stage on several lines at once with a single shared transport.
 * Every rotation must span the stage interval and pairs must be disjoint.
 */
void execute_stage_on_lattice(LatticeState &ls, Axis axis,
                              std::span<const LineStage> lines);

void execute_stage_on_lattice(LatticeState &ls, Axis axis, int line,
                              const Stage &stage);

using StageObserver = std::function<void(const LatticeState &)>;

/// Applies a whole coin set (one schedule per line), stage by stage.
void lattice_coin_apply(LatticeState &ls,
                        const std::vector<PulseSchedule> &schedules,
                        Orientation orientation,
                        const StageObserver &after_stage = {});

struct LatticeReadout {
  StateSpace amplitudes;
  NodeDistribution distribution;
  Eigen::MatrixXd state_probabilities;
};

/**
 * Integrates |amp|^2 (both spins) over the sites nearest each key site
 * (ties go to the lower key), and snapshots the |0> amplitude of the key
 * sites themselves.
 */
LatticeReadout read_out(const LatticeState &ls);

}  // namespace qwalk
