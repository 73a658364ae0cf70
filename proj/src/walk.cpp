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

#include "qwalk/walk.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "qwalk/csd.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

namespace {

constexpr double kIsolationTol = 1e-12;

void check_dims(const StateSpace &s, const CoinSet &c) {
  if (s.n() != c.n || static_cast<int>(c.coins.size()) != c.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "state of dimension " + std::to_string(s.n()) +
                    " with a coin set of dimension " + std::to_string(c.n));
  }
}

Orientation orientation_for_step(int step) {
  return (step % 2 == 1) ? Orientation::Horizontal : Orientation::Vertical;
}

// Per-step evolution backend; owns whichever representation the mode needs.
class Evolver {
 public:
  Evolver(const WalkRun &walk, const StateSpace &initial)
      : walk_(walk), state_(initial) {
    if (walk.mode == WalkMode::Lattice) {
      LatticeConfig cfg = walk.lattice;
      cfg.n = initial.n();
      lattice_.emplace(load_state(initial, cfg));
    }
  }

  void step(int i, const CoinSet &coins, bool fresh_coins, OpCounts &ops) {
    const Orientation o = orientation_for_step(i);
    ++ops.coin_applications;
    switch (walk_.mode) {
      case WalkMode::Explicit:
        state_ = step_explicit(state_, coins);
        ++ops.transpositions;
        return;
      case WalkMode::Walkless:
        state_ = o == Orientation::Horizontal
                     ? apply_coins_horizontal(state_, coins)
                     : apply_coins_vertical(state_, coins);
        return;
      case WalkMode::Compiled:
        refresh(coins, fresh_coins);
        state_ = compiled_coin_apply(state_, compiled_->schedules, o);
        return;
      case WalkMode::Lattice:
        refresh(coins, fresh_coins);
        lattice_coin_apply(*lattice_, compiled_->schedules, o,
                           walk_.lattice_observer);
        return;
    }
  }

  /// Snapshot in the mode's own frame plus its node distribution and norm.
  StateSpace snapshot() const {
    if (lattice_) return read_out(*lattice_).amplitudes;
    return state_;
  }

  NodeDistribution distribution() const {
    if (lattice_) return read_out(*lattice_).distribution;
    return node_distribution(state_);
  }

  double norm() const { return lattice_ ? lattice_->norm() : state_.norm(); }

 private:
  void refresh(const CoinSet &coins, bool fresh) {
    if (!compiled_ || fresh) compiled_ = compile_coin_set(coins);
  }

  const WalkRun &walk_;
  StateSpace state_;
  std::optional<LatticeState> lattice_;
  std::optional<CompiledCoins> compiled_;
};

}  // namespace

std::string to_string(WalkMode mode) {
  switch (mode) {
    case WalkMode::Explicit: return "explicit";
    case WalkMode::Walkless: return "walkless";
    case WalkMode::Compiled: return "compiled";
    case WalkMode::Lattice: return "lattice";
  }
  return "unknown";
}

WalkMode walk_mode_from_string(const std::string &name) {
  if (name == "explicit") return WalkMode::Explicit;
  if (name == "walkless") return WalkMode::Walkless;
  if (name == "compiled") return WalkMode::Compiled;
  if (name == "lattice") return WalkMode::Lattice;
  throw Error(ErrorCode::ValidationError, "unknown walk mode '" + name + "'");
}

StateSpace apply_coins_horizontal(const StateSpace &s, const CoinSet &c) {
  check_dims(s, c);
  StateSpace out(s.n());
  for (int j = 0; j < s.n(); ++j) {
    out.amps().row(j) = (c.coins[j] * s.amps().row(j).transpose()).transpose();
  }
  return out;
}

StateSpace apply_coins_vertical(const StateSpace &s, const CoinSet &c) {
  check_dims(s, c);
  StateSpace out(s.n());
  for (int j = 0; j < s.n(); ++j) out.amps().col(j) = c.coins[j] * s.amps().col(j);
  return out;
}

StateSpace step_explicit(const StateSpace &s, const CoinSet &c) {
  return transpose(apply_coins_horizontal(s, c));
}

WalkResult run(const WalkRun &walk) {
  const int n = walk.graph.n_nodes();
  if (walk.initial.n() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "initial state of dimension " + std::to_string(walk.initial.n()) +
                    " for a graph of " + std::to_string(n) + " nodes");
  }
  if (walk.n_steps < 0) {
    throw Error(ErrorCode::ValidationError, "step count must be nonnegative");
  }
  check_dims(walk.initial, walk.coins);
  validate_coin_set(walk.coins);

  std::string offending;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      if (!walk.graph.has_edge(j, k) &&
          std::abs(walk.initial.at(j, k)) > kIsolationTol) {
        offending += (offending.empty() ? "" : " ") + std::string("|") +
                     std::to_string(j) + "," + std::to_string(k) + ">";
      }
    }
  }
  if (!offending.empty()) {
    throw Error(ErrorCode::InitialAmplitudeOnIsolatedState,
                "initial state populates isolated states " + offending);
  }

  WalkResult result{walk.initial, {}, {}, {}, 0.0, 0.0};
  Evolver evolver(walk, walk.initial);
  auto observe = [&](const StateSpace &snap) {
    result.distributions.push_back(evolver.distribution());
    result.max_norm_error =
        std::max(result.max_norm_error, std::abs(evolver.norm() - 1.0));
    result.max_isolated_amplitude = std::max(
        result.max_isolated_amplitude, max_isolated_amplitude(snap, walk.graph));
    if (walk.record_trajectory) result.trajectory.push_back(snap);
  };
  observe(evolver.snapshot());

  for (int i = 1; i <= walk.n_steps; ++i) {
    const bool scheduled = static_cast<bool>(walk.coin_schedule);
    const CoinSet coins = scheduled ? walk.coin_schedule(i) : walk.coins;
    if (scheduled) {
      check_dims(walk.initial, coins);
      validate_coin_set(coins);
    }
    evolver.step(i, coins, scheduled, result.ops);
    observe(evolver.snapshot());
  }
  result.final_state = evolver.snapshot();
  return result;
}

std::vector<double> compare_modes(const WalkRun &walk, WalkMode a, WalkMode b) {
  auto trajectory = [&](WalkMode mode) {
    WalkRun w = walk;
    w.mode = mode;
    w.record_trajectory = true;
    std::vector<StateSpace> t = run(w).trajectory;
    if (mode == WalkMode::Explicit) {
      for (std::size_t i = 1; i < t.size(); i += 2) t[i] = transpose(t[i]);
    }
    return t;
  };
  const std::vector<StateSpace> ta = trajectory(a);
  const std::vector<StateSpace> tb = trajectory(b);
  std::vector<double> dev(ta.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    dev[i] = max_abs_diff(ta[i].amps(), tb[i].amps());
  }
  return dev;
}

EquivalenceReport verify_equivalence(const WalkRun &walk, double tol) {
  EquivalenceReport report;
  report.deviations = compare_modes(walk, WalkMode::Explicit, WalkMode::Walkless);
  for (std::size_t i = 0; i < report.deviations.size(); ++i) {
    const double d = report.deviations[i];
    report.max_deviation = std::max(report.max_deviation, d);
    if (!(d <= tol)) {
      std::ostringstream msg;
      msg << "explicit and walkless states differ by " << d << " at step " << i
          << " (tolerance " << tol << ")";
      throw Error(ErrorCode::EquivalenceViolation, msg.str());
    }
  }
  return report;
}

}  // namespace qwalk
