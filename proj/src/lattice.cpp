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

#include "qwalk/lattice.hpp"

#include <cmath>
#include <numbers>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

// pi transfer |0> <-> |1> in the (|1>, |0>) basis, with optional overshoot.
Matrix2cd pi_transfer(double overshoot) {
  const double delta = overshoot * std::numbers::pi / 2.0;
  Matrix2cd m;
  m << -std::sin(delta), std::cos(delta), std::cos(delta), std::sin(delta);
  return m;
}

// Nearest key index (0-based) for a coordinate; ties resolve downward.
int nearest_key(int coord, int spacing) {
  const int f = coord / spacing;
  return (2 * (coord - f * spacing) <= spacing) ? f : f + 1;
}

}  // namespace

LatticeState::LatticeState(const LatticeConfig &cfg)
    : cfg_(cfg), extent_(cfg.extent()) {
  if (cfg.n < 1 || cfg.spacing < 1) {
    throw Error(ErrorCode::ValidationError,
                "lattice needs n >= 1 and spacing >= 1");
  }
  sites_.assign(static_cast<std::size_t>(extent_) * extent_,
                {complex_t(0.0), complex_t(0.0)});
}

std::size_t LatticeState::index(int x, int y) const {
  if (x < 0 || y < 0 || x >= extent_ || y >= extent_) {
    throw Error(ErrorCode::SiteOutOfRange,
                "site (" + std::to_string(x) + "," + std::to_string(y) +
                    ") outside a " + std::to_string(extent_) + "x" +
                    std::to_string(extent_) + " lattice");
  }
  return static_cast<std::size_t>(x) * extent_ + y;
}

complex_t &LatticeState::amp(int x, int y, Spin s) {
  return sites_[index(x, y)][static_cast<int>(s)];
}

complex_t LatticeState::amp(int x, int y, Spin s) const {
  return sites_[index(x, y)][static_cast<int>(s)];
}

Site LatticeState::key_site(int j, int k) const {
  return {(j - 1) * cfg_.spacing, (k - 1) * cfg_.spacing};
}

Site LatticeState::line_site(Axis axis, int line, int key) const {
  return axis == Axis::Row ? key_site(line, key) : key_site(key, line);
}

bool LatticeState::is_key(int x, int y) const {
  return x % cfg_.spacing == 0 && y % cfg_.spacing == 0;
}

double LatticeState::norm() const {
  double total = 0.0;
  for (const auto &site : sites_) total += std::norm(site[0]) + std::norm(site[1]);
  return std::sqrt(total);
}

double LatticeState::population(Spin s) const {
  double total = 0.0;
  for (const auto &site : sites_) total += std::norm(site[static_cast<int>(s)]);
  return total;
}

double LatticeState::intermediate_population() const {
  double total = 0.0;
  for (int x = 0; x < extent_; ++x) {
    for (int y = 0; y < extent_; ++y) {
      if (is_key(x, y)) continue;
      const auto &site = sites_[index(x, y)];
      total += std::norm(site[0]) + std::norm(site[1]);
    }
  }
  return total;
}

LatticeState load_state(const StateSpace &s, const LatticeConfig &cfg) {
  if (s.n() != cfg.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "state of dimension " + std::to_string(s.n()) +
                    " for a lattice configured for " + std::to_string(cfg.n));
  }
  LatticeState ls(cfg);
  for (int j = 1; j <= s.n(); ++j) {
    for (int k = 1; k <= s.n(); ++k) {
      const Site site = ls.key_site(j, k);
      ls.amp(site.x, site.y, Spin::Ground) = s.at(j, k);
    }
  }
  return ls;
}

void stirap_rotate(LatticeState &ls, std::span<const Site> sites,
                   const Matrix2cd &u) {
  for (const Site &site : sites) {
    complex_t &excited = ls.amp(site.x, site.y, Spin::Excited);
    complex_t &ground = ls.amp(site.x, site.y, Spin::Ground);
    const complex_t a1 = excited;
    const complex_t a0 = ground;
    excited = u(0, 0) * a1 + u(0, 1) * a0;
    ground = u(1, 0) * a1 + u(1, 1) * a0;
  }
}

double transport(LatticeState &ls, Axis axis, int shift) {
  const double theta =
      2.0 * std::numbers::pi * shift / ls.config().wavelength;
  if (shift == 0) return theta;
  const int n = ls.extent();
  const int dx = axis == Axis::Column ? shift : 0;
  const int dy = axis == Axis::Row ? shift : 0;

  struct Packet {
    int x, y;
    complex_t a;
  };
  std::vector<Packet> moving;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const complex_t a = ls.amp(x, y, Spin::Excited);
      if (a == complex_t(0.0)) continue;
      const int tx = x + dx;
      const int ty = y + dy;
      if (tx < 0 || ty < 0 || tx >= n || ty >= n) {
        throw Error(ErrorCode::TransportOutOfRange,
                    "|1> amplitude at (" + std::to_string(x) + "," +
                        std::to_string(y) + ") would leave the lattice on a " +
                        std::to_string(shift) + "-site shift");
      }
      moving.push_back({x, y, a});
    }
  }

  const double leak = ls.config().noise.transport_leakage;
  const double keep = std::sqrt(1.0 - leak);
  const double drop = std::sqrt(leak);
  const int sx = (dx > 0) - (dx < 0);
  const int sy = (dy > 0) - (dy < 0);
  for (const Packet &p : moving) ls.amp(p.x, p.y, Spin::Excited) = 0.0;
  for (const Packet &p : moving) {
    ls.amp(p.x + dx, p.y + dy, Spin::Excited) += keep * p.a;
    if (leak > 0.0) ls.amp(p.x + sx, p.y + sy, Spin::Ground) += drop * p.a;
  }
  return theta;
}

void pair_interact(LatticeState &ls, Axis axis, int line, int p, int q,
                   const Matrix2cd &u, PairProtocolTrace *trace) {
  if (p == q) {
    throw Error(ErrorCode::IndexCollision,
                "pair interaction needs two distinct key sites");
  }
  const Site sp = ls.line_site(axis, line, p);
  const Site sq = ls.line_site(axis, line, q);
  // Range checks up front so a bad pair leaves the lattice untouched.
  (void)ls.amp(sp.x, sp.y, Spin::Ground);
  (void)ls.amp(sq.x, sq.y, Spin::Ground);
  const Matrix2cd flip = pi_transfer(ls.config().noise.rotation_overshoot);
  const int shift = (q - p) * ls.config().spacing;
  auto record = [&](double theta) {
    if (!trace) return;
    trace->states.push_back(ls);
    trace->thetas.push_back(theta);
  };
  if (trace) {
    trace->states.clear();
    trace->thetas.clear();
  }

  const Site visitor[] = {sp};
  const Site host[] = {sq};
  stirap_rotate(ls, visitor, flip);
  record(0.0);
  const double theta = transport(ls, axis, shift);
  record(theta);
  stirap_rotate(ls, host, u);
  record(theta);
  transport(ls, axis, -shift);
  record(0.0);
  stirap_rotate(ls, visitor, flip.adjoint());
  record(0.0);
}

void execute_stage_on_lattice(LatticeState &ls, Axis axis,
                              std::span<const LineStage> lines) {
  const int n = ls.config().n;
  int interval = 0;
  std::vector<char> line_seen(n + 1, 0);
  std::vector<Site> visitors, hosts;
  std::vector<Matrix2cd> rotations;
  for (const LineStage &ln : lines) {
    if (ln.line < 1 || ln.line > n || line_seen[ln.line]++) {
      throw Error(ErrorCode::IndexCollision,
                  "line " + std::to_string(ln.line) +
                      " is out of range or listed twice");
    }
    if (ln.stage->rotations.empty()) continue;
    if (interval == 0) interval = ln.stage->interval;
    if (ln.stage->interval != interval) {
      throw Error(ErrorCode::ValidationError,
                  "lines disagree on the stage interval (" +
                      std::to_string(interval) + " vs " +
                      std::to_string(ln.stage->interval) + ")");
    }
    std::vector<char> used(n + 1, 0);
    for (const PairRotation &rot : ln.stage->rotations) {
      if (rot.q - rot.p != interval) {
        throw Error(ErrorCode::ValidationError,
                    "pair (" + std::to_string(rot.p) + "," +
                        std::to_string(rot.q) + ") does not span the interval " +
                        std::to_string(interval));
      }
      for (int idx : {rot.p, rot.q}) {
        if (idx < 1 || idx > n || used[idx]++) {
          throw Error(ErrorCode::IndexCollision,
                      "key index " + std::to_string(idx) + " on line " +
                          std::to_string(ln.line) +
                          " is out of range or used twice");
        }
      }
      visitors.push_back(ls.line_site(axis, ln.line, rot.p));
      hosts.push_back(ls.line_site(axis, ln.line, rot.q));
      rotations.push_back(rot.u);
    }
  }
  if (visitors.empty()) return;

  const Matrix2cd flip = pi_transfer(ls.config().noise.rotation_overshoot);
  const int shift = interval * ls.config().spacing;
  stirap_rotate(ls, visitors, flip);
  transport(ls, axis, shift);
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    stirap_rotate(ls, std::span<const Site>(&hosts[i], 1), rotations[i]);
  }
  transport(ls, axis, -shift);
  stirap_rotate(ls, visitors, flip.adjoint());
}

void execute_stage_on_lattice(LatticeState &ls, Axis axis, int line,
                              const Stage &stage) {
  const LineStage one[] = {{line, &stage}};
  execute_stage_on_lattice(ls, axis, one);
}

void lattice_coin_apply(LatticeState &ls,
                        const std::vector<PulseSchedule> &schedules,
                        Orientation orientation,
                        const StageObserver &after_stage) {
  const int n = ls.config().n;
  if (static_cast<int>(schedules.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(schedules.size()) + " schedules for a lattice of " +
                    std::to_string(n) + " lines");
  }
  const Axis axis = orientation == Orientation::Horizontal ? Axis::Row
                                                           : Axis::Column;
  const std::size_t n_stages = schedules.front().stages.size();
  std::vector<LineStage> lines(n);
  for (std::size_t i = 0; i < n_stages; ++i) {
    for (int j = 0; j < n; ++j) {
      if (schedules[j].stages.size() != n_stages) {
        throw Error(ErrorCode::DimensionMismatch,
                    "schedules differ in stage count");
      }
      lines[j] = {j + 1, &schedules[j].stages[i]};
    }
    execute_stage_on_lattice(ls, axis, lines);
    if (after_stage) after_stage(ls);
  }
}

LatticeReadout read_out(const LatticeState &ls) {
  const int n = ls.config().n;
  const int spacing = ls.config().spacing;
  LatticeReadout out{StateSpace(n), NodeDistribution{},
                     Eigen::MatrixXd::Zero(n, n)};
  for (int x = 0; x < ls.extent(); ++x) {
    const int j = nearest_key(x, spacing);
    for (int y = 0; y < ls.extent(); ++y) {
      const int k = nearest_key(y, spacing);
      out.state_probabilities(j, k) += std::norm(ls.amp(x, y, Spin::Ground)) +
                                       std::norm(ls.amp(x, y, Spin::Excited));
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const Site site = ls.key_site(j, k);
      out.amplitudes.at(j, k) = ls.amp(site.x, site.y, Spin::Ground);
    }
  }
  out.distribution.probs.resize(n);
  for (int j = 0; j < n; ++j) {
    out.distribution.probs[j] = out.state_probabilities.row(j).sum();
  }
  return out;
}

}  // namespace qwalk
