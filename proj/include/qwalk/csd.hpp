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

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/state_space.hpp"

namespace qwalk {

enum class FactorKind { General2, CosineSine };

/**
 * One block-diagonal factor U_i(d) of a recursive cosine-sine decomposition.
 *
 * General2 factors (d = 2) carry n/2 arbitrary 2x2 unitaries. CosineSine
 * factors carry, for each of the n/d diagonal blocks, d/2 angles; angle r of
 * block k rotates the index pair (kd + r, kd + r + d/2) (0-based) by
 * [[cos, sin], [-sin, cos]]. Every coupling therefore spans exactly d/2.
 */
struct CsdFactor {
  int d = 2;
  FactorKind kind = FactorKind::General2;
  std::vector<Matrix2cd> blocks;
  std::vector<std::vector<double>> angles;
};

/**
 * Factors in application order: factors[0] acts first, so the coin equals
 * factors[n-2] * ... * factors[0].
 */
struct CsdProgram {
  int n = 0;
  std::vector<CsdFactor> factors;
};

/// 2x2 unitary u acting on the amplitude pair (p, q); indices are 1-based.
struct PairRotation {
  int p;
  int q;
  Matrix2cd u;
};

/// Simultaneous, disjoint pair rotations sharing one index interval.
struct Stage {
  int interval = 1;
  std::vector<PairRotation> rotations;
};

struct PulseSchedule {
  int n = 0;
  std::vector<Stage> stages;
};

/**
 * Recursive cosine-sine decomposition of an n x n unitary (n = 2^m >= 2)
 * into n - 1 factors whose block sizes follow the binary ruler sequence
 * (2, 4, 2, 8, 2, 4, 2, ...).
 *
 * Indices whose row and column are untouched by the input are deflated: a
 * pair (r, r + d/2) untouched at both ends gets angle 0 and identity blocks,
 * and when the touched indices of one half contain those of the other, the
 * untouched ones stay out of every rotation. Masks that fit neither case
 * are split densely and may route through isolated indices.
 *
 * Throws NotPowerOfTwo or NotUnitary (tolerance 1e-10).
 */
CsdProgram csd_decompose(const MatrixXcd &u);

/// Dense n x n matrix of one factor; throws BadBlockSize on inconsistent shape.
MatrixXcd materialize(const CsdFactor &f, int n);

/// Product of all materialized factors.
MatrixXcd program_matrix(const CsdProgram &p);

/// 2x2 rotation [[cos a, sin a], [-sin a, cos a]].
Matrix2cd cs_rotation(double angle);

/**
 * One stage per factor in application order. Rotations that are the
 * identity within drop_tol are omitted; the stage itself is always kept.
 */
PulseSchedule emit_schedule(const CsdProgram &p, double drop_tol = 1e-12);

/// Throws DimensionMismatch or IndexCollision.
VectorXcd execute_schedule(const VectorXcd &v, const PulseSchedule &s);

/// Per-node programs and schedules for a whole coin set.
struct CompiledCoins {
  std::vector<CsdProgram> programs;
  std::vector<PulseSchedule> schedules;
};

CompiledCoins compile_coin_set(const CoinSet &c);

/**
 * Applies the coin of line j to every row (Horizontal) or column (Vertical)
 * by executing its pulse schedule.
 */
StateSpace compiled_coin_apply(const StateSpace &s,
                               const std::vector<PulseSchedule> &schedules,
                               Orientation orientation);

}  // namespace qwalk
