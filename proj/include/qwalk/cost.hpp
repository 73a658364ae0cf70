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

#include <cstdint>
#include <string>

namespace qwalk {

/**
 * Operational stages per walk step: N - 1 pulse stages for the walkless
 * scheme against 4^m / (m/2) for a gate-model circuit on m = log2(N^2)
 * qubits (about 4^m CNOTs, at most m/2 in parallel).
 */
struct CostReport {
  int n = 0;
  int m = 0;
  std::int64_t walkless_stages_per_step = 0;
  /// 4^m / (m/2).
  double circuit_stages_per_step = 0.0;
  /// 2 N^4 / log2(N^2), the same quantity written the other way.
  double circuit_stages_alt = 0.0;
  /// circuit_stages_per_step as a reduced fraction.
  std::int64_t circuit_numerator = 0;
  std::int64_t circuit_denominator = 1;
  bool formulas_agree = false;
  double speedup = 0.0;
  int n_steps = 0;
  std::int64_t walkless_total = 0;
  double circuit_total = 0.0;
};

/// Throws NotPowerOfTwo unless n = 2^k >= 2.
CostReport cost_report(int n, int n_steps);

std::string cost_report_json(const CostReport &r);
std::string cost_report_table(const CostReport &r);

}  // namespace qwalk
