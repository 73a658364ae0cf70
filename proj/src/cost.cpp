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

#include "qwalk/cost.hpp"

#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "qwalk/error.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

CostReport cost_report(int n, int n_steps) {
  if (n < 2 || !is_power_of_two(n)) {
    throw Error(ErrorCode::NotPowerOfTwo,
                "cost model needs N = 2^k >= 2, got " + std::to_string(n));
  }
  if (n_steps < 0) {
    throw Error(ErrorCode::ValidationError, "step count must be nonnegative");
  }
  CostReport r;
  r.n = n;
  r.m = 2 * log2_exact(n);
  r.n_steps = n_steps;
  r.walkless_stages_per_step = n - 1;

  // Both circuit forms as exact fractions: 4^m / (m/2) = 2*4^m / m and
  // 2 N^4 / log2(N^2) = 2 N^4 / m.
  using wide = unsigned __int128;
  const wide four_m = wide(1) << (2 * r.m);
  const wide n4 = wide(n) * n * n * n;
  const wide num_a = 2 * four_m, den_a = static_cast<wide>(r.m);
  const wide num_b = 2 * n4, den_b = static_cast<wide>(r.m);
  r.formulas_agree = num_a * den_b == num_b * den_a;

  const auto g = std::gcd(static_cast<std::uint64_t>(num_a),
                          static_cast<std::uint64_t>(den_a));
  r.circuit_numerator = static_cast<std::int64_t>(num_a / g);
  r.circuit_denominator = static_cast<std::int64_t>(den_a / g);

  r.circuit_stages_per_step = std::pow(4.0, r.m) / (r.m / 2.0);
  r.circuit_stages_alt =
      2.0 * std::pow(static_cast<double>(n), 4) / std::log2(double(n) * n);
  r.speedup = r.circuit_stages_per_step / static_cast<double>(n - 1);
  r.walkless_total = r.walkless_stages_per_step * n_steps;
  r.circuit_total = r.circuit_stages_per_step * n_steps;
  return r;
}

std::string cost_report_json(const CostReport &r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["qubits"] = r.m;
  j["walkless_stages_per_step"] = r.walkless_stages_per_step;
  j["circuit_stages_per_step"] = r.circuit_stages_per_step;
  j["circuit_stages_per_step_alt"] = r.circuit_stages_alt;
  j["circuit_stages_exact"] = {r.circuit_numerator, r.circuit_denominator};
  j["formulas_agree"] = r.formulas_agree;
  j["speedup"] = r.speedup;
  j["steps"] = r.n_steps;
  j["walkless_total"] = r.walkless_total;
  j["circuit_total"] = r.circuit_total;
  return j.dump(2);
}

std::string cost_report_table(const CostReport &r) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "N = " << r.n << "  (circuit qubits m = " << r.m << ")\n";
  out << std::left << std::setw(22) << "" << std::setw(18) << "per step"
      << "total (" << r.n_steps << " steps)\n";
  out << std::setw(22) << "walkless stages" << std::setw(18)
      << r.walkless_stages_per_step << r.walkless_total << "\n";
  out << std::setw(22) << "circuit stages" << std::setw(18)
      << r.circuit_stages_per_step << r.circuit_total << "\n";
  out << std::setw(22) << "speedup" << r.speedup << "\n";
  return out.str();
}

}  // namespace qwalk
