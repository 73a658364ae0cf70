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

#include <json.hpp>

#include "qwalk/cost.hpp"
#include "qwalk/csd.hpp"
#include "qwalk/error.hpp"
#include "qwalk/fixtures.hpp"

using namespace qwalk;

namespace {

// 4^m / (m/2) by repeated integer multiplication, m = 2 log2 N.
long double circuit_oracle(int n) {
  int m = 0;
  for (int v = n; v > 1; v /= 2) m += 2;
  long double p = 1.0L;
  for (int i = 0; i < m; ++i) p *= 4.0L;
  return p / (m / 2.0L);
}

}  // namespace

TEST_CASE("published figures") {
  const CostReport four = cost_report(4, 1);
  CHECK(four.m == 4);
  CHECK(four.walkless_stages_per_step == 3);
  CHECK(four.circuit_stages_per_step == 128.0);
  CHECK(four.circuit_numerator == 128);
  CHECK(four.circuit_denominator == 1);

  const CostReport two = cost_report(2, 1);
  CHECK(two.m == 2);
  CHECK(two.walkless_stages_per_step == 1);
  CHECK(two.circuit_stages_per_step == 16.0);
}

TEST_CASE("both circuit formulas agree up to N = 1024") {
  for (int n = 2; n <= 1024; n *= 2) {
    const CostReport r = cost_report(n, 10);
    CHECK(r.formulas_agree);
    CHECK(r.circuit_stages_per_step == r.circuit_stages_alt);
    const long double want = circuit_oracle(n);
    CHECK(std::abs(static_cast<long double>(r.circuit_stages_per_step) - want) <=
          want * 1e-15L);
    CHECK(static_cast<long double>(r.circuit_numerator) / r.circuit_denominator ==
          doctest::Approx(static_cast<double>(want)));
    CHECK(r.walkless_stages_per_step == n - 1);
    CHECK(r.walkless_total == 10 * (n - 1));
  }
}

TEST_CASE("speedup grows with N") {
  double prev = 0.0;
  for (int n = 2; n <= 1024; n *= 2) {
    const double s = cost_report(n, 1).speedup;
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("walkless count matches the emitted schedules") {
  Rng rng(1);
  for (int n : {2, 4, 8, 16, 32}) {
    const PulseSchedule s = emit_schedule(csd_decompose(random_unitary(n, rng)));
    CHECK(static_cast<std::int64_t>(s.stages.size()) ==
          cost_report(n, 1).walkless_stages_per_step);
  }
}

TEST_CASE("errors") {
  for (int n : {0, 1, 3, 6, 1000}) {
    try {
      cost_report(n, 1);
      FAIL("expected NotPowerOfTwo");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::NotPowerOfTwo);
    }
  }
}

TEST_CASE("report formats") {
  const CostReport r = cost_report(4, 3);
  const auto j = nlohmann::json::parse(cost_report_json(r));
  CHECK(j["walkless_stages_per_step"] == 3);
  CHECK(j["circuit_stages_per_step"] == 128.0);
  CHECK(j["walkless_total"] == 9);
  CHECK(j["formulas_agree"] == true);
  const std::string table = cost_report_table(r);
  CHECK(table.find("128") != std::string::npos);
  CHECK(table.find("384") != std::string::npos);
}
