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

#include "qwalk/linalg.hpp"

#include <limits>

namespace qwalk {

double max_abs_diff(const MatrixXcd &a, const MatrixXcd &b) {
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const MatrixXcd &m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const MatrixXcd id = MatrixXcd::Identity(m.rows(), m.cols());
  return max_abs_diff(m.adjoint() * m, id);
}

bool is_unitary(const MatrixXcd &m, double tol) {
  return unitarity_defect(m) <= tol;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

long next_power_of_two(long n) {
  long p = 1;
  while (p < n) p <<= 1;
  return p;
}

int log2_exact(long n) {
  int m = 0;
  while ((1L << m) < n) ++m;
  return m;
}

}  // namespace qwalk
