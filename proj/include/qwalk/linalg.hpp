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

#include <Eigen/Dense>
#include <complex>

namespace qwalk {

using complex_t = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;
using Matrix2cd = Eigen::Matrix2cd;

/** Max-entry norm of a - b. Both operands must have the same shape. */
double max_abs_diff(const MatrixXcd &a, const MatrixXcd &b);

/** ‖m†m − I‖_max; infinity for non-square input. */
double unitarity_defect(const MatrixXcd &m);

bool is_unitary(const MatrixXcd &m, double tol = 1e-10);

bool is_power_of_two(long n);

/** Smallest power of two ≥ n (n ≥ 1). */
long next_power_of_two(long n);

/** log2 of a power of two. */
int log2_exact(long n);

}  // namespace qwalk
