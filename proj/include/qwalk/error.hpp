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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwalk {

enum class ErrorCode {
  // graph-core
  RemovalNotPresent,
  NodeOutOfRange,
  ParseError,
  ValidationError,
  // state-space
  IndexOutOfRange,
  EmptyGraph,
  // coin-forge
  DimensionUnsupported,
  // walk-engine
  DimensionMismatch,
  InitialAmplitudeOnIsolatedState,
  EquivalenceViolation,
  // csd-compiler
  NotUnitary,
  NotPowerOfTwo,
  BadBlockSize,
  IndexCollision,
  // lattice-sim
  SiteOutOfRange,
  TransportOutOfRange,
  // cli
  Io,
};

std::string_view to_string(ErrorCode code);

/**
 * True for errors that signal a violated numerical contract (a non-unitary
 * operator, a mode mismatch) as opposed to malformed input.
 */
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qwalk
