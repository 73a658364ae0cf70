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

#include "qwalk/error.hpp"

namespace qwalk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RemovalNotPresent: return "RemovalNotPresent";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InitialAmplitudeOnIsolatedState:
      return "InitialAmplitudeOnIsolatedState";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::BadBlockSize: return "BadBlockSize";
    case ErrorCode::IndexCollision: return "IndexCollision";
    case ErrorCode::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorCode::TransportOutOfRange: return "TransportOutOfRange";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::EquivalenceViolation:
    case ErrorCode::NotUnitary:
    case ErrorCode::IndexCollision:
      return true;
    default:
      return false;
  }
}

}  // namespace qwalk
