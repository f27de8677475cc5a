// Copyright 2026 The Authors.
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

#include "matinv/error.hpp"

namespace matinv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kEmptyBases: return "EmptyBases";
    case ErrorCode::kExchangeAxiomViolation: return "ExchangeAxiomViolation";
    case ErrorCode::kZeroMatrix: return "ZeroMatrix";
    case ErrorCode::kColoopDeletion: return "ColoopDeletion";
    case ErrorCode::kLoopContraction: return "LoopContraction";
    case ErrorCode::kDegenerateTerminal: return "DegenerateTerminal";
    case ErrorCode::kLoopParallel: return "LoopParallel";
    case ErrorCode::kColoopSeries: return "ColoopSeries";
    case ErrorCode::kHasLoops: return "HasLoops";
    case ErrorCode::kHasColoops: return "HasColoops";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kVolumeCertificateFailure: return "VolumeCertificateFailure";
    case ErrorCode::kNotMatroidal: return "NotMatroidal";
    case ErrorCode::kDimComponentMismatch: return "DimComponentMismatch";
    case ErrorCode::kGroundSetTooSmall: return "GroundSetTooSmall";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kFlatCountMismatch: return "FlatCountMismatch";
    case ErrorCode::kCoordinateSubgrassmannian:
      return "CoordinateSubgrassmannian";
    case ErrorCode::kNotComputable: return "NotComputable";
    case ErrorCode::kTooManyUnknowns: return "TooManyUnknowns";
    case ErrorCode::kInconsistentSum: return "InconsistentSum";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kNotPointed: return "NotPointed";
    case ErrorCode::kNotLaurent: return "NotLaurent";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace matinv
