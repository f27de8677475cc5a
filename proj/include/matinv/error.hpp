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

#ifndef MATINV_ERROR_HPP_
#define MATINV_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matinv {

// Every failure the core can report. The numeric values are part of the C
// API (see matinv.h) and must stay stable.
enum class ErrorCode : int {
  kInvalidInput = 1,
  kParse = 2,
  kEmptyBases = 3,
  kExchangeAxiomViolation = 4,
  kZeroMatrix = 5,
  kColoopDeletion = 6,
  kLoopContraction = 7,
  kDegenerateTerminal = 8,
  kLoopParallel = 9,
  kColoopSeries = 10,
  kHasLoops = 11,
  kHasColoops = 12,
  kGroundSetTooLarge = 13,
  kNotConnected = 14,
  kVolumeCertificateFailure = 15,
  kNotMatroidal = 16,
  kDimComponentMismatch = 17,
  kGroundSetTooSmall = 18,
  kPreconditionViolated = 19,
  kFlatCountMismatch = 20,
  kCoordinateSubgrassmannian = 21,
  kNotComputable = 22,
  kTooManyUnknowns = 23,
  kInconsistentSum = 24,
  kNotABasis = 25,
  kNotPointed = 26,
  kNotLaurent = 27,
  kInternal = 28,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace matinv

#endif  // MATINV_ERROR_HPP_
