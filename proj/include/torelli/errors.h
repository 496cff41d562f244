// Copyright 2026 The Torelli Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORELLI_ERRORS_H_
#define TORELLI_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torelli {

enum class ErrorCode {
  kNotPrime,
  kDegreeZero,
  kDivideByZero,
  kCtxMismatch,
  kWrongCharacteristic,
  kBothZero,
  kNonSplitDenominator,
  kWrongDegree,
  kNotSquarefree,
  kDuplicateBranchPoint,
  kZeroResidue,
  kFieldTooSmall,
  kNonGenericB,
  kDegenerateCurve,
  kUnsolvableConstant,
  kModelMismatch,
  kPoleAtBranch,
  kNotInKernel,
  kNotInSpan,
  kDenominatorOverflow,
  kSurfaceMismatch,
  kOddAdjunction,
  kParseError,
  kInvalidArgument,
};

// Stable name used in CLI output and JSON ("NotPrime", "FieldTooSmall", ...).
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the byte offset into the input string.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message);

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace torelli

#endif  // TORELLI_ERRORS_H_
