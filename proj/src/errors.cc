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

#include "torelli/errors.h"

namespace torelli {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDegreeZero: return "DegreeZero";
    case ErrorCode::kDivideByZero: return "DivideByZero";
    case ErrorCode::kCtxMismatch: return "CtxMismatch";
    case ErrorCode::kWrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kNonSplitDenominator: return "NonSplitDenominator";
    case ErrorCode::kWrongDegree: return "WrongDegree";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kDuplicateBranchPoint: return "DuplicateBranchPoint";
    case ErrorCode::kZeroResidue: return "ZeroResidue";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kNonGenericB: return "NonGenericB";
    case ErrorCode::kDegenerateCurve: return "DegenerateCurve";
    case ErrorCode::kUnsolvableConstant: return "UnsolvableConstant";
    case ErrorCode::kModelMismatch: return "ModelMismatch";
    case ErrorCode::kPoleAtBranch: return "PoleAtBranch";
    case ErrorCode::kNotInKernel: return "NotInKernel";
    case ErrorCode::kNotInSpan: return "NotInSpan";
    case ErrorCode::kDenominatorOverflow: return "DenominatorOverflow";
    case ErrorCode::kSurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::kOddAdjunction: return "OddAdjunction";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::kParseError,
            "at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

}  // namespace torelli
