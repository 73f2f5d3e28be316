// Copyright 2026 The unirel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unirel/errors.hpp"

namespace unirel {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kNegativeWeight:
            return "NegativeWeight";
        case ErrorCode::kZeroWeightForbidden:
            return "ZeroWeightForbidden";
        case ErrorCode::kSumOutOfTolerance:
            return "SumOutOfTolerance";
        case ErrorCode::kEmptyInput:
            return "EmptyInput";
        case ErrorCode::kDomainError:
            return "DomainError";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kNoConvergence:
            return "NoConvergence";
        case ErrorCode::kNegativeEigenvalue:
            return "NegativeEigenvalue";
        case ErrorCode::kSingularNegativePower:
            return "SingularNegativePower";
        case ErrorCode::kDimMismatch:
            return "DimMismatch";
        case ErrorCode::kNonRealTrace:
            return "NonRealTrace";
        case ErrorCode::kDimFactorizationMismatch:
            return "DimFactorizationMismatch";
        case ErrorCode::kNotHermitian:
            return "NotHermitian";
        case ErrorCode::kNotPositiveSemidefinite:
            return "NotPositiveSemidefinite";
        case ErrorCode::kTraceNotOne:
            return "TraceNotOne";
        case ErrorCode::kSigmaSingularForExtendedR:
            return "SigmaSingularForExtendedR";
        case ErrorCode::kCompletenessViolation:
            return "CompletenessViolation";
        case ErrorCode::kShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::kNotUnitary:
            return "NotUnitary";
        case ErrorCode::kUnknownSuite:
            return "UnknownSuite";
        case ErrorCode::kInfiniteArithmetic:
            return "InfiniteArithmetic";
        case ErrorCode::kParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {
}

}  // namespace unirel
