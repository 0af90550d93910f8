// Copyright 2026  The artamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "artamp/error.hpp"

namespace artamp {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kFileNotFound: return "file-not-found";
    case ErrorCode::kMalformedHeader: return "malformed-header";
    case ErrorCode::kUnsupportedEncoding: return "unsupported-encoding";
    case ErrorCode::kUnwritablePath: return "unwritable-path";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kZeroEnergy: return "zero-energy";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kDegenerateInput: return "degenerate-input";
    case ErrorCode::kTooShort: return "too-short";
    case ErrorCode::kMissingReference: return "missing-reference";
    case ErrorCode::kProcessFailure: return "process-failure";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kMalformedOutput: return "malformed-output";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kUnknownKey: return "unknown-key";
    case ErrorCode::kMissingId: return "missing-id";
    case ErrorCode::kSingleClass: return "single-class";
    case ErrorCode::kCoefficientDegeneracy: return "coefficient-degeneracy";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kMissingClass: return "missing-class";
    case ErrorCode::kConfig: return "invalid-config";
    case ErrorCode::kHashMismatch: return "hash-mismatch";
    case ErrorCode::kIo: return "io-error";
  }
  return "unknown";
}

void RethrowInStage(const std::string& stage, const Error& e) {
  throw Error(e.code(), stage + ": " + e.what());
}

}  // namespace artamp
