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

#ifndef ARTAMP_ERROR_HPP_
#define ARTAMP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace artamp {

// Values are shared with the C API status codes in artamp.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kFileNotFound = 2,
  kMalformedHeader = 3,
  kUnsupportedEncoding = 4,
  kUnwritablePath = 5,
  kLengthMismatch = 6,
  kZeroEnergy = 7,
  kOutOfRange = 8,
  kDegenerateInput = 9,
  kTooShort = 10,
  kMissingReference = 11,
  kProcessFailure = 12,
  kTimeout = 13,
  kMalformedOutput = 14,
  kParse = 15,
  kDuplicateId = 16,
  kUnknownKey = 17,
  kMissingId = 18,
  kSingleClass = 19,
  kCoefficientDegeneracy = 20,
  kDimensionMismatch = 21,
  kMissingClass = 22,
  kConfig = 23,
  kHashMismatch = 24,
  kIo = 25,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Re-throws `e` with "<stage>: " prepended, keeping its code.
[[noreturn]] void RethrowInStage(const std::string& stage, const Error& e);

}  // namespace artamp

#endif  // ARTAMP_ERROR_HPP_
