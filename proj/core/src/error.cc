// Copyright 2026 The eon-spectra Authors
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

#include "eon/error.h"

namespace eon {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kValidation:
      return "validation";
    case ErrorCode::kNoPath:
      return "no-path";
    case ErrorCode::kIndex:
      return "index";
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kDegenerateInput:
      return "degenerate-input";
    case ErrorCode::kInstanceTooLarge:
      return "instance-too-large";
    case ErrorCode::kCapExceeded:
      return "cap-exceeded";
    case ErrorCode::kImproperColoring:
      return "improper-coloring";
    case ErrorCode::kCoverageMismatch:
      return "coverage-mismatch";
    case ErrorCode::kDomain:
      return "domain";
    case ErrorCode::kInvariant:
      return "invariant";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + " error: " +
                         message),
      code_(code) {}

}  // namespace eon
