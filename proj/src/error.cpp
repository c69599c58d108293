// Copyright 2026 The Volterra Lab Authors
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

#include "volterra/error.hpp"

namespace volterra {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotOnSimplex: return "NotOnSimplex";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kMissingPair: return "MissingPair";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptyPart: return "EmptyPart";
    case ErrorCode::kIncompleteIntra: return "IncompleteIntra";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUniverseMismatch: return "UniverseMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kExactBlowup: return "ExactBlowup";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kUndecidedAtCap: return "UndecidedAtCap";
    case ErrorCode::kNotInM: return "NotInM";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace volterra
