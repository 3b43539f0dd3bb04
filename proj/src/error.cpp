// Copyright 2026 The ppsim Authors
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

#include "ppsim/error.hpp"

namespace ppsim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDegenerateState: return "degenerate_state";
    case ErrorCode::kNotPrimitive: return "not_primitive";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kClosureViolated: return "closure_violated";
    case ErrorCode::kInvalidGraph: return "invalid_graph";
    case ErrorCode::kArityMismatch: return "arity_mismatch";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kPeriodUnusable: return "period_unusable";
    case ErrorCode::kUnrepresentable: return "unrepresentable";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace ppsim
