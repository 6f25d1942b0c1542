// Copyright 2026 The privsynth Authors
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

#ifndef PRIVSYNTH_CORE_STATUS_H_
#define PRIVSYNTH_CORE_STATUS_H_

#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace privsynth {

// Domain error kinds. Each maps onto a canonical absl code and is also
// attached to the status as a payload so callers can branch on the exact kind.
enum class ErrorCode {
  kUnknown = 0,
  kInvalidArgument,
  kTransportError,
  kProviderError,
  kEmptyResponse,
  kUnparseableVerdict,
  kDimensionMismatch,
  kParseError,
  kEmptySource,
  kEmptyInput,
  kTooShort,
  kVendiFailure,
  kInsufficientAttributes,
  kUnsanitized,
  kIoError,
  kConfigError,
};

std::string_view ErrorCodeName(ErrorCode code);

absl::Status MakeError(ErrorCode code, std::string_view message);

// Returns kUnknown for OK statuses and for statuses not produced by MakeError.
ErrorCode GetErrorCode(const absl::Status& status);

inline bool HasErrorCode(const absl::Status& status, ErrorCode code) {
  return !status.ok() && GetErrorCode(status) == code;
}

// Prefixes the message while keeping code and payload.
absl::Status Annotate(const absl::Status& status, std::string_view context);

}  // namespace privsynth

#define PRIVSYNTH_STATUS_CONCAT_INNER_(a, b) a##b
#define PRIVSYNTH_STATUS_CONCAT_(a, b) PRIVSYNTH_STATUS_CONCAT_INNER_(a, b)

#define PRIVSYNTH_RETURN_IF_ERROR(expr)          \
  do {                                           \
    ::absl::Status privsynth_status_ = (expr);   \
    if (!privsynth_status_.ok()) {               \
      return privsynth_status_;                  \
    }                                            \
  } while (false)

#define PRIVSYNTH_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                                     \
  if (!tmp.ok()) {                                       \
    return tmp.status();                                 \
  }                                                      \
  lhs = std::move(*tmp)

#define PRIVSYNTH_ASSIGN_OR_RETURN(lhs, expr) \
  PRIVSYNTH_ASSIGN_OR_RETURN_IMPL_(           \
      PRIVSYNTH_STATUS_CONCAT_(privsynth_statusor_, __LINE__), lhs, expr)

#endif  // PRIVSYNTH_CORE_STATUS_H_
