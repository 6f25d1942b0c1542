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

#include "privsynth/core/status.h"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "absl/strings/cord.h"
#include "fmt/format.h"

namespace privsynth {
namespace {

constexpr char kPayloadUrl[] = "type.privsynth/error_code";

struct CodeInfo {
  ErrorCode code;
  std::string_view name;
  absl::StatusCode canonical;
};

constexpr std::array<CodeInfo, 16> kCodes = {{
    {ErrorCode::kUnknown, "UNKNOWN", absl::StatusCode::kUnknown},
    {ErrorCode::kInvalidArgument, "INVALID_ARGUMENT",
     absl::StatusCode::kInvalidArgument},
    {ErrorCode::kTransportError, "TRANSPORT_ERROR",
     absl::StatusCode::kUnavailable},
    {ErrorCode::kProviderError, "PROVIDER_ERROR", absl::StatusCode::kInternal},
    {ErrorCode::kEmptyResponse, "EMPTY_RESPONSE", absl::StatusCode::kDataLoss},
    {ErrorCode::kUnparseableVerdict, "UNPARSEABLE_VERDICT",
     absl::StatusCode::kDataLoss},
    {ErrorCode::kDimensionMismatch, "DIMENSION_MISMATCH",
     absl::StatusCode::kInvalidArgument},
    {ErrorCode::kParseError, "PARSE_ERROR", absl::StatusCode::kDataLoss},
    {ErrorCode::kEmptySource, "EMPTY_SOURCE",
     absl::StatusCode::kFailedPrecondition},
    {ErrorCode::kEmptyInput, "EMPTY_INPUT", absl::StatusCode::kInvalidArgument},
    {ErrorCode::kTooShort, "TOO_SHORT", absl::StatusCode::kInvalidArgument},
    {ErrorCode::kVendiFailure, "VENDI_FAILURE", absl::StatusCode::kInternal},
    {ErrorCode::kInsufficientAttributes, "INSUFFICIENT_ATTRIBUTES",
     absl::StatusCode::kFailedPrecondition},
    {ErrorCode::kUnsanitized, "UNSANITIZED", absl::StatusCode::kAborted},
    {ErrorCode::kIoError, "IO_ERROR", absl::StatusCode::kUnavailable},
    {ErrorCode::kConfigError, "CONFIG_ERROR",
     absl::StatusCode::kInvalidArgument},
}};

const CodeInfo& Lookup(ErrorCode code) {
  for (const auto& info : kCodes) {
    if (info.code == code) return info;
  }
  return kCodes[0];
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) { return Lookup(code).name; }

absl::Status MakeError(ErrorCode code, std::string_view message) {
  const CodeInfo& info = Lookup(code);
  absl::Status status(info.canonical, fmt::format("{}: {}", info.name, message));
  status.SetPayload(kPayloadUrl, absl::Cord(std::string(info.name)));
  return status;
}

ErrorCode GetErrorCode(const absl::Status& status) {
  if (status.ok()) return ErrorCode::kUnknown;
  auto payload = status.GetPayload(kPayloadUrl);
  if (!payload.has_value()) return ErrorCode::kUnknown;
  const std::string name(*payload);
  for (const auto& info : kCodes) {
    if (info.name == name) return info.code;
  }
  return ErrorCode::kUnknown;
}

absl::Status Annotate(const absl::Status& status, std::string_view context) {
  if (status.ok()) return status;
  absl::Status out(status.code(),
                   fmt::format("{}: {}", context, std::string(status.message())));
  status.ForEachPayload(
      [&out](absl::string_view url, const absl::Cord& payload) {
        out.SetPayload(url, payload);
      });
  return out;
}

}  // namespace privsynth
