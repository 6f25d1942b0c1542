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

#include "privsynth/llm/provider.h"

#include <cmath>

#include "privsynth/core/status.h"

namespace privsynth::llm {

absl::Status ValidateRequest(const GenerationRequest& request) {
  if (request.max_tokens <= 0) {
    return MakeError(ErrorCode::kInvalidArgument, "max_tokens must be > 0");
  }
  if (!std::isfinite(request.temperature) || request.temperature < 0.0) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "temperature must be finite and >= 0");
  }
  return absl::OkStatus();
}

absl::Status ProviderConfig::Validate() const {
  if (max_retries < 0) {
    return MakeError(ErrorCode::kConfigError, "max_retries must be >= 0");
  }
  if (max_in_flight < 1) {
    return MakeError(ErrorCode::kConfigError, "max_in_flight must be >= 1");
  }
  if (backoff_factor < 1.0) {
    return MakeError(ErrorCode::kConfigError, "backoff_factor must be >= 1");
  }
  if (!endpoint.starts_with("http://") && !endpoint.starts_with("https://")) {
    return MakeError(ErrorCode::kConfigError,
                     "endpoint must start with http:// or https://");
  }
  if (timeout.count() <= 0) {
    return MakeError(ErrorCode::kConfigError, "timeout must be positive");
  }
  return absl::OkStatus();
}

}  // namespace privsynth::llm
