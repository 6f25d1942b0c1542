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

#ifndef PRIVSYNTH_LLM_HTTP_PROVIDER_H_
#define PRIVSYNTH_LLM_HTTP_PROVIDER_H_

#include <string>
#include <vector>

#include "privsynth/llm/provider.h"

namespace privsynth::llm {

// OpenAI-compatible chat-completion and embedding client. Connection
// failures, timeouts, HTTP 429 and 5xx map to TRANSPORT_ERROR (retried by the
// gateway); other non-200 statuses and malformed bodies to PROVIDER_ERROR.
// The bearer token is read from the environment variable named in the config
// at call time; an unset variable sends no Authorization header.
class HttpProvider : public LlmProvider {
 public:
  explicit HttpProvider(ProviderConfig config);

  absl::StatusOr<std::string> Complete(
      const GenerationRequest& request) override;
  absl::StatusOr<std::vector<Embedding>> Embed(
      const std::vector<std::string>& texts) override;
  std::string Name() const override;

 private:
  absl::StatusOr<std::string> Post(const std::string& path,
                                   const std::string& body) const;

  ProviderConfig config_;
};

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_HTTP_PROVIDER_H_
