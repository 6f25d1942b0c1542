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

#ifndef PRIVSYNTH_LLM_PROVIDER_H_
#define PRIVSYNTH_LLM_PROVIDER_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace privsynth::llm {

struct GenerationRequest {
  std::string prompt;
  int max_tokens = 1024;
  double temperature = 0.7;
  std::optional<uint64_t> seed;
  // Prompt family ("profile", "judge", ...) and the variables the prompt was
  // rendered from. Remote providers only see `prompt`; the offline mock
  // routes on these.
  std::string task;
  std::map<std::string, std::string> vars;
};

// Precondition check shared by every provider: max_tokens > 0,
// temperature >= 0 and finite.
absl::Status ValidateRequest(const GenerationRequest& request);

using Embedding = std::vector<double>;

// Backend boundary. Implementations report retryable failures as
// TRANSPORT_ERROR and everything else as PROVIDER_ERROR; retrying and output
// validation live in Gateway.
class LlmProvider {
 public:
  virtual ~LlmProvider() = default;

  virtual absl::StatusOr<std::string> Complete(
      const GenerationRequest& request) = 0;

  // Raw vectors, not necessarily normalized.
  virtual absl::StatusOr<std::vector<Embedding>> Embed(
      const std::vector<std::string>& texts) = 0;

  virtual std::string Name() const = 0;
};

struct ProviderConfig {
  std::string endpoint = "http://localhost:8000";
  std::string model_name = "gpt-oss-120b";
  std::string embedding_model = "text-embedding-3-small";
  std::string api_key_env = "PRIVSYNTH_API_KEY";
  std::string chat_path = "/v1/chat/completions";
  std::string embeddings_path = "/v1/embeddings";
  std::chrono::milliseconds timeout{60000};
  int max_retries = 3;
  std::chrono::milliseconds backoff_initial{1000};
  double backoff_factor = 2.0;
  int max_in_flight = 8;

  absl::Status Validate() const;
};

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_PROVIDER_H_
