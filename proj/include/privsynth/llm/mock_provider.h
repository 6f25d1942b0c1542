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

#ifndef PRIVSYNTH_LLM_MOCK_PROVIDER_H_
#define PRIVSYNTH_LLM_MOCK_PROVIDER_H_

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privsynth/llm/provider.h"

namespace privsynth::llm {

// Feature-hashed unigram counts over LexicalTokens, L2-normalized.
Embedding HashedEmbedding(std::string_view text, int dim);

struct MockCall {
  std::string task;
  std::string prompt;
  std::map<std::string, std::string> vars;
};

// Offline provider. A completion is resolved in this order: exact prompt
// table, per-task handler, built-in simulated responder (when enabled);
// otherwise PROVIDER_ERROR. Unless a test installs a stateful handler, the
// reply is a pure function of the request, so results do not depend on call
// interleaving. Every call is appended to a log for ordering assertions.
class MockProvider : public LlmProvider {
 public:
  using Handler =
      std::function<absl::StatusOr<std::string>(const GenerationRequest&)>;
  using EmbedHandler =
      std::function<absl::StatusOr<Embedding>(const std::string&)>;

  struct Options {
    bool simulate = true;
    int embedding_dim = 64;
  };

  MockProvider() : MockProvider(Options{}) {}
  explicit MockProvider(Options options);

  void SetResponse(std::string prompt, std::string response);
  void SetTaskHandler(std::string task, Handler handler);
  void SetTaskResponse(std::string task, std::string response);
  // Replies in order; the last reply repeats once the script runs out.
  void SetTaskScript(std::string task, std::vector<std::string> replies);
  void FailTask(std::string task, absl::Status status);

  void SetEmbedding(std::string text, Embedding vector);
  void SetEmbedHandler(EmbedHandler handler);
  void FailEmbeddings(absl::Status status);

  absl::StatusOr<std::string> Complete(
      const GenerationRequest& request) override;
  absl::StatusOr<std::vector<Embedding>> Embed(
      const std::vector<std::string>& texts) override;
  std::string Name() const override { return "mock"; }

  std::vector<MockCall> calls() const;
  size_t CallCount(std::string_view task) const;
  size_t TotalCalls() const;
  size_t embed_calls() const;
  void ClearCalls();

 private:
  Handler FindHandler(const std::string& task) const;

  Options options_;
  mutable std::mutex mu_;
  std::map<std::string, std::string> exact_;
  std::map<std::string, Handler> handlers_;
  std::map<std::string, Embedding> embeddings_;
  EmbedHandler embed_handler_;
  absl::Status embed_failure_;
  std::vector<MockCall> calls_;
  size_t embed_calls_ = 0;
};

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_MOCK_PROVIDER_H_
