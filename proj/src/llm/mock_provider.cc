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

#include "privsynth/llm/mock_provider.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <memory>
#include <utility>

#include "privsynth/core/random.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/llm/simulated_responder.h"

namespace privsynth::llm {

Embedding HashedEmbedding(std::string_view text, int dim) {
  Embedding v(static_cast<size_t>(dim), 0.0);
  std::vector<std::string> tokens = LexicalTokens(text);
  if (tokens.empty()) tokens.emplace_back();
  for (const std::string& token : tokens) {
    v[Fnv1a64(token) % static_cast<uint64_t>(dim)] += 1.0;
  }
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

MockProvider::MockProvider(Options options) : options_(options) {}

void MockProvider::SetResponse(std::string prompt, std::string response) {
  std::lock_guard<std::mutex> lock(mu_);
  exact_[std::move(prompt)] = std::move(response);
}

void MockProvider::SetTaskHandler(std::string task, Handler handler) {
  std::lock_guard<std::mutex> lock(mu_);
  handlers_[std::move(task)] = std::move(handler);
}

void MockProvider::SetTaskResponse(std::string task, std::string response) {
  SetTaskHandler(std::move(task),
                 [response = std::move(response)](const GenerationRequest&)
                     -> absl::StatusOr<std::string> { return response; });
}

void MockProvider::SetTaskScript(std::string task,
                                 std::vector<std::string> replies) {
  auto state = std::make_shared<std::pair<std::mutex, size_t>>();
  SetTaskHandler(std::move(task),
                 [state, replies = std::move(replies)](
                     const GenerationRequest&) -> absl::StatusOr<std::string> {
                   std::lock_guard<std::mutex> lock(state->first);
                   if (replies.empty()) {
                     return MakeError(ErrorCode::kProviderError,
                                      "empty script");
                   }
                   const size_t i = std::min(state->second, replies.size() - 1);
                   ++state->second;
                   return replies[i];
                 });
}

void MockProvider::FailTask(std::string task, absl::Status status) {
  SetTaskHandler(std::move(task),
                 [status = std::move(status)](const GenerationRequest&)
                     -> absl::StatusOr<std::string> { return status; });
}

void MockProvider::SetEmbedding(std::string text, Embedding vector) {
  std::lock_guard<std::mutex> lock(mu_);
  embeddings_[std::move(text)] = std::move(vector);
}

void MockProvider::SetEmbedHandler(EmbedHandler handler) {
  std::lock_guard<std::mutex> lock(mu_);
  embed_handler_ = std::move(handler);
}

void MockProvider::FailEmbeddings(absl::Status status) {
  std::lock_guard<std::mutex> lock(mu_);
  embed_failure_ = std::move(status);
}

MockProvider::Handler MockProvider::FindHandler(const std::string& task) const {
  auto it = handlers_.find(task);
  return it == handlers_.end() ? Handler() : it->second;
}

absl::StatusOr<std::string> MockProvider::Complete(
    const GenerationRequest& request) {
  PRIVSYNTH_RETURN_IF_ERROR(ValidateRequest(request));
  Handler handler;
  {
    std::lock_guard<std::mutex> lock(mu_);
    calls_.push_back({request.task, request.prompt, request.vars});
    if (auto it = exact_.find(request.prompt); it != exact_.end()) {
      return it->second;
    }
    handler = FindHandler(request.task);
  }
  if (handler) return handler(request);
  if (options_.simulate) return SimulateResponse(request);
  return MakeError(ErrorCode::kProviderError,
                   StrCat("mock has no response for task '",
                                request.task, "'"));
}

absl::StatusOr<std::vector<Embedding>> MockProvider::Embed(
    const std::vector<std::string>& texts) {
  EmbedHandler handler;
  std::vector<std::optional<Embedding>> fixed(texts.size());
  {
    std::lock_guard<std::mutex> lock(mu_);
    ++embed_calls_;
    if (!embed_failure_.ok()) return embed_failure_;
    handler = embed_handler_;
    for (size_t i = 0; i < texts.size(); ++i) {
      if (auto it = embeddings_.find(texts[i]); it != embeddings_.end()) {
        fixed[i] = it->second;
      }
    }
  }
  std::vector<Embedding> out;
  out.reserve(texts.size());
  for (size_t i = 0; i < texts.size(); ++i) {
    if (fixed[i].has_value()) {
      out.push_back(*std::move(fixed[i]));
    } else if (handler) {
      PRIVSYNTH_ASSIGN_OR_RETURN(Embedding v, handler(texts[i]));
      out.push_back(std::move(v));
    } else {
      out.push_back(HashedEmbedding(texts[i], options_.embedding_dim));
    }
  }
  return out;
}

std::vector<MockCall> MockProvider::calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

size_t MockProvider::CallCount(std::string_view task) const {
  std::lock_guard<std::mutex> lock(mu_);
  size_t n = 0;
  for (const MockCall& call : calls_) {
    if (call.task == task) ++n;
  }
  return n;
}

size_t MockProvider::TotalCalls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_.size();
}

size_t MockProvider::embed_calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return embed_calls_;
}

void MockProvider::ClearCalls() {
  std::lock_guard<std::mutex> lock(mu_);
  calls_.clear();
  embed_calls_ = 0;
}

}  // namespace privsynth::llm
