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

#include "privsynth/llm/http_provider.h"

#include <cstdlib>
#include <utility>

#include "httplib.h"
#include "nlohmann/json.hpp"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"

namespace privsynth::llm {
namespace {

using Json = nlohmann::json;

}  // namespace

HttpProvider::HttpProvider(ProviderConfig config)
    : config_(std::move(config)) {}

std::string HttpProvider::Name() const {
  return StrCat("http:", config_.model_name);
}

absl::StatusOr<std::string> HttpProvider::Post(const std::string& path,
                                               const std::string& body) const {
  httplib::Client client(config_.endpoint);
  const auto seconds = config_.timeout.count() / 1000;
  const auto micros = (config_.timeout.count() % 1000) * 1000;
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  httplib::Headers headers;
  if (const char* key = std::getenv(config_.api_key_env.c_str());
      key != nullptr && *key != '\0') {
    headers.emplace("Authorization", StrCat("Bearer ", key));
  }
  httplib::Result result =
      client.Post(path.c_str(), headers, body, "application/json");
  if (!result) {
    return MakeError(ErrorCode::kTransportError,
                     StrCat("POST ", config_.endpoint, path, ": ",
                                  httplib::to_string(result.error())));
  }
  const int status = result->status;
  if (status == 429 || status >= 500) {
    return MakeError(ErrorCode::kTransportError,
                     StrCat("HTTP ", status, " from ", path));
  }
  if (status != 200) {
    return MakeError(ErrorCode::kProviderError,
                     StrCat("HTTP ", status, " from ", path, ": ",
                                  result->body.substr(0, 200)));
  }
  return result->body;
}

absl::StatusOr<std::string> HttpProvider::Complete(
    const GenerationRequest& request) {
  PRIVSYNTH_RETURN_IF_ERROR(ValidateRequest(request));
  Json body = {{"model", config_.model_name},
               {"messages", Json::array({{{"role", "user"},
                                          {"content", request.prompt}}})},
               {"max_tokens", request.max_tokens},
               {"temperature", request.temperature}};
  if (request.seed.has_value()) body["seed"] = *request.seed;
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string raw,
                             Post(config_.chat_path, body.dump()));
  Json reply = Json::parse(raw, nullptr, false);
  if (reply.is_discarded()) {
    return MakeError(ErrorCode::kProviderError, "chat reply is not JSON");
  }
  try {
    const Json& content = reply.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return std::string();
    return content.get<std::string>();
  } catch (const std::exception& e) {
    return MakeError(ErrorCode::kProviderError,
                     StrCat("unexpected chat reply shape: ", e.what()));
  }
}

absl::StatusOr<std::vector<Embedding>> HttpProvider::Embed(
    const std::vector<std::string>& texts) {
  if (texts.empty()) return std::vector<Embedding>{};
  Json body = {{"model", config_.embedding_model}, {"input", texts}};
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string raw,
                             Post(config_.embeddings_path, body.dump()));
  Json reply = Json::parse(raw, nullptr, false);
  if (reply.is_discarded()) {
    return MakeError(ErrorCode::kProviderError, "embedding reply is not JSON");
  }
  try {
    std::vector<Embedding> out(texts.size());
    const Json& data = reply.at("data");
    for (size_t i = 0; i < data.size(); ++i) {
      const size_t index = data[i].value("index", i);
      if (index >= out.size()) {
        return MakeError(ErrorCode::kProviderError,
                         "embedding index out of range");
      }
      out[index] = data[i].at("embedding").get<Embedding>();
    }
    if (data.size() != texts.size()) out.resize(data.size());
    return out;
  } catch (const std::exception& e) {
    return MakeError(ErrorCode::kProviderError,
                     StrCat("unexpected embedding reply shape: ",
                                  e.what()));
  }
}

}  // namespace privsynth::llm
