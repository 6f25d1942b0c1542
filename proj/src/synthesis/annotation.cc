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

#include "privsynth/synthesis/annotation.h"

#include <set>

#include "nlohmann/json.hpp"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "spdlog/spdlog.h"

namespace privsynth::synthesis {
namespace {

using Json = nlohmann::json;

// The outermost JSON value in a reply that may carry prose or code fences.
absl::StatusOr<Json> ExtractJson(std::string_view reply, char open,
                                 char close) {
  const size_t begin = reply.find(open);
  const size_t end = reply.rfind(close);
  if (begin == std::string_view::npos || end == std::string_view::npos ||
      end < begin) {
    return MakeError(ErrorCode::kParseError, "no JSON value in reply");
  }
  Json json = Json::parse(reply.substr(begin, end - begin + 1), nullptr,
                          /*allow_exceptions=*/false);
  if (json.is_discarded()) {
    return MakeError(ErrorCode::kParseError, "reply is not valid JSON");
  }
  return json;
}

std::string ScalarText(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

AttributeMap ProfileAttributes(const Profile& p) {
  AttributeMap out;
  auto put = [&out](const char* key, const std::string& value) {
    if (!value.empty()) out[key] = value;
  };
  put("first_name", p.first_name);
  put("last_name", p.last_name);
  put("sex", p.sex);
  put("ethnicity", p.ethnicity);
  put("citizenship", p.citizenship);
  if (p.date_of_birth) put("date_of_birth", p.date_of_birth->ToString());
  if (p.age) put("age", std::to_string(*p.age));
  put("id_type", p.id_type);
  put("id_number", p.id_number);
  put("passport_number", p.passport_number);
  put("phone_number", p.phone_number);
  put("email", p.email);
  put("user_handle", p.user_handle);
  put("url", p.url);
  for (const auto& [key, value] : p.life_event) {
    if (!value.empty()) out.emplace(key, value);
  }
  return out;
}

absl::StatusOr<AttributeMap> AnnotateAttributes(
    llm::Gateway& gateway, std::string_view record_text,
    const Profile& profile, const llm::SamplingOptions& sampling) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kAnnotate, llm::templates::kAnnotate,
      {{"profile", [&] {
          std::string rendered;
          for (const auto& [k, v] : ProfileAttributes(profile)) {
            StrAppend(&rendered, "- ", k, ": ", v, "\n");
          }
          return rendered;
        }()},
       {"record", std::string(record_text)}},
      sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  PRIVSYNTH_ASSIGN_OR_RETURN(Json extracted, ExtractJson(reply, '{', '}'));
  if (!extracted.is_object()) {
    return MakeError(ErrorCode::kParseError,
                     "annotation reply is not a JSON object");
  }
  AttributeMap out = ProfileAttributes(profile);
  for (const auto& [raw_key, value] : extracted.items()) {
    const std::string key = SnakeCase(raw_key);
    if (key.empty() || value.is_null() || value.is_object() ||
        value.is_array()) {
      continue;
    }
    std::string text(StripWhitespace(ScalarText(value)));
    if (text.empty()) continue;
    if (auto it = out.find(key); it != out.end()) {
      if (it->second != text) {
        spdlog::debug("annotation key '{}' collides with profile; keeping "
                      "profile value",
                      key);
      }
      continue;
    }
    out.emplace(key, std::move(text));
  }
  return out;
}

absl::StatusOr<std::vector<AttributeGroup>> GroupAttributes(
    llm::Gateway& gateway, const AttributeMap& attributes,
    const llm::SamplingOptions& sampling, std::vector<std::string>* dangling) {
  if (attributes.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "no attributes to group");
  }
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kGroup, llm::templates::kGroup,
      {{"attributes", Json(attributes).dump(2)}}, sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  PRIVSYNTH_ASSIGN_OR_RETURN(Json parsed, ExtractJson(reply, '{', '}'));
  if (!parsed.is_object()) {
    return MakeError(ErrorCode::kParseError,
                     "grouping reply is not a JSON object");
  }
  std::vector<AttributeGroup> groups;
  for (const auto& [label, keys] : parsed.items()) {
    if (!keys.is_array()) {
      return MakeError(ErrorCode::kParseError,
                       StrCat("group '", label, "' is not a list of keys"));
    }
    AttributeGroup group;
    group.label = SnakeCase(label);
    std::set<std::string> seen;
    for (const Json& key : keys) {
      if (!key.is_string()) continue;
      const std::string k = key.get<std::string>();
      if (!attributes.contains(k)) {
        spdlog::warn("DANGLING_KEY: group '{}' references unknown attribute "
                     "'{}'; dropped",
                     group.label, k);
        if (dangling != nullptr) dangling->push_back(k);
        continue;
      }
      if (seen.insert(k).second) group.keys.push_back(k);
    }
    if (!group.label.empty() && !group.keys.empty()) {
      groups.push_back(std::move(group));
    }
  }
  return groups;
}

absl::StatusOr<std::string> CategorizeRecord(
    llm::Gateway& gateway, std::string_view record_text,
    std::vector<std::string>& known_categories,
    const llm::SamplingOptions& sampling) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kCategory, llm::templates::kCategory,
      {{"categories",
        known_categories.empty() ? std::string("(none yet)")
                                 : Join(known_categories, ", ")},
       {"record", std::string(record_text)}},
      sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  std::string_view label;
  for (std::string_view line : Split(reply, "\n")) {
    line = StripWhitespace(line);
    if (!line.empty()) {
      label = line;
      break;
    }
  }
  ConsumePrefix(&label, "Category Name:");
  label = StripWhitespace(label);
  ConsumeSuffix(&label, ".");
  while (label.size() >= 2 &&
         ((label.front() == '"' && label.back() == '"') ||
          (label.front() == '*' && label.back() == '*'))) {
    label = StripWhitespace(label.substr(1, label.size() - 2));
  }
  if (label.empty()) {
    return MakeError(ErrorCode::kEmptyResponse, "empty category label");
  }
  for (const std::string& existing : known_categories) {
    if (EqualsIgnoreCase(existing, label)) return existing;
  }
  known_categories.emplace_back(label);
  return std::string(label);
}

}  // namespace privsynth::synthesis
