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

#include "privsynth/core/json_codec.h"

#include <exception>

#include "fmt/format.h"
#include "privsynth/core/status.h"

namespace privsynth {
namespace {

absl::Status SchemaError(std::string_view type, const std::exception& e) {
  return MakeError(ErrorCode::kParseError,
                   fmt::format("malformed {}: {}", type, e.what()));
}

template <typename T>
absl::StatusOr<std::vector<T>> DecodeArray(const Json& array) {
  if (!array.is_array()) {
    return MakeError(ErrorCode::kParseError, "expected array");
  }
  std::vector<T> out;
  out.reserve(array.size());
  for (const Json& item : array) {
    absl::StatusOr<T> value = JsonCodec<T>::FromJson(item);
    if (!value.ok()) return value.status();
    out.push_back(*std::move(value));
  }
  return out;
}

Json OptionalString(const std::optional<std::string>& value) {
  return value.has_value() ? Json(*value) : Json(nullptr);
}

std::optional<std::string> ReadOptionalString(const Json& json,
                                              const std::string& key) {
  auto it = json.find(key);
  if (it == json.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

}  // namespace

Json JsonCodec<Profile>::ToJson(const Profile& p) {
  Json j;
  j["first_name"] = p.first_name;
  j["last_name"] = p.last_name;
  j["sex"] = p.sex;
  j["ethnicity"] = p.ethnicity;
  j["citizenship"] = p.citizenship;
  j["date_of_birth"] =
      p.date_of_birth ? Json(p.date_of_birth->ToString()) : Json(nullptr);
  j["age"] = p.age ? Json(*p.age) : Json(nullptr);
  j["id_type"] = p.id_type;
  j["id_number"] = p.id_number;
  j["passport_number"] = p.passport_number;
  j["phone_number"] = p.phone_number;
  j["email"] = p.email;
  j["user_handle"] = p.user_handle;
  j["url"] = p.url;
  j["life_event"] = p.life_event;
  return j;
}

absl::StatusOr<Profile> JsonCodec<Profile>::FromJson(const Json& j) {
  try {
    Profile p;
    p.first_name = j.at("first_name").get<std::string>();
    p.last_name = j.value("last_name", "");
    p.sex = j.value("sex", "");
    p.ethnicity = j.value("ethnicity", "");
    p.citizenship = j.value("citizenship", "");
    if (auto dob = ReadOptionalString(j, "date_of_birth")) {
      absl::StatusOr<CalendarDate> date = CalendarDate::Parse(*dob);
      if (!date.ok()) return date.status();
      p.date_of_birth = *date;
    }
    if (auto it = j.find("age"); it != j.end() && !it->is_null()) {
      p.age = it->get<int>();
    }
    p.id_type = j.value("id_type", "");
    p.id_number = j.value("id_number", "");
    p.passport_number = j.value("passport_number", "");
    p.phone_number = j.value("phone_number", "");
    p.email = j.value("email", "");
    p.user_handle = j.value("user_handle", "");
    p.url = j.value("url", "");
    if (auto it = j.find("life_event"); it != j.end() && !it->is_null()) {
      p.life_event = it->get<AttributeMap>();
    }
    return p;
  } catch (const std::exception& e) {
    return SchemaError("profile", e);
  }
}

Json JsonCodec<Record>::ToJson(const Record& r) {
  Json j;
  j["id"] = r.id;
  j["text"] = r.text;
  j["record_type"] = r.record_type;
  j["background_context"] = r.background_context;
  j["format_desc"] = r.format_desc;
  j["profile"] = JsonCodec<Profile>::ToJson(r.profile);
  j["attributes"] = r.attributes;
  Json groups = Json::array();
  for (const AttributeGroup& group : r.grouped_attributes) {
    groups.push_back({{"group_label", group.label},
                      {"attribute_keys", group.keys}});
  }
  j["grouped_attributes"] = std::move(groups);
  j["category"] = OptionalString(r.category);
  j["generator_id"] = r.generator_id;
  return j;
}

absl::StatusOr<Record> JsonCodec<Record>::FromJson(const Json& j) {
  try {
    Record r;
    r.id = j.at("id").get<std::string>();
    r.text = j.at("text").get<std::string>();
    r.record_type = j.value("record_type", "");
    r.background_context = j.value("background_context", "");
    r.format_desc = j.value("format_desc", "");
    absl::StatusOr<Profile> profile =
        JsonCodec<Profile>::FromJson(j.at("profile"));
    if (!profile.ok()) return profile.status();
    r.profile = *std::move(profile);
    r.attributes = j.at("attributes").get<AttributeMap>();
    if (auto it = j.find("grouped_attributes");
        it != j.end() && !it->is_null()) {
      for (const Json& group : *it) {
        r.grouped_attributes.push_back(
            {group.at("group_label").get<std::string>(),
             group.at("attribute_keys").get<std::vector<std::string>>()});
      }
    }
    r.category = ReadOptionalString(j, "category");
    r.generator_id = j.value("generator_id", "");
    return r;
  } catch (const std::exception& e) {
    return SchemaError("record", e);
  }
}

Json JsonCodec<SanitizationTarget>::ToJson(const SanitizationTarget& t) {
  Json members = Json::array();
  for (const auto& [key, value] : t.members) {
    members.push_back({{"key", key}, {"value", value}});
  }
  return {{"key", t.key},
          {"value", t.value},
          {"label", std::string(LabelName(t.label))},
          {"is_group", t.is_group},
          {"weight", t.weight},
          {"members", std::move(members)}};
}

absl::StatusOr<SanitizationTarget> JsonCodec<SanitizationTarget>::FromJson(
    const Json& j) {
  try {
    SanitizationTarget t;
    t.key = j.at("key").get<std::string>();
    t.value = j.at("value").get<std::string>();
    absl::StatusOr<SanitizationLabel> label =
        ParseLabel(j.at("label").get<std::string>());
    if (!label.ok()) return label.status();
    t.label = *label;
    t.is_group = j.value("is_group", false);
    t.weight = j.value("weight", 0.0);
    if (auto it = j.find("members"); it != j.end()) {
      for (const Json& member : *it) {
        t.members.emplace_back(member.at("key").get<std::string>(),
                               member.at("value").get<std::string>());
      }
    }
    return t;
  } catch (const std::exception& e) {
    return SchemaError("sanitization target", e);
  }
}

Json JsonCodec<SanitizationTriplet>::ToJson(const SanitizationTriplet& t) {
  Json targets = Json::array();
  for (const SanitizationTarget& target : t.targets) {
    targets.push_back(JsonCodec<SanitizationTarget>::ToJson(target));
  }
  return {{"record", JsonCodec<Record>::ToJson(t.record)},
          {"final_instruction", t.final_instruction},
          {"sanitized_text", t.sanitized_text},
          {"targets", std::move(targets)},
          {"retention", t.retention},
          {"per_target_instructions", t.per_target_instructions},
          {"noop_targets", t.noop_targets}};
}

absl::StatusOr<SanitizationTriplet> JsonCodec<SanitizationTriplet>::FromJson(
    const Json& j) {
  try {
    SanitizationTriplet t;
    absl::StatusOr<Record> record = JsonCodec<Record>::FromJson(j.at("record"));
    if (!record.ok()) return record.status();
    t.record = *std::move(record);
    t.final_instruction = j.at("final_instruction").get<std::string>();
    t.sanitized_text = j.at("sanitized_text").get<std::string>();
    absl::StatusOr<std::vector<SanitizationTarget>> targets =
        DecodeArray<SanitizationTarget>(j.at("targets"));
    if (!targets.ok()) return targets.status();
    t.targets = *std::move(targets);
    t.retention = j.at("retention").get<std::vector<std::string>>();
    t.per_target_instructions =
        j.value("per_target_instructions", std::map<std::string, std::string>{});
    t.noop_targets = j.value("noop_targets", std::vector<std::string>{});
    return t;
  } catch (const std::exception& e) {
    return SchemaError("triplet", e);
  }
}

Json JsonCodec<LeakReport>::ToJson(const LeakReport& r) {
  Json per_attribute = Json::object();
  for (const auto& [key, type] : r.per_attribute) {
    per_attribute[key] = std::string(LeakTypeName(type));
  }
  Json retention = Json::object();
  for (const auto& [key, outcome] : r.retention_per_attribute) {
    retention[key] = std::string(RetentionName(outcome));
  }
  Json predictions = Json::object();
  for (const auto& [key, p] : r.predictions) {
    predictions[key] = {{"sanitized", OptionalString(p.sanitized)},
                        {"original", OptionalString(p.original)}};
  }
  return {{"record_id", r.record_id},
          {"category", OptionalString(r.category)},
          {"per_attribute", std::move(per_attribute)},
          {"retention_per_attribute", std::move(retention)},
          {"successful_record", r.successful_record},
          {"full_successful_record", r.full_successful_record},
          {"predictions", std::move(predictions)},
          {"indeterminate", r.indeterminate},
          {"error", r.error}};
}

absl::StatusOr<LeakReport> JsonCodec<LeakReport>::FromJson(const Json& j) {
  try {
    LeakReport r;
    r.record_id = j.value("record_id", "");
    r.category = ReadOptionalString(j, "category");
    for (const auto& [key, value] : j.at("per_attribute").items()) {
      absl::StatusOr<LeakType> type = ParseLeakType(value.get<std::string>());
      if (!type.ok()) return type.status();
      r.per_attribute[key] = *type;
    }
    for (const auto& [key, value] : j.at("retention_per_attribute").items()) {
      absl::StatusOr<RetentionOutcome> outcome =
          ParseRetention(value.get<std::string>());
      if (!outcome.ok()) return outcome.status();
      r.retention_per_attribute[key] = *outcome;
    }
    if (auto it = j.find("predictions"); it != j.end()) {
      for (const auto& [key, value] : it->items()) {
        r.predictions[key] = {ReadOptionalString(value, "sanitized"),
                              ReadOptionalString(value, "original")};
      }
    }
    r.successful_record = j.value("successful_record", false);
    r.full_successful_record = j.value("full_successful_record", false);
    r.indeterminate = j.value("indeterminate", false);
    r.error = j.value("error", "");
    return r;
  } catch (const std::exception& e) {
    return SchemaError("leak report", e);
  }
}

std::string DumpJsonLine(const Json& json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::replace);
}

std::string DumpJsonPretty(const Json& json) {
  return json.dump(2, ' ', false, Json::error_handler_t::replace);
}

absl::StatusOr<Json> ParseJson(std::string_view text) {
  Json json = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) {
    return MakeError(ErrorCode::kParseError, "invalid JSON");
  }
  return json;
}

}  // namespace privsynth
