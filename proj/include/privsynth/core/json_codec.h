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

#ifndef PRIVSYNTH_CORE_JSON_CODEC_H_
#define PRIVSYNTH_CORE_JSON_CODEC_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "privsynth/core/types.h"

namespace privsynth {

using Json = nlohmann::json;

// Maps a value type onto its JSON object form. Field names are the
// lower_snake_case type field names. FromJson reports schema problems as
// PARSE_ERROR instead of throwing.
template <typename T>
struct JsonCodec;

template <>
struct JsonCodec<Profile> {
  static Json ToJson(const Profile& profile);
  static absl::StatusOr<Profile> FromJson(const Json& json);
};

template <>
struct JsonCodec<Record> {
  static Json ToJson(const Record& record);
  static absl::StatusOr<Record> FromJson(const Json& json);
};

template <>
struct JsonCodec<SanitizationTarget> {
  static Json ToJson(const SanitizationTarget& target);
  static absl::StatusOr<SanitizationTarget> FromJson(const Json& json);
};

template <>
struct JsonCodec<SanitizationTriplet> {
  static Json ToJson(const SanitizationTriplet& triplet);
  static absl::StatusOr<SanitizationTriplet> FromJson(const Json& json);
};

template <>
struct JsonCodec<LeakReport> {
  static Json ToJson(const LeakReport& report);
  static absl::StatusOr<LeakReport> FromJson(const Json& json);
};

// Compact single-line serialization with sorted keys; invalid UTF-8 is
// replaced rather than rejected.
std::string DumpJsonLine(const Json& json);

// Pretty form used for single-object report files.
std::string DumpJsonPretty(const Json& json);

absl::StatusOr<Json> ParseJson(std::string_view text);

template <typename T>
std::string ToJsonLine(const T& value) {
  return DumpJsonLine(JsonCodec<T>::ToJson(value));
}

template <typename T>
absl::StatusOr<T> FromJsonLine(std::string_view line) {
  absl::StatusOr<Json> json = ParseJson(line);
  if (!json.ok()) return json.status();
  return JsonCodec<T>::FromJson(*json);
}

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_JSON_CODEC_H_
