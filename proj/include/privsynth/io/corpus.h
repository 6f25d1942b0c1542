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

#ifndef PRIVSYNTH_IO_CORPUS_H_
#define PRIVSYNTH_IO_CORPUS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privsynth/core/json_codec.h"
#include "privsynth/core/types.h"

namespace privsynth::io {

struct ReadStats {
  size_t lines = 0;
  size_t parsed = 0;
  // 1-based line numbers of skipped lines.
  std::vector<size_t> skipped_lines;
};

// Calls `fn` for every non-blank line. IO_ERROR if the file cannot be read.
absl::Status ForEachLine(
    const std::string& path,
    const std::function<void(size_t line_no, std::string_view line)>& fn);

// Lines that do not decode as `T` are skipped and logged with their line
// number.
template <typename Decode>
auto ReadJsonLines(const std::string& path, Decode&& decode,
                   ReadStats* stats = nullptr)
    -> absl::StatusOr<std::vector<typename decltype(decode(
        std::declval<const Json&>()))::value_type>>;

absl::StatusOr<std::vector<Record>> ReadCorpus(const std::string& path,
                                               ReadStats* stats = nullptr);
absl::StatusOr<std::vector<SanitizationTriplet>> ReadTriplets(
    const std::string& path, ReadStats* stats = nullptr);

// Writes to a temporary file next to `path` and renames it into place, so a
// failed write never leaves a partial file at `path`.
absl::Status WriteFileAtomic(const std::string& path, std::string_view data);

// One compact JSON object per line. Returns the number of lines written.
absl::StatusOr<size_t> WriteJsonLines(const std::string& path,
                                      std::span<const Json> values);

template <typename T>
absl::StatusOr<size_t> WriteCorpus(std::span<const T> items,
                                   const std::string& path) {
  std::vector<Json> values;
  values.reserve(items.size());
  for (const T& item : items) values.push_back(JsonCodec<T>::ToJson(item));
  return WriteJsonLines(path, values);
}

absl::StatusOr<std::vector<Json>> ReadJsonValues(const std::string& path,
                                                 ReadStats* stats = nullptr);

}  // namespace privsynth::io

#include "privsynth/io/corpus_inl.h"  // IWYU pragma: export

#endif  // PRIVSYNTH_IO_CORPUS_H_
