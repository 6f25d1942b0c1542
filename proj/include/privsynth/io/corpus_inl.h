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

#ifndef PRIVSYNTH_IO_CORPUS_INL_H_
#define PRIVSYNTH_IO_CORPUS_INL_H_

#include <string>
#include <utility>

#include "privsynth/io/corpus.h"

namespace privsynth::io {

namespace corpus_internal {
void LogSkipped(const std::string& path, size_t line_no,
                const absl::Status& status);
}  // namespace corpus_internal

template <typename Decode>
auto ReadJsonLines(const std::string& path, Decode&& decode, ReadStats* stats)
    -> absl::StatusOr<std::vector<typename decltype(decode(
        std::declval<const Json&>()))::value_type>> {
  using T = typename decltype(decode(std::declval<const Json&>()))::value_type;
  std::vector<T> out;
  ReadStats local;
  ReadStats& s = stats != nullptr ? *stats : local;
  absl::Status status =
      ForEachLine(path, [&](size_t line_no, std::string_view line) {
        ++s.lines;
        absl::StatusOr<Json> json = ParseJson(line);
        absl::StatusOr<T> item = json.ok() ? decode(*json)
                                           : absl::StatusOr<T>(json.status());
        if (!item.ok()) {
          s.skipped_lines.push_back(line_no);
          corpus_internal::LogSkipped(path, line_no, item.status());
          return;
        }
        ++s.parsed;
        out.push_back(*std::move(item));
      });
  if (!status.ok()) return status;
  return out;
}

}  // namespace privsynth::io

#endif  // PRIVSYNTH_IO_CORPUS_INL_H_
