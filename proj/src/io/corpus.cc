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

#include "privsynth/io/corpus.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

#include "fmt/format.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "spdlog/spdlog.h"

namespace privsynth::io {

namespace corpus_internal {
void LogSkipped(const std::string& path, size_t line_no,
                const absl::Status& status) {
  spdlog::warn("{}:{}: skipping malformed line: {}", path, line_no,
               std::string(status.message()));
}
}  // namespace corpus_internal

absl::Status ForEachLine(
    const std::string& path,
    const std::function<void(size_t, std::string_view)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorCode::kIoError,
                     fmt::format("cannot open '{}': {}", path,
                                 std::strerror(errno)));
  }
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    ConsumeSuffix(&view, "\r");
    if (IsBlank(view)) continue;
    fn(line_no, view);
  }
  if (in.bad()) {
    return MakeError(ErrorCode::kIoError,
                     fmt::format("read error in '{}'", path));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Record>> ReadCorpus(const std::string& path,
                                               ReadStats* stats) {
  return ReadJsonLines(path, &JsonCodec<Record>::FromJson, stats);
}

absl::StatusOr<std::vector<SanitizationTriplet>> ReadTriplets(
    const std::string& path, ReadStats* stats) {
  return ReadJsonLines(path, &JsonCodec<SanitizationTriplet>::FromJson, stats);
}

absl::StatusOr<std::vector<Json>> ReadJsonValues(const std::string& path,
                                                 ReadStats* stats) {
  return ReadJsonLines(
      path,
      [](const Json& j) -> absl::StatusOr<Json> {
        return absl::StatusOr<Json>(absl::in_place, j);
      },
      stats);
}

absl::Status WriteFileAtomic(const std::string& path, std::string_view data) {
  const std::string tmp = fmt::format("{}.tmp.{}", path, ::getpid());
  auto io_error = [&](std::string_view what) {
    const int err = errno;
    ::unlink(tmp.c_str());
    return MakeError(ErrorCode::kIoError,
                     fmt::format("{} '{}': {}", what, path,
                                 std::strerror(err)));
  };
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC,
                        0644);
  if (fd < 0) return io_error("cannot create temporary file for");
  size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      return io_error("write failed for");
    }
    written += static_cast<size_t>(n);
  }
  if (::fsync(fd) != 0) {
    ::close(fd);
    return io_error("fsync failed for");
  }
  if (::close(fd) != 0) return io_error("close failed for");
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    return io_error("rename failed for");
  }
  return absl::OkStatus();
}

absl::StatusOr<size_t> WriteJsonLines(const std::string& path,
                                      std::span<const Json> values) {
  std::string data;
  for (const Json& value : values) {
    data += DumpJsonLine(value);
    data.push_back('\n');
  }
  PRIVSYNTH_RETURN_IF_ERROR(WriteFileAtomic(path, data));
  return values.size();
}

}  // namespace privsynth::io
