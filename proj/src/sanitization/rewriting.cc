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

#include "privsynth/sanitization/rewriting.h"

#include <algorithm>
#include <set>

#include "nlohmann/json.hpp"
#include "privsynth/core/random.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "spdlog/spdlog.h"

namespace privsynth::sanitization {
namespace {

using Json = nlohmann::json;

std::string ValuesJson(const SanitizationTarget& target) {
  return Json(target.Values()).dump();
}

// Display form of the key, with member names for groups.
std::string TargetDisplay(const SanitizationTarget& target) {
  std::string out = KeyDisplayName(target.key);
  if (target.is_group && !target.members.empty()) {
    std::vector<std::string> names;
    for (const auto& [key, value] : target.members) {
      names.push_back(KeyDisplayName(key));
    }
    StrAppend(&out, " (", Join(names, ", "), ")");
  }
  return out;
}

bool HasVerbatimValue(std::string_view text, const SanitizationTarget& target) {
  for (const std::string& value : target.Values()) {
    std::string_view v = StripWhitespace(value);
    if (!v.empty() && ContainsVerbatim(text, v)) return true;
  }
  return false;
}

absl::StatusOr<Json> ExtractJsonArray(std::string_view reply) {
  const size_t begin = reply.find('[');
  const size_t end = reply.rfind(']');
  if (begin == std::string_view::npos || end == std::string_view::npos ||
      end < begin) {
    return MakeError(ErrorCode::kParseError, "no JSON array in reply");
  }
  Json json = Json::parse(reply.substr(begin, end - begin + 1), nullptr,
                          /*allow_exceptions=*/false);
  if (json.is_discarded() || !json.is_array()) {
    return MakeError(ErrorCode::kParseError, "reply is not a JSON array");
  }
  return json;
}

}  // namespace

RelevantChunks FindRelevantChunks(llm::Gateway& gateway,
                                  const SanitizationTarget& target,
                                  std::span<const Chunk> chunks,
                                  const llm::SamplingOptions& sampling) {
  RelevantChunks out;
  std::set<size_t> indices;
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (HasVerbatimValue(chunks[i].text, target)) indices.insert(i);
  }
  std::string listing;
  std::vector<std::string> texts;
  for (size_t i = 0; i < chunks.size(); ++i) {
    StrAppend(&listing, "[", i, "] ", chunks[i].text, "\n");
    texts.push_back(chunks[i].text);
  }
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kRelevantChunks, llm::templates::kRelevantChunks,
      {{"target_key", KeyDisplayName(target.key)},
       {"target_value", target.value},
       {"target_values", ValuesJson(target)},
       {"chunks", listing},
       {"chunk_texts", Json(texts).dump()}},
      sampling);
  absl::StatusOr<std::string> reply = gateway.Complete(request);
  absl::StatusOr<Json> parsed =
      reply.ok() ? ExtractJsonArray(*reply) : reply.status();
  if (!parsed.ok()) {
    spdlog::warn("relevant-chunk lookup for '{}' degraded to verbatim "
                 "matches: {}",
                 target.key, std::string(parsed.status().message()));
    out.degraded = true;
  } else {
    for (const Json& item : *parsed) {
      if (!item.is_number_integer()) continue;
      const auto index = item.get<long long>();
      if (index < 0 || static_cast<size_t>(index) >= chunks.size()) {
        spdlog::debug("ignoring out-of-range chunk index {}", index);
        continue;
      }
      indices.insert(static_cast<size_t>(index));
    }
  }
  out.indices.assign(indices.begin(), indices.end());
  return out;
}

std::vector<Span> NormalizeSpans(std::vector<Span> spans, size_t length,
                                 size_t* repaired) {
  std::vector<Span> clean;
  for (auto [start, end] : spans) {
    const auto original = std::make_pair(start, end);
    if (start > end) std::swap(start, end);
    start = std::min(start, length);
    end = std::min(end, length);
    if (std::make_pair(start, end) != original && repaired != nullptr) {
      ++*repaired;
    }
    if (start < end) clean.emplace_back(start, end);
  }
  std::sort(clean.begin(), clean.end());
  std::vector<Span> merged;
  for (const Span& s : clean) {
    if (!merged.empty() && s.first <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, s.second);
    } else {
      merged.push_back(s);
    }
  }
  return merged;
}

absl::StatusOr<SpanSet> ExtractSpans(llm::Gateway& gateway,
                                     const SanitizationTarget& target,
                                     const Chunk& chunk,
                                     const llm::SamplingOptions& sampling) {
  SpanSet out;
  out.target_key = target.key;
  out.chunk_index = chunk.index;
  std::vector<Span> spans;
  for (const std::string& value : target.Values()) {
    std::string_view v = StripWhitespace(value);
    if (v.empty()) continue;
    for (size_t pos : FindAll(chunk.text, v)) {
      spans.emplace_back(pos, pos + v.size());
    }
  }
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kExtractSpans, llm::templates::kExtractSpans,
      {{"target_key", KeyDisplayName(target.key)},
       {"target_value", target.value},
       {"target_values", ValuesJson(target)},
       {"chunk", chunk.text}},
      sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  absl::StatusOr<Json> parsed = ExtractJsonArray(reply);
  if (!parsed.ok()) {
    spdlog::warn("span reply for '{}' unparseable; keeping verbatim spans",
                 target.key);
  } else {
    for (const Json& item : *parsed) {
      if (item.is_array() && item.size() == 2 && item[0].is_number() &&
          item[1].is_number()) {
        const auto a = item[0].get<long long>();
        const auto b = item[1].get<long long>();
        const auto clamp0 = [](long long x) {
          return static_cast<size_t>(std::max(0LL, x));
        };
        if (a < 0 || b < 0) ++out.repaired;
        spans.emplace_back(clamp0(a), clamp0(b));
      } else if (item.is_string()) {
        const std::string text = item.get<std::string>();
        if (text.empty()) continue;
        for (size_t pos : FindAll(chunk.text, text)) {
          spans.emplace_back(pos, pos + text.size());
        }
      }
    }
  }
  out.spans = NormalizeSpans(std::move(spans), chunk.text.size(),
                             &out.repaired);
  if (out.repaired > 0) {
    spdlog::warn("SPAN_OUT_OF_BOUNDS: {} span(s) for '{}' in chunk {} "
                 "clamped",
                 out.repaired, target.key, chunk.index);
  }
  return out;
}

std::string DropInstruction(const SanitizationTarget& target) {
  return StrCat("Drop the information about ", TargetDisplay(target),
                " from the text");
}

std::string GroupLabelInstruction(const SanitizationTarget& target) {
  const std::string verb =
      target.label == SanitizationLabel::kDrop ? "Drop" : "Abstract";
  return StrCat(verb, " all information related to ",
                KeyDisplayName(target.key));
}

absl::StatusOr<std::optional<std::string>> BuildInstruction(
    llm::Gateway& gateway, const SanitizationTarget& target,
    std::string_view relevant_context, const llm::SamplingOptions& sampling) {
  if (target.label == SanitizationLabel::kDrop) {
    return std::optional<std::string>(DropInstruction(target));
  }
  if (IsBlank(relevant_context)) return std::optional<std::string>();
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kAbstractInstruction, llm::templates::kAbstractInstruction,
      {{"target_key", TargetDisplay(target)},
       {"target_value", target.value},
       {"context", std::string(relevant_context)}},
      sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  return std::optional<std::string>(std::string(StripWhitespace(reply)));
}

absl::StatusOr<std::string> ApplyInstruction(
    llm::Gateway& gateway, const Chunk& chunk, const SpanSet& spans,
    std::string_view instruction, const SanitizationTarget& target,
    const llm::SamplingOptions& sampling) {
  if (IsBlank(instruction)) {
    return MakeError(ErrorCode::kInvalidArgument, "empty instruction");
  }
  std::vector<std::string> span_texts;
  for (const auto& [start, end] : spans.spans) {
    span_texts.push_back(chunk.text.substr(start, end - start));
  }
  llm::SamplingOptions attempt_sampling = sampling;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (attempt > 0) {
      attempt_sampling.seed =
          DeriveSeed(sampling.seed.value_or(0), "apply-retry", attempt);
    }
    llm::GenerationRequest request = llm::MakeRequest(
        llm::tasks::kApplyInstruction, llm::templates::kApplyInstruction,
        {{"instruction", std::string(instruction)},
         {"spans", span_texts.empty() ? std::string("(none identified)")
                                      : Json(span_texts).dump()},
         {"chunk", chunk.text},
         {"target_key", target.key},
         {"target_values", ValuesJson(target)},
         {"label", std::string(LabelName(target.label))}},
        attempt_sampling);
    absl::StatusOr<std::string> reply = gateway.Complete(request);
    // Dropping everything in a chunk legitimately leaves nothing.
    if (HasErrorCode(reply.status(), ErrorCode::kEmptyResponse)) {
      reply = std::string();
    }
    if (!reply.ok()) return reply.status();
    std::string rewritten = *std::move(reply);
    if (!HasVerbatimValue(rewritten, target)) return rewritten;
    spdlog::warn("rewrite of chunk {} still contains '{}' (attempt {})",
                 chunk.index, target.key, attempt + 1);
  }
  return MakeError(ErrorCode::kUnsanitized,
                   StrCat("chunk ", chunk.index, " still contains a value of '",
                          target.key, "' after retry"));
}

}  // namespace privsynth::sanitization
