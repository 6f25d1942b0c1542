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

#include "privsynth/sanitization/pipeline.h"

#include <algorithm>
#include <optional>
#include <set>

#include "privsynth/core/parallel.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/core/validation.h"
#include "privsynth/sanitization/instructions.h"
#include "privsynth/sanitization/retention.h"
#include "privsynth/sanitization/rewriting.h"
#include "privsynth/sanitization/targets.h"
#include "spdlog/spdlog.h"

namespace privsynth::sanitization {
namespace {

llm::SamplingOptions WithSeed(llm::SamplingOptions sampling, uint64_t seed) {
  sampling.seed = seed;
  return sampling;
}

bool AnyValueVerbatim(std::string_view text, const SanitizationTarget& t) {
  for (const std::string& value : t.Values()) {
    std::string_view v = StripWhitespace(value);
    if (!v.empty() && ContainsVerbatim(text, v)) return true;
  }
  return false;
}

}  // namespace

absl::StatusOr<SanitizationTriplet> SanitizeRecord(
    llm::Gateway& gateway, const Record& record,
    const SanitizationConfig& config, Rng& rng, std::string* failed_stage) {
  std::string stage_sink;
  std::string& stage = failed_stage != nullptr ? *failed_stage : stage_sink;
  auto fail = [&stage](std::string_view name, const absl::Status& status) {
    stage = std::string(name);
    return Annotate(status, StrCat("stage ", name));
  };

  stage = "validate";
  if (std::vector<Violation> violations = ValidateRecord(record);
      !violations.empty()) {
    std::vector<std::string> codes;
    for (const Violation& v : violations) codes.push_back(v.message);
    return fail("validate", MakeError(ErrorCode::kInvalidArgument,
                                      Join(codes, "; ")));
  }
  if (config.targets_min < 1 || config.targets_max < config.targets_min) {
    return fail("config", MakeError(ErrorCode::kConfigError,
                                    "invalid target range"));
  }

  std::vector<Chunk> chunks = Decompose(record.text, config.tau);

  const WeightMap weights = AssignSensitivityWeights(
      gateway, record.attributes, WithSeed(config.sampling, rng()));
  const size_t units =
      SelectableUnits(record.attributes, record.grouped_attributes, weights)
          .size();
  const int lo = config.targets_min;
  const int drawn =
      lo + static_cast<int>(UniformIndex(
               rng, static_cast<size_t>(config.targets_max - lo + 1)));
  const int n = std::min<int>(drawn, static_cast<int>(units));
  absl::StatusOr<std::vector<SanitizationTarget>> targets =
      SelectTargets(record.attributes, record.grouped_attributes, weights,
                    std::max(n, 1), rng);
  if (!targets.ok()) return fail("select_targets", targets.status());

  SanitizationTriplet triplet;
  triplet.record = record;
  std::vector<TargetInstruction> steps;
  // Targets run one after another; each sees the chunks as left by the
  // previous target.
  for (const SanitizationTarget& target : *targets) {
    const uint64_t target_seed = rng();
    RelevantChunks relevant = FindRelevantChunks(
        gateway, target, chunks,
        WithSeed(config.sampling, DeriveSeed(target_seed, "relevant", 0)));
    if (relevant.indices.empty()) {
      spdlog::info("record {}: target '{}' has no relevant chunk; no-op",
                   record.id, target.key);
      triplet.noop_targets.push_back(target.key);
      continue;
    }
    std::vector<std::string> context;
    for (size_t i : relevant.indices) context.push_back(chunks[i].text);
    absl::StatusOr<std::optional<std::string>> instruction = BuildInstruction(
        gateway, target, Join(context, "\n\n"),
        WithSeed(config.sampling, DeriveSeed(target_seed, "instruction", 0)));
    if (!instruction.ok()) return fail("build_instruction", instruction.status());
    if (!instruction->has_value()) {
      triplet.noop_targets.push_back(target.key);
      continue;
    }
    const std::string& instr = **instruction;

    std::vector<std::optional<absl::StatusOr<std::string>>> rewritten(
        relevant.indices.size());
    std::vector<std::string> stages(relevant.indices.size());
    ParallelFor(relevant.indices.size(), config.chunk_workers, [&](size_t k) {
      const Chunk& chunk = chunks[relevant.indices[k]];
      absl::StatusOr<SpanSet> spans = ExtractSpans(
          gateway, target, chunk,
          WithSeed(config.sampling,
                   DeriveSeed(target_seed, "spans", chunk.index)));
      if (!spans.ok()) {
        stages[k] = "extract_spans";
        rewritten[k] = spans.status();
        return;
      }
      stages[k] = "apply_instruction";
      rewritten[k] = ApplyInstruction(
          gateway, chunk, *spans, instr, target,
          WithSeed(config.sampling,
                   DeriveSeed(target_seed, "apply", chunk.index)));
    });
    for (size_t k = 0; k < relevant.indices.size(); ++k) {
      if (!rewritten[k]->ok()) {
        return fail(stages[k], rewritten[k]->status());
      }
    }
    for (size_t k = 0; k < relevant.indices.size(); ++k) {
      chunks[relevant.indices[k]].text = **rewritten[k];
    }
    triplet.per_target_instructions[target.key] = instr;
    steps.push_back({target, instr});
  }

  triplet.sanitized_text = MergeChunks(chunks);
  for (const SanitizationTarget& target : *targets) {
    if (AnyValueVerbatim(triplet.sanitized_text, target)) {
      return fail("final_check",
                  MakeError(ErrorCode::kUnsanitized,
                            StrCat("merged text still contains a value of '",
                                   target.key, "'")));
    }
  }
  if (!record.text.empty() && IsBlank(triplet.sanitized_text)) {
    return fail("final_check", MakeError(ErrorCode::kUnsanitized,
                                         "sanitized text is empty"));
  }

  triplet.targets = *std::move(targets);
  triplet.retention = SelectRetentionAttributes(record.attributes,
                                                triplet.targets,
                                                config.retention);
  if (steps.empty()) {
    // Nothing was rewritten; the request still names every target.
    for (const SanitizationTarget& target : triplet.targets) {
      steps.push_back({target, DropInstruction(target)});
    }
  }
  absl::StatusOr<std::string> final_instruction = GenerateFinalInstruction(
      gateway, steps, triplet.retention, record.attributes,
      config.group_omission_p, WithSeed(config.sampling, rng()), rng);
  if (!final_instruction.ok()) {
    return fail("final_instruction", final_instruction.status());
  }
  triplet.final_instruction = *std::move(final_instruction);
  stage.clear();
  return triplet;
}

SanitizationOutput SanitizeCorpus(llm::Gateway& gateway,
                                  std::span<const Record> records,
                                  const SanitizationConfig& config) {
  std::vector<std::optional<absl::StatusOr<SanitizationTriplet>>> results(
      records.size());
  std::vector<std::string> stages(records.size());
  ParallelFor(records.size(), config.workers, [&](size_t i) {
    Rng rng(DeriveSeed(config.seed, StrCat("sanitize:", records[i].id), 0));
    results[i] = SanitizeRecord(gateway, records[i], config, rng, &stages[i]);
  });
  SanitizationOutput out;
  for (size_t i = 0; i < records.size(); ++i) {
    if (results[i]->ok()) {
      out.triplets.push_back(**std::move(results[i]));
    } else {
      spdlog::warn("record {} excluded: {}", records[i].id,
                   std::string(results[i]->status().message()));
      out.failures.push_back({records[i].id, stages[i],
                              std::string(results[i]->status().message())});
    }
  }
  return out;
}

}  // namespace privsynth::sanitization
