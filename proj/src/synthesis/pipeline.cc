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

#include "privsynth/synthesis/pipeline.h"

#include <algorithm>
#include <optional>

#include "privsynth/core/parallel.h"
#include "privsynth/core/random.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/synthesis/annotation.h"
#include "spdlog/spdlog.h"

namespace privsynth::synthesis {
namespace {

llm::SamplingOptions WithSeed(llm::SamplingOptions sampling, uint64_t seed) {
  sampling.seed = seed;
  return sampling;
}


}  // namespace

absl::StatusOr<Candidate> SynthesizeCandidate(llm::Gateway& gateway,
                                              const NameTable& names,
                                              const SynthesisConfig& config,
                                              const AcceptedPool& pool,
                                              size_t index,
                                              std::string* failed_stage) {
  auto Staged = [failed_stage](const absl::Status& status,
                               std::string_view stage) {
    if (failed_stage != nullptr) *failed_stage = std::string(stage);
    return Annotate(status, StrCat("stage ", stage));
  };
  Rng rng(DeriveSeed(config.seed, "synthesize", index));
  Candidate out;
  Record& record = out.record;
  record.id = RandomId(rng);
  record.generator_id = config.generator_id;

  auto first_name = SampleFirstName(names, rng);
  if (!first_name.ok()) return Staged(first_name.status(), "name");
  auto profile = GenerateProfile(gateway, *first_name, config.profile,
                                 config.generation, rng);
  if (!profile.ok()) return Staged(profile.status(), "profile");
  record.profile = *std::move(profile);

  const std::string focus = PickFocusAttribute(record.profile, rng);
  const std::string formality =
      config.record_formality.empty()
          ? std::string("records")
          : config.record_formality[UniformIndex(
                rng, config.record_formality.size())];
  auto record_type = GenerateRecordType(gateway, record.profile, formality,
                                        focus, config.generation, rng);
  if (!record_type.ok()) return Staged(record_type.status(), "record_type");
  record.record_type = *record_type;
  auto context = GenerateBackgroundContext(
      gateway, record.profile, record.record_type, focus, config.generation,
      rng);
  if (!context.ok()) return Staged(context.status(), "background_context");
  record.background_context = *context;
  auto format = GenerateFormat(gateway, record.record_type,
                               record.background_context, config.generation,
                               rng);
  if (!format.ok()) return Staged(format.status(), "format");
  record.format_desc = *format;

  DraftInputs inputs{record.profile, record.record_type,
                     record.background_context, record.format_desc};
  auto draft =
      DraftRecord(gateway, inputs, WithSeed(config.generation, rng()));
  if (!draft.ok()) return Staged(draft.status(), "draft");

  CandidateSampler sampler =
      [&](int, uint64_t seed) -> absl::StatusOr<std::string> {
    return DraftRecord(gateway, inputs, WithSeed(config.generation, seed));
  };
  auto refined = RefineRecord(*std::move(draft), pool, config.refinement,
                              gateway, sampler, rng);
  if (!refined.ok()) return Staged(refined.status(), "refine");
  record.text = std::move(refined->text);
  out.embedding = std::move(refined->embedding);
  out.log = std::move(refined->log);

  out.rejection_reasons = RejectionReasons(record, config.filter);
  if (!out.rejection_reasons.empty()) return out;

  const uint64_t annotate_seed = rng();
  const uint64_t group_seed = rng();
  auto attributes =
      AnnotateAttributes(gateway, record.text, record.profile,
                         WithSeed(config.annotation, annotate_seed));
  if (!attributes.ok()) return Staged(attributes.status(), "annotate");
  record.attributes = *std::move(attributes);
  auto groups = GroupAttributes(gateway, record.attributes,
                                WithSeed(config.annotation, group_seed));
  if (!groups.ok()) return Staged(groups.status(), "group");
  record.grouped_attributes = *std::move(groups);
  return out;
}

absl::StatusOr<SynthesisOutput> SynthesizeCorpus(
    llm::Gateway& gateway, const NameTable& names,
    const SynthesisConfig& config) {
  PRIVSYNTH_RETURN_IF_ERROR(config.refinement.Validate());
  if (config.batch_size == 0) {
    return MakeError(ErrorCode::kConfigError, "batch_size must be positive");
  }
  {
    Rng probe(0);
    PRIVSYNTH_RETURN_IF_ERROR(SampleFirstName(names, probe).status());
  }
  const size_t budget = config.max_attempts > 0
                            ? config.max_attempts
                            : 3 * config.count + config.batch_size;
  SynthesisOutput output;
  AcceptedPool pool;
  size_t next = 0;
  while (output.records.size() < config.count && next < budget) {
    const size_t batch = std::min(config.batch_size, budget - next);
    std::vector<std::optional<absl::StatusOr<Candidate>>> slots(batch);
    std::vector<std::string> stages(batch);
    ParallelFor(batch, config.workers, [&](size_t i) {
      slots[i] = SynthesizeCandidate(gateway, names, config, pool, next + i,
                                     &stages[i]);
    });
    for (size_t i = 0; i < batch; ++i) {
      const size_t index = next + i;
      ++output.attempts;
      absl::StatusOr<Candidate>& result = *slots[i];
      if (!result.ok()) {
        spdlog::warn("candidate {} failed: {}", index,
                     std::string(result.status().message()));
        output.failures.push_back(
            {index, stages[i], std::string(result.status().message())});
        continue;
      }
      if (!result->rejection_reasons.empty()) {
        output.rejected.push_back(
            {std::move(result->record), std::move(result->rejection_reasons)});
        continue;
      }
      pool.Add(result->record.text, std::move(result->embedding));
      output.records.push_back(std::move(result->record));
      output.refinement_logs.push_back(std::move(result->log));
      if (output.records.size() == config.count) break;
    }
    next += batch;
  }
  if (output.records.size() < config.count) {
    spdlog::warn("kept {} of {} requested records after {} attempts",
                 output.records.size(), config.count, output.attempts);
  }

  output.categories = config.categories;
  if (config.categorize) {
    for (size_t i = 0; i < output.records.size(); ++i) {
      Record& record = output.records[i];
      auto label = CategorizeRecord(
          gateway, record.text, output.categories,
          WithSeed(config.annotation, DeriveSeed(config.seed, "category", i)));
      if (label.ok()) {
        record.category = *label;
      } else {
        spdlog::warn("category for record {} failed: {}", record.id,
                     std::string(label.status().message()));
      }
    }
  }
  return output;
}

}  // namespace privsynth::synthesis
