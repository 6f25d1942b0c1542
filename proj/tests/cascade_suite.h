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

#ifndef PRIVSYNTH_TESTS_CASCADE_SUITE_H_
#define PRIVSYNTH_TESTS_CASCADE_SUITE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/core/types.h"
#include "privsynth/evaluation/cascade.h"
#include "privsynth/llm/mock_provider.h"
#include "privsynth/llm/prompts.h"
#include "test_util.h"

namespace privsynth::testing {

// One scripted evaluator scenario. The inference handler answers
// `guess_sanitized` when shown the sanitized text and `guess_original` when
// shown the original.
struct CascadeScenario {
  std::string name;
  bool retention = false;
  evaluation::EvalItem item;
  std::string original;
  std::string sanitized;
  std::string guess_sanitized = "unknown";
  std::string guess_original = "unknown";
  std::string judge_reply = "B";
  std::string presence_reply = "NO";
  std::optional<LeakType> expect_type;
  std::optional<RetentionOutcome> expect_retention;
  size_t expect_infer = 0;
  size_t expect_judge = 0;
  size_t expect_presence = 0;
};

inline std::vector<CascadeScenario> CascadeScenarios() {
  const std::string original =
      "Maya Lindqvist, born in Uppsala, works as a nurse at Karolinska.";
  std::vector<CascadeScenario> s;
  auto target = [&](std::string name, std::string key, std::string value,
                    std::string sanitized) {
    CascadeScenario c;
    c.name = std::move(name);
    c.item = {std::move(key), std::move(value)};
    c.original = original;
    c.sanitized = std::move(sanitized);
    return c;
  };

  auto c = target("direct_verbatim", "birthplace", "Uppsala",
                  "A nurse born in Uppsala works at a large hospital.");
  c.expect_type = LeakType::kDirectLeak;
  s.push_back(c);

  c = target("direct_trimmed", "employer", "  Karolinska ",
             "She works at Karolinska as a nurse.");
  c.expect_type = LeakType::kDirectLeak;
  s.push_back(c);

  c = target("inference_exact", "birthplace", "Uppsala",
             "A nurse from a Swedish university town.");
  c.guess_sanitized = "Uppsala";
  c.expect_type = LeakType::kInferenceLeak;
  c.expect_infer = 1;
  s.push_back(c);

  c = target("inference_normalized", "occupation", "registered  nurse",
             "She cares for patients on a hospital ward.");
  c.guess_sanitized = "  registered nurse. ";
  c.expect_type = LeakType::kInferenceLeak;
  c.expect_infer = 1;
  s.push_back(c);

  c = target("proximity_judge_a", "birthplace", "Uppsala",
             "A nurse from somewhere in Sweden.");
  c.guess_sanitized = "Stockholm";
  c.guess_original = "Gothenburg";
  c.judge_reply = "A";
  c.expect_type = LeakType::kProximityLeak;
  c.expect_infer = 2;
  c.expect_judge = 1;
  s.push_back(c);

  c = target("proximity_equal_guesses", "birthplace", "Uppsala",
             "A nurse from somewhere in Sweden.");
  c.guess_sanitized = "Sweden";
  c.guess_original = "Sweden";
  c.expect_type = LeakType::kProximityLeak;
  c.expect_infer = 2;
  s.push_back(c);

  c = target("proximity_tie", "birthplace", "Uppsala",
             "A nurse from somewhere in Sweden.");
  c.guess_sanitized = "Stockholm";
  c.guess_original = "Malmo";
  c.judge_reply = "Verdict: TIE";
  c.expect_type = LeakType::kProximityLeak;
  c.expect_infer = 2;
  c.expect_judge = 1;
  s.push_back(c);

  c = target("ok_original_closer", "birthplace", "Uppsala",
             "A nurse from somewhere in Europe.");
  c.guess_sanitized = "Berlin";
  c.guess_original = "Uppsala";
  c.judge_reply = "reasoning first\nVerdict: B.";
  c.expect_type = LeakType::kOk;
  c.expect_infer = 2;
  c.expect_judge = 1;
  s.push_back(c);

  auto keep = [&](std::string name, std::string key, std::string value,
                  std::string sanitized) {
    CascadeScenario k = target(std::move(name), std::move(key),
                               std::move(value), std::move(sanitized));
    k.retention = true;
    return k;
  };

  c = keep("retained_verbatim", "body_temperature", "98.3°F",
           "A nurse whose temperature was 98.3°F at intake.");
  c.expect_retention = RetentionOutcome::kRetained;
  s.push_back(c);

  c = keep("retained_inference", "body_temperature", "98.3°F",
           "A nurse with a normal temperature of ninety-eight point three.");
  c.guess_sanitized = "98.3°F";
  c.expect_retention = RetentionOutcome::kRetained;
  c.expect_infer = 1;
  s.push_back(c);

  c = keep("retained_presence", "body_temperature", "98.3°F",
           "A nurse with a temperature just under 98.5 degrees.");
  c.guess_sanitized = "98.4°F";
  c.presence_reply = "YES";
  c.expect_retention = RetentionOutcome::kRetained;
  c.expect_infer = 1;
  c.expect_presence = 1;
  s.push_back(c);

  c = keep("lost_all_tiers", "body_temperature", "98.3°F",
           "A nurse who felt fine.");
  c.guess_sanitized = "unknown";
  c.presence_reply = "NO.";
  c.expect_retention = RetentionOutcome::kLost;
  c.expect_infer = 1;
  c.expect_presence = 1;
  s.push_back(c);
  return s;
}

inline void ScriptEvaluator(llm::MockProvider& mock,
                            const CascadeScenario& c) {
  mock.SetTaskHandler(
      std::string(llm::tasks::kInferAttribute),
      [c](const llm::GenerationRequest& r) -> absl::StatusOr<std::string> {
        return r.vars.at("text") == c.sanitized ? c.guess_sanitized
                                                : c.guess_original;
      });
  mock.SetTaskResponse(std::string(llm::tasks::kProximityJudge),
                       c.judge_reply);
  mock.SetTaskResponse(std::string(llm::tasks::kRetentionPresence),
                       c.presence_reply);
}

struct ScenarioOutcome {
  bool ok = false;
  std::string detail;
};

// Runs one scenario on a fresh scripted mock and compares the outcome and
// the per-tier call counts.
inline ScenarioOutcome RunScenario(const CascadeScenario& c) {
  MockRig rig;
  ScriptEvaluator(*rig.mock, c);
  evaluation::EvalCase ec;
  ec.id = c.name;
  ec.original = c.original;
  ec.sanitized = c.sanitized;
  std::string got;
  bool match = false;
  if (c.retention) {
    auto outcome = evaluation::EvaluateRetention(rig.gw(), ec, c.item, {});
    if (!outcome.ok()) return {false, std::string(outcome.status().message())};
    got = std::string(RetentionName(*outcome));
    match = *outcome == *c.expect_retention;
  } else {
    ec.targets = {c.item};
    LeakReport report = evaluation::EvaluateRecord(rig.gw(), ec, {});
    if (report.indeterminate) return {false, report.error};
    LeakType type = report.per_attribute.at(c.item.key);
    got = std::string(LeakTypeName(type));
    match = type == *c.expect_type && report.successful_record ==
                                          (type == LeakType::kOk);
  }
  const size_t infer = rig.mock->CallCount(llm::tasks::kInferAttribute);
  const size_t judge = rig.mock->CallCount(llm::tasks::kProximityJudge);
  const size_t presence = rig.mock->CallCount(llm::tasks::kRetentionPresence);
  const bool calls = infer == c.expect_infer && judge == c.expect_judge &&
                     presence == c.expect_presence;
  return {match && calls,
          StrCat(got, " calls(infer=", infer, ", judge=", judge,
                 ", presence=", presence, ")")};
}

// Two records: both attributes OK in the first; one OK of three in the
// second, which failed by two direct leaks and one proximity leak.
inline std::vector<LeakReport> AggregateFixture() {
  LeakReport a;
  a.record_id = "a";
  a.per_attribute = {{"name", LeakType::kOk}, {"city", LeakType::kOk}};
  a.retention_per_attribute = {{"pet", RetentionOutcome::kRetained}};
  a.DeriveFlags();
  LeakReport b;
  b.record_id = "b";
  b.per_attribute = {{"ssn", LeakType::kDirectLeak},
                     {"phone", LeakType::kDirectLeak},
                     {"employer", LeakType::kOk}};
  b.DeriveFlags();
  return {a, b};
}

}  // namespace privsynth::testing

#endif  // PRIVSYNTH_TESTS_CASCADE_SUITE_H_
