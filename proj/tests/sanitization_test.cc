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

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "oracles.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/llm/prompts.h"
#include "privsynth/sanitization/chunking.h"
#include "privsynth/sanitization/instructions.h"
#include "privsynth/sanitization/pipeline.h"
#include "privsynth/sanitization/retention.h"
#include "privsynth/sanitization/rewriting.h"
#include "privsynth/sanitization/targets.h"
#include "test_util.h"

namespace privsynth::sanitization {
namespace {

using privsynth::testing::FixtureRecord;
using privsynth::testing::MockRig;
using privsynth::testing::Words;
namespace tasks = llm::tasks;

const llm::SamplingOptions kSampling{0.2, 256, 1};

// --- decomposition ---

TEST(Decompose, ShortTextIsOneChunk) {
  std::string text(400, 'x');
  auto chunks = Decompose(text);
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].text, text);
  EXPECT_FALSE(chunks[0].hard_split);
}

TEST(Decompose, TwoParagraphs) {
  std::string a = Words(60).substr(0, 300), b = std::string(300, 'b');
  std::string text = a + "\n\n" + b;
  auto chunks = Decompose(text);
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].text, a);
  EXPECT_EQ(chunks[0].separator_after, "\n\n");
  EXPECT_EQ(chunks[1].text, b);
  EXPECT_EQ(MergeChunks(chunks), text);
}

TEST(Decompose, HardSplitWithoutWhitespace) {
  std::string text(600, 'z');
  auto chunks = Decompose(text);
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].text.size(), 512u);
  EXPECT_EQ(chunks[1].text.size(), 88u);
  EXPECT_TRUE(chunks[0].hard_split);
  EXPECT_TRUE(chunks[1].hard_split);
  EXPECT_EQ(MergeChunks(chunks), text);
}

TEST(Decompose, PrefersNewlineThenSentence) {
  std::string line1 = "First sentence here. " + std::string(300, 'a') + ".";
  std::string line2 = std::string(300, 'c');
  std::string text = line1 + "\n" + line2;
  auto chunks = Decompose(text);
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].separator_after, "\n");

  std::string s = std::string(300, 'a') + ". " + std::string(300, 'b');
  auto sc = Decompose(s);
  ASSERT_EQ(sc.size(), 2u);
  EXPECT_EQ(sc[0].text, std::string(300, 'a') + ".");
  EXPECT_EQ(sc[0].separator_after, " ");
}

TEST(Decompose, HardSplitKeepsUtf8Characters) {
  std::string text;
  for (int i = 0; i < 400; ++i) text += "é";  // 800 bytes
  auto chunks = Decompose(text);
  for (const auto& c : chunks) {
    EXPECT_LE(c.text.size(), 512u);
    EXPECT_EQ(c.text.size() % 2, 0u);
  }
  EXPECT_EQ(MergeChunks(chunks), text);
}

std::string RandomText(std::mt19937_64& rng, size_t len) {
  static const std::vector<std::string> atoms = {
      "a", "b", "word", "x", ".", "!", "?", " ", " ", "  ", "\n", "\n\n",
      "\n \n", "\t", "é", "\r\n"};
  std::string out;
  while (out.size() < len) out += atoms[rng() % atoms.size()];
  out.resize(len);
  return out;
}

TEST(Decompose, MergeIdentityProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    size_t len = 1 + rng() % 3000;
    size_t tau = std::vector<size_t>{8, 64, 512}[rng() % 3];
    std::string text = RandomText(rng, len);
    auto chunks = Decompose(text, tau);
    ASSERT_EQ(MergeChunks(chunks), text) << "trial " << trial;
    for (size_t i = 0; i < chunks.size(); ++i) {
      EXPECT_EQ(chunks[i].index, i);
      EXPECT_LE(chunks[i].text.size(), tau);
    }
  }
}

TEST(Merge, LocalityAndDeletion) {
  std::string text = "alpha one.\n\nbeta two.\n\ngamma three.";
  auto chunks = Decompose(text, 12);
  ASSERT_EQ(chunks.size(), 3u);
  EXPECT_EQ(MergeChunks(chunks), text);
  auto edited = chunks;
  edited[1].text = "BETA";
  EXPECT_EQ(MergeChunks(edited), "alpha one.\n\nBETA\n\ngamma three.");
  edited[1].text = "";
  EXPECT_EQ(MergeChunks(edited), "alpha one.\n\n\n\ngamma three.");
}

// --- weights and targets ---

TEST(Weights, ScriptedNormalizedAsIs) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kSensitivity),
                            R"({"ssn": 0.8, "mood": 0.2})");
  auto w = AssignSensitivityWeights(rig.gw(), {{"ssn", "1"}, {"mood", "ok"}},
                                    kSampling);
  EXPECT_DOUBLE_EQ(w["ssn"], 0.8);
  EXPECT_DOUBLE_EQ(w["mood"], 0.2);
}

TEST(Weights, RescaledMissingAndNegative) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kSensitivity),
                            R"({"a": 3, "b": -1})");
  auto w = AssignSensitivityWeights(
      rig.gw(), {{"a", "1"}, {"b", "2"}, {"c", "3"}}, kSampling);
  EXPECT_DOUBLE_EQ(w["a"], 1.0);
  EXPECT_DOUBLE_EQ(w["b"], 0.0);
  EXPECT_DOUBLE_EQ(w["c"], 0.0);
}

TEST(Weights, ProviderFailureFallsBackToUniform) {
  MockRig rig;
  rig.mock->FailTask(std::string(tasks::kSensitivity),
                     MakeError(ErrorCode::kProviderError, "x"));
  auto w = AssignSensitivityWeights(
      rig.gw(), {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "4"}}, kSampling);
  for (const auto& [k, v] : w) EXPECT_DOUBLE_EQ(v, 0.25);
  auto single = AssignSensitivityWeights(rig.gw(), {{"a", "1"}}, kSampling);
  EXPECT_DOUBLE_EQ(single["a"], 1.0);
}

TEST(Targets, SingleAttribute) {
  Rng rng(1);
  auto t = SelectTargets({{"a", "v"}}, {}, {{"a", 1.0}}, 1, rng);
  ASSERT_TRUE(t.ok());
  ASSERT_EQ(t->size(), 1u);
  EXPECT_EQ((*t)[0].key, "a");
  EXPECT_EQ((*t)[0].value, "v");
}

TEST(Targets, FrequencyProportionalToWeight) {
  Rng rng(2);
  AttributeMap attrs = {{"a", "1"}, {"b", "2"}};
  WeightMap w = {{"a", 0.9}, {"b", 0.1}};
  int a = 0, abstract = 0;
  for (int i = 0; i < 10000; ++i) {
    auto t = *SelectTargets(attrs, {}, w, 1, rng);
    a += t[0].key == "a";
    abstract += t[0].label == SanitizationLabel::kAbstract;
  }
  EXPECT_NEAR(a / 10000.0, 0.9, 0.02);
  EXPECT_NEAR(abstract / 10000.0, 0.5, 0.02);
}

TEST(Targets, InsufficientAndInvalid) {
  Rng rng(3);
  AttributeMap attrs = {{"a", "1"}, {"b", "2"}};
  WeightMap w = {{"a", 0.5}, {"b", 0.5}};
  EXPECT_TRUE(HasErrorCode(SelectTargets(attrs, {}, w, 3, rng).status(),
                           ErrorCode::kInsufficientAttributes));
  EXPECT_FALSE(SelectTargets(attrs, {}, w, 0, rng).ok());
}

TEST(Targets, GroupsAreUnitsWithSummedWeight) {
  AttributeMap attrs = {{"city", "Lyon"}, {"street", "Rue A"}, {"ssn", "1"}};
  std::vector<AttributeGroup> groups = {{"location", {"city", "street"}}};
  WeightMap w = {{"city", 0.2}, {"street", 0.3}, {"ssn", 0.5}};
  auto units = SelectableUnits(attrs, groups, w);
  ASSERT_EQ(units.size(), 4u);
  auto it = std::find_if(units.begin(), units.end(),
                         [](const auto& u) { return u.is_group; });
  ASSERT_NE(it, units.end());
  EXPECT_EQ(it->key, "location");
  EXPECT_DOUBLE_EQ(it->weight, 0.5);
  EXPECT_EQ(it->Values(), (std::vector<std::string>{"Lyon", "Rue A"}));
  Rng rng(4);
  auto all = *SelectTargets(attrs, groups, w, 4, rng);
  std::set<std::string> keys;
  for (const auto& t : all) keys.insert(t.key);
  EXPECT_EQ(keys.size(), 4u);
}

// --- relevant chunks, spans, instructions ---

std::vector<Chunk> SixChunks() {
  std::vector<Chunk> chunks;
  for (size_t i = 0; i < 6; ++i) {
    chunks.push_back({i, StrCat("chunk ", i, " text"), "\n\n", false});
  }
  chunks[3].text = "serial 84213579 noted";
  return chunks;
}

SanitizationTarget Target(std::string key, std::string value,
                          SanitizationLabel label = SanitizationLabel::kDrop) {
  SanitizationTarget t;
  t.key = std::move(key);
  t.value = std::move(value);
  t.label = label;
  return t;
}

TEST(RelevantChunks, LexicalGuaranteeAndUnion) {
  MockRig rig;
  auto chunks = SixChunks();
  auto t = Target("token_serial", "84213579");
  rig.mock->SetTaskResponse(std::string(tasks::kRelevantChunks), "[]");
  EXPECT_EQ(FindRelevantChunks(rig.gw(), t, chunks, kSampling).indices,
            std::vector<size_t>{3});
  rig.mock->SetTaskResponse(std::string(tasks::kRelevantChunks), "[5, 99, -1]");
  EXPECT_EQ(FindRelevantChunks(rig.gw(), t, chunks, kSampling).indices,
            (std::vector<size_t>{3, 5}));
  rig.mock->SetTaskResponse(std::string(tasks::kRelevantChunks), "[]");
  EXPECT_TRUE(FindRelevantChunks(rig.gw(), Target("x", "absent"), chunks,
                                 kSampling)
                  .indices.empty());
}

TEST(RelevantChunks, ProviderFailureDegradesToLexical) {
  MockRig rig;
  rig.mock->FailTask(std::string(tasks::kRelevantChunks),
                     MakeError(ErrorCode::kProviderError, "x"));
  auto r = FindRelevantChunks(rig.gw(), Target("s", "84213579"), SixChunks(),
                              kSampling);
  EXPECT_TRUE(r.degraded);
  EXPECT_EQ(r.indices, std::vector<size_t>{3});
}

TEST(Spans, ExactMultipleAndClamped) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kExtractSpans), "[]");
  Chunk c{0, "Serial no. 84213579 here", "", false};
  auto one = ExtractSpans(rig.gw(), Target("s", "84213579"), c, kSampling);
  ASSERT_TRUE(one.ok());
  EXPECT_EQ(one->spans, (std::vector<Span>{{11, 19}}));

  Chunk two{1, "ab X cd X", "", false};
  auto both = ExtractSpans(rig.gw(), Target("s", "X"), two, kSampling);
  EXPECT_EQ(both->spans, (std::vector<Span>{{3, 4}, {8, 9}}));

  rig.mock->SetTaskResponse(std::string(tasks::kExtractSpans),
                            "[[2, 400], \"cd\"]");
  auto clamped = ExtractSpans(rig.gw(), Target("s", "zz"), two, kSampling);
  ASSERT_TRUE(clamped.ok());
  EXPECT_EQ(clamped->spans, (std::vector<Span>{{2, 9}}));
  EXPECT_GE(clamped->repaired, 1u);
}

TEST(Spans, NormalizeMergesOverlaps) {
  size_t repaired = 0;
  auto s = NormalizeSpans({{5, 3}, {1, 2}, {2, 4}, {7, 7}, {8, 20}}, 10,
                          &repaired);
  EXPECT_EQ(s, (std::vector<Span>{{1, 5}, {8, 10}}));
  EXPECT_EQ(repaired, 2u);
}

TEST(Instructions, DropTemplate) {
  EXPECT_EQ(DropInstruction(Target("clinic_address", "1 Main St")),
            "Drop the information about clinic address from the text");
}

TEST(Instructions, AbstractScriptedAndEmptyContext) {
  MockRig rig;
  rig.mock->SetTaskResponse(
      std::string(tasks::kAbstractInstruction),
      "Abstract the specific date as 'in the coming months'\n");
  auto t = Target("visit_date", "2024-03-02", SanitizationLabel::kAbstract);
  auto i = BuildInstruction(rig.gw(), t, "seen on 2024-03-02", kSampling);
  ASSERT_TRUE(i.ok());
  EXPECT_EQ(**i, "Abstract the specific date as 'in the coming months'");
  auto none = BuildInstruction(rig.gw(), t, "", kSampling);
  ASSERT_TRUE(none.ok());
  EXPECT_FALSE(none->has_value());
  EXPECT_EQ(rig.mock->CallCount(tasks::kAbstractInstruction), 1u);
}

TEST(Apply, MaskedRewritePasses) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kApplyInstruction),
                            "serial [MASKED] noted");
  Chunk c{3, "serial 84213579 noted", "", false};
  auto t = Target("s", "84213579");
  auto out = ApplyInstruction(rig.gw(), c, {}, DropInstruction(t), t, kSampling);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, "serial [MASKED] noted");
}

TEST(Apply, LeakyRewriteRetriesThenUnsanitized) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kApplyInstruction),
                            "serial 84213579 still");
  Chunk c{3, "serial 84213579 noted", "", false};
  auto t = Target("s", "84213579");
  auto out = ApplyInstruction(rig.gw(), c, {}, "Drop it", t, kSampling);
  EXPECT_TRUE(HasErrorCode(out.status(), ErrorCode::kUnsanitized));
  EXPECT_EQ(rig.mock->CallCount(tasks::kApplyInstruction), 2u);
  auto calls = rig.mock->calls();
  EXPECT_NE(calls[0].prompt, std::string());
}

TEST(Apply, AbstractWithNoSpansStillRewrites) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kApplyInstruction),
                            "a vague paraphrase");
  Chunk c{0, "she had her knee replaced last spring", "", false};
  auto t = Target("surgery", "knee replacement", SanitizationLabel::kAbstract);
  SpanSet none;
  auto out = ApplyInstruction(rig.gw(), c, none, "Abstract the surgery", t,
                              kSampling);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(rig.mock->CallCount(tasks::kApplyInstruction), 1u);
}

TEST(Apply, FullDropMayBeEmpty) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kApplyInstruction), "");
  Chunk c{0, "84213579", "", false};
  auto t = Target("s", "84213579");
  auto out = ApplyInstruction(rig.gw(), c, {}, "Drop", t, kSampling);
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_EQ(*out, "");
}

// --- retention ---

TEST(Rouge, MatchesBruteForceOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> a, b;
    for (size_t i = 0, n = rng() % 10; i < n; ++i)
      a.push_back(std::string(1, 'a' + rng() % 4));
    for (size_t i = 0, n = rng() % 10; i < n; ++i)
      b.push_back(std::string(1, 'a' + rng() % 4));
    EXPECT_EQ(LcsLength(a, b), oracle::BruteForceLcs(a, b));
    EXPECT_NEAR(RougeLF1(a, b), oracle::RougeLF1(a, b), 1e-12);
  }
}

TEST(Retention, LowestOverlapWins) {
  AttributeMap attrs = {{"ssn", "123-45-6789"},
                        {"blood_type", "O+"},
                        {"ssn_issue_date", "2001-01-01"}};
  std::vector<SanitizationTarget> targets = {Target("ssn", "123-45-6789")};
  auto tk = OverlapTokens("ssn", "123-45-6789");
  double blood = oracle::RougeLF1(OverlapTokens("blood_type", "O+"), tk);
  double issue =
      oracle::RougeLF1(OverlapTokens("ssn_issue_date", "2001-01-01"), tk);
  ASSERT_LT(blood, issue);
  EXPECT_EQ(SelectRetentionAttributes(attrs, targets, 1),
            std::vector<std::string>{"blood_type"});
  EXPECT_TRUE(SelectRetentionAttributes(attrs, targets, 0).empty());
  EXPECT_EQ(SelectRetentionAttributes(attrs, targets, 9).size(), 2u);
}

TEST(Retention, TiesBreakLexicographically) {
  AttributeMap attrs = {{"t", "x"}, {"c", "q"}, {"b", "q"}, {"a", "q"}};
  auto keep = SelectRetentionAttributes(attrs, {Target("t", "x")}, 2);
  EXPECT_EQ(keep, (std::vector<std::string>{"a", "b"}));
}

TEST(Retention, GroupMembersAreExcluded) {
  AttributeMap attrs = {{"city", "Lyon"}, {"street", "Rue"}, {"pet", "cat"}};
  SanitizationTarget g = Target("location", "Lyon; Rue");
  g.is_group = true;
  g.members = {{"city", "Lyon"}, {"street", "Rue"}};
  EXPECT_EQ(SelectRetentionAttributes(attrs, {g}, 5),
            std::vector<std::string>{"pet"});
}

// --- final instruction ---

TEST(FinalInstruction, ComposesStepsAndRetention) {
  MockRig rig;
  rig.mock->SetTaskResponse(
      std::string(tasks::kFinalInstruction),
      "  Remove the serial and the name, but keep the blood type.  ");
  std::vector<TargetInstruction> steps = {
      {Target("serial", "1"), "Drop the information about serial from the text"},
      {Target("name", "Ada"), "Drop the information about name from the text"}};
  Rng rng(1);
  auto out = GenerateFinalInstruction(rig.gw(), steps, {"blood_type"},
                                      {{"blood_type", "O+"}}, 0.3, kSampling,
                                      rng);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(*out, "Remove the serial and the name, but keep the blood type.");
  auto call = rig.mock->calls().back();
  EXPECT_NE(call.vars["retention"].find("blood type: O+"), std::string::npos);
  EXPECT_FALSE(GenerateFinalInstruction(rig.gw(), {}, {}, {}, 0.3, kSampling,
                                        rng)
                   .ok());
}

TEST(FinalInstruction, GroupOmissionNamesOnlyTheLabel) {
  MockRig rig;
  rig.mock->SetTaskResponse(std::string(tasks::kFinalInstruction), "ok");
  SanitizationTarget g = Target("locations", "Lyon; Rue");
  g.is_group = true;
  g.members = {{"city", "Lyon"}, {"street", "Rue"}};
  std::vector<TargetInstruction> steps = {{g, DropInstruction(g)}};
  Rng rng(1);
  ASSERT_TRUE(
      GenerateFinalInstruction(rig.gw(), steps, {}, {}, 1.0, kSampling, rng)
          .ok());
  std::string listed = rig.mock->calls().back().vars["instructions"];
  EXPECT_NE(listed.find("all information related to locations"),
            std::string::npos);
  EXPECT_EQ(listed.find("city"), std::string::npos);
  ASSERT_TRUE(
      GenerateFinalInstruction(rig.gw(), steps, {}, {}, 0.0, kSampling, rng)
          .ok());
  listed = rig.mock->calls().back().vars["instructions"];
  EXPECT_NE(listed.find("city"), std::string::npos);
}

// --- whole record ---

Record TwoValueRecord() {
  Record r = FixtureRecord("two");
  r.text = StrCat("Token serial 84213579 was issued to Ada Okafor. ",
                  Words(70));
  r.attributes = {{"token_serial", "84213579"}, {"full_name", "Ada Okafor"}};
  r.grouped_attributes = {};
  return r;
}

// Replaces every target value in the chunk with [MASKED] and records the
// chunk it was shown.
struct MaskingRig {
  MockRig rig;
  std::mutex mu;
  std::vector<std::pair<std::string, std::string>> seen;  // key, chunk
  MaskingRig() {
    rig.mock->SetTaskResponse(std::string(tasks::kSensitivity),
                              R"({"token_serial": 0.5, "full_name": 0.5})");
    rig.mock->SetTaskResponse(std::string(tasks::kRelevantChunks), "[]");
    rig.mock->SetTaskResponse(std::string(tasks::kExtractSpans), "[]");
    rig.mock->SetTaskResponse(std::string(tasks::kAbstractInstruction),
                              "Abstract it");
    rig.mock->SetTaskResponse(std::string(tasks::kFinalInstruction),
                              "Remove both.");
    rig.mock->SetTaskHandler(
        std::string(tasks::kApplyInstruction),
        [this](const llm::GenerationRequest& r) -> absl::StatusOr<std::string> {
          std::string chunk = r.vars.at("chunk");
          {
            std::lock_guard<std::mutex> lock(mu);
            seen.push_back({r.vars.at("target_key"), chunk});
          }
          for (const auto& v : nlohmann::json::parse(r.vars.at("target_values")))
            chunk = ReplaceAll(chunk, v.get<std::string>(), "[MASKED]");
          return chunk;
        });
  }
};

TEST(SanitizeRecord, TargetsRunSequentiallyOnEvolvingChunks) {
  MaskingRig m;
  SanitizationConfig c;
  c.targets_min = c.targets_max = 2;
  c.retention = 0;
  Rng rng(5);
  auto t = SanitizeRecord(m.rig.gw(), TwoValueRecord(), c, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  ASSERT_EQ(m.seen.size(), 2u);
  // The second target sees the first one already masked.
  const std::string& first_key = m.seen[0].first;
  const std::string first_value =
      first_key == "token_serial" ? "84213579" : "Ada Okafor";
  EXPECT_EQ(m.seen[1].second.find(first_value), std::string::npos);
  EXPECT_NE(m.seen[1].second.find("[MASKED]"), std::string::npos);
  EXPECT_EQ(t->sanitized_text.find("84213579"), std::string::npos);
  EXPECT_EQ(t->sanitized_text.find("Ada Okafor"), std::string::npos);
  EXPECT_EQ(t->final_instruction, "Remove both.");
  EXPECT_EQ(t->per_target_instructions.size(), 2u);
}

TEST(SanitizeRecord, AbsentValueBecomesFlaggedNoop) {
  MaskingRig m;
  Record r = TwoValueRecord();
  r.attributes = {{"passport", "ZZ999"}};
  SanitizationConfig c;
  c.targets_min = c.targets_max = 1;
  Rng rng(5);
  auto t = SanitizeRecord(m.rig.gw(), r, c, rng);
  ASSERT_TRUE(t.ok()) << t.status();
  EXPECT_EQ(t->noop_targets, std::vector<std::string>{"passport"});
  EXPECT_EQ(t->sanitized_text, r.text);
  EXPECT_TRUE(m.seen.empty());
}

TEST(SanitizeRecord, OutageYieldsStructuredFailure) {
  MaskingRig m;
  m.rig.mock->FailTask(std::string(tasks::kApplyInstruction),
                       MakeError(ErrorCode::kProviderError, "outage"));
  SanitizationConfig c;
  std::vector<Record> records = {TwoValueRecord()};
  auto out = SanitizeCorpus(m.rig.gw(), records, c);
  EXPECT_TRUE(out.triplets.empty());
  ASSERT_EQ(out.failures.size(), 1u);
  EXPECT_EQ(out.failures[0].record_id, "two");
  EXPECT_EQ(out.failures[0].stage, "apply_instruction");
}

TEST(SanitizeRecord, InvalidRecordFailsValidation) {
  MaskingRig m;
  Record r = TwoValueRecord();
  r.text = "too short";
  Rng rng(1);
  std::string stage;
  EXPECT_FALSE(SanitizeRecord(m.rig.gw(), r, {}, rng, &stage).ok());
  EXPECT_EQ(stage, "validate");
}

TEST(SanitizeCorpus, SimulatedMockInvariantsAndDeterminism) {
  std::vector<Record> records;
  for (int i = 0; i < 6; ++i) {
    Record r = TwoValueRecord();
    r.id = StrCat("r", i);
    r.attributes["pet"] = "Biscuit";
    r.text += " Her dog Biscuit waited outside.";
    records.push_back(r);
  }
  SanitizationConfig c;
  c.seed = 9;
  MockRig a(true), b(true);
  c.workers = 1;
  auto one = SanitizeCorpus(a.gw(), records, c);
  c.workers = 4;
  auto four = SanitizeCorpus(b.gw(), records, c);
  EXPECT_EQ(one.triplets, four.triplets);
  for (const auto& t : one.triplets) {
    std::set<std::string> target_keys;
    for (const auto& target : t.targets) {
      target_keys.insert(target.key);
      for (const auto& v : target.Values())
        EXPECT_FALSE(ContainsVerbatim(t.sanitized_text, v)) << v;
    }
    for (const auto& k : t.retention) EXPECT_FALSE(target_keys.contains(k));
    EXPECT_FALSE(t.sanitized_text.empty());
  }
}

}  // namespace
}  // namespace privsynth::sanitization
