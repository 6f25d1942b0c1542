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

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "privsynth/core/json_codec.h"
#include "privsynth/core/random.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/core/types.h"
#include "privsynth/core/validation.h"
#include "test_util.h"

namespace privsynth {
namespace {

using testing::FixtureRecord;
using testing::Words;

std::set<std::string> Codes(const std::vector<Violation>& violations) {
  std::set<std::string> out;
  for (const auto& v : violations) out.insert(v.code);
  return out;
}

TEST(ValidateRecord, WellFormedFixtureIsOk) {
  EXPECT_TRUE(ValidateRecord(FixtureRecord()).empty());
}

TEST(ValidateRecord, SixtyThreeWordsIsShort) {
  Record r = FixtureRecord();
  r.text = Words(63);
  auto violations = ValidateRecord(r);
  ASSERT_EQ(Codes(violations), std::set<std::string>{"short"});
  EXPECT_NE(violations[0].message.find("word count < 64"), std::string::npos);
  r.text = Words(64);
  EXPECT_TRUE(ValidateRecord(r).empty());
}

TEST(ValidateRecord, EmptyAttributes) {
  Record r = FixtureRecord();
  r.attributes.clear();
  r.grouped_attributes.clear();
  EXPECT_EQ(Codes(ValidateRecord(r)), std::set<std::string>{"attributes_empty"});
}

TEST(ValidateRecord, DanglingGroupKeyAndUnderage) {
  Record r = FixtureRecord("x", 17);
  r.grouped_attributes.push_back({"location", {"clinic_address"}});
  EXPECT_EQ(Codes(ValidateRecord(r)),
            (std::set<std::string>{"dangling_group_key", "underage"}));
}

TEST(ValidateRecord, InconsistentAgeOnlyWhenBothPresent) {
  Record r = FixtureRecord();
  r.profile.age = 70;
  EXPECT_TRUE(Codes(ValidateRecord(r)).contains("age_inconsistent"));
  r.profile.date_of_birth.reset();
  EXPECT_TRUE(ValidateRecord(r).empty());
}

TEST(ValidateRecord, DoesNotMutate) {
  const Record r = FixtureRecord();
  Record copy = r;
  ValidateRecord(copy);
  EXPECT_EQ(copy, r);
}

TEST(DeriveRecordFlags, Table) {
  using L = LeakType;
  using R = RetentionOutcome;
  struct Case {
    std::map<std::string, L> targets;
    std::map<std::string, R> retention;
    bool success, full;
  } cases[] = {
      {{{"a", L::kOk}, {"b", L::kOk}}, {{"k", R::kRetained}}, true, true},
      {{{"a", L::kOk}, {"b", L::kDirectLeak}}, {{"k", R::kRetained}}, false,
       false},
      {{{"a", L::kOk}}, {{"k", R::kLost}}, true, false},
      {{{"a", L::kProximityLeak}}, {}, false, false},
      {{{"a", L::kOk}}, {}, true, true},
  };
  for (const auto& c : cases) {
    RecordFlags f = DeriveRecordFlags(c.targets, c.retention);
    EXPECT_EQ(f.successful_record, c.success);
    EXPECT_EQ(f.full_successful_record, c.full);
  }
}

// Builds records with random field contents, including unicode and
// separators, to exercise the codec.
Record RandomRecord(Rng& rng) {
  static const std::vector<std::string> pieces = {
      "a", "Zoë", "line\nbreak", "\"quoted\"", "tab\tchar", "東京", "", "42"};
  auto pick = [&] { return pieces[UniformIndex(rng, pieces.size())]; };
  Record r;
  r.id = RandomId(rng);
  r.text = StrCat(pick(), " ", pick(), " ", pick());
  r.record_type = pick();
  r.background_context = pick();
  r.format_desc = pick();
  r.profile.first_name = "N" + pick();
  r.profile.last_name = pick();
  if (Bernoulli(rng, 0.5)) r.profile.age = static_cast<int>(UniformIndex(rng, 90));
  if (Bernoulli(rng, 0.5)) {
    r.profile.date_of_birth =
        CalendarDate(1950 + static_cast<int>(UniformIndex(rng, 60)), 2, 28);
  }
  r.profile.email = pick();
  r.profile.life_event["event"] = pick();
  for (int i = 0; i < 3; ++i) r.attributes[StrCat("k", i, pick())] = pick();
  r.grouped_attributes.push_back({"g" + pick(), {r.attributes.begin()->first}});
  if (Bernoulli(rng, 0.5)) r.category = pick();
  r.generator_id = pick();
  return r;
}

TEST(JsonCodec, RecordRoundTripProperty) {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Record r = RandomRecord(rng);
    auto back = FromJsonLine<Record>(ToJsonLine(r));
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, r);
  }
}

TEST(JsonCodec, TripletAndReportRoundTrip) {
  SanitizationTriplet t;
  t.record = FixtureRecord();
  t.final_instruction = "Drop the name.";
  t.sanitized_text = "Patient was admitted.";
  SanitizationTarget group;
  group.key = "identity";
  group.value = "Ada; Okafor";
  group.is_group = true;
  group.weight = 0.25;
  group.label = SanitizationLabel::kAbstract;
  group.members = {{"first_name", "Ada"}, {"last_name", "Okafor"}};
  t.targets = {group};
  t.retention = {"admission_date"};
  t.per_target_instructions = {{"identity", "Drop ..."}};
  auto t2 = FromJsonLine<SanitizationTriplet>(ToJsonLine(t));
  ASSERT_TRUE(t2.ok()) << t2.status();
  EXPECT_EQ(*t2, t);

  LeakReport report;
  report.record_id = "r";
  report.category = "Medical Care";
  report.per_attribute = {{"a", LeakType::kInferenceLeak}};
  report.retention_per_attribute = {{"k", RetentionOutcome::kLost}};
  report.predictions["a"] = {"x", std::nullopt};
  report.DeriveFlags();
  auto r2 = FromJsonLine<LeakReport>(ToJsonLine(report));
  ASSERT_TRUE(r2.ok()) << r2.status();
  EXPECT_EQ(*r2, report);
}

TEST(JsonCodec, FieldNamesAreSnakeCase) {
  Json j = JsonCodec<Record>::ToJson(FixtureRecord());
  for (const char* key : {"id", "text", "record_type", "background_context",
                          "format_desc", "profile", "attributes",
                          "grouped_attributes", "generator_id"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["profile"].contains("date_of_birth"));
  EXPECT_TRUE(j["grouped_attributes"][0].contains("group_label"));
}

TEST(JsonCodec, RejectsWrongShapes) {
  EXPECT_FALSE(FromJsonLine<Record>("[1,2]").ok());
  EXPECT_FALSE(FromJsonLine<Record>("{\"id\": 5}").ok());
  EXPECT_FALSE(FromJsonLine<Record>("{not json").ok());
}

TEST(Labels, ParseAndName) {
  EXPECT_EQ(LabelName(SanitizationLabel::kAbstract), "ABSTRACT");
  EXPECT_EQ(*ParseLabel("DROP"), SanitizationLabel::kDrop);
  EXPECT_FALSE(ParseLabel("KEEP").ok());
  EXPECT_EQ(LeakTypeName(LeakType::kProximityLeak), "PROXIMITY_LEAK");
  EXPECT_EQ(*ParseRetention("LOST"), RetentionOutcome::kLost);
}

TEST(Text, Basics) {
  EXPECT_EQ(WordCount("  a b\t\nc  "), 3u);
  EXPECT_EQ(WordCount(""), 0u);
  EXPECT_EQ(NormalizeAnswer("  New   York. "), "New York");
  EXPECT_EQ(KeyDisplayName("clinic_address"), "clinic address");
  EXPECT_EQ(SnakeCase("Medical Care & Health"), "medical_care_health");
  EXPECT_EQ(LexicalTokens("Hello, World! it's"),
            (std::vector<std::string>{"hello", "world", "it", "s"}));
  EXPECT_EQ(FindAll("abcabc", "bc"), (std::vector<size_t>{1, 4}));
  EXPECT_EQ(StrCat("a", 1, 'c', std::string("d")), "a1cd");
}

TEST(Random, DeriveSeedSeparatesStreams) {
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 1000; ++i) {
    seen.insert(DeriveSeed(7, "a", i));
    seen.insert(DeriveSeed(7, "b", i));
  }
  EXPECT_EQ(seen.size(), 2000u);
  EXPECT_EQ(DeriveSeed(7, "a", 3), DeriveSeed(7, "a", 3));
  EXPECT_NE(DeriveSeed(7, "a", 3), DeriveSeed(8, "a", 3));
}

TEST(Random, WeightedIndexFrequency) {
  Rng rng(5);
  std::vector<double> w = {1, 3};
  int hits = 0;
  for (int i = 0; i < 20000; ++i) hits += WeightedIndex(rng, w) == 1;
  EXPECT_NEAR(hits / 20000.0, 0.75, 0.02);
}

TEST(Status, CodesRoundTrip) {
  absl::Status s = MakeError(ErrorCode::kUnsanitized, "still there");
  EXPECT_EQ(GetErrorCode(s), ErrorCode::kUnsanitized);
  EXPECT_EQ(ErrorCodeName(ErrorCode::kUnsanitized), "UNSANITIZED");
  absl::Status a = Annotate(s, "stage");
  EXPECT_EQ(GetErrorCode(a), ErrorCode::kUnsanitized);
  EXPECT_EQ(GetErrorCode(absl::OkStatus()), ErrorCode::kUnknown);
}

TEST(CalendarDate, ParseAndAge) {
  auto d = CalendarDate::Parse("2007-01-02");
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d->ToString(), "2007-01-02");
  EXPECT_EQ(d->YearsUntil(CalendarDate(2025, 1, 1)), 17);
  EXPECT_EQ(d->YearsUntil(CalendarDate(2025, 1, 2)), 18);
  EXPECT_FALSE(CalendarDate::Parse("2007-02-30").ok());
}

}  // namespace
}  // namespace privsynth
