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

#include <sys/resource.h>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "privsynth/core/json_codec.h"
#include "privsynth/core/status.h"
#include "privsynth/io/cli.h"
#include "privsynth/io/config.h"
#include "privsynth/io/corpus.h"
#include "test_util.h"

namespace privsynth::io {
namespace {

namespace fs = std::filesystem;
using privsynth::testing::FixtureRecord;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            StrCat("privsynth_test_", ::getpid(), "_", counter_++);
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(std::string_view name) const {
    return (path_ / std::string(name)).string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void Spit(const std::string& path, std::string_view data) {
  std::ofstream(path, std::ios::binary) << data;
}

TEST(Corpus, RoundTripTenRecords) {
  TempDir dir;
  std::vector<Record> records;
  for (int i = 0; i < 10; ++i) {
    Record r = FixtureRecord(StrCat("r", i), 30 + i);
    r.text += "\n\"quoted\" line ü";
    records.push_back(r);
  }
  auto n = WriteCorpus<Record>(records, dir / "c.jsonl");
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(*n, 10u);
  auto back = ReadCorpus(dir / "c.jsonl");
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, records);
  std::string raw = Slurp(dir / "c.jsonl");
  EXPECT_EQ(std::count(raw.begin(), raw.end(), '\n'), 10);
}

TEST(Corpus, MalformedLineSkippedWithLineNumber) {
  TempDir dir;
  std::string good = JsonCodec<Record>::ToJson(FixtureRecord()).dump();
  Spit(dir / "c.jsonl", StrCat(good, "\n{not json\n", good, "\n"));
  ReadStats stats;
  auto back = ReadCorpus(dir / "c.jsonl", &stats);
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->size(), 2u);
  EXPECT_EQ(stats.skipped_lines, std::vector<size_t>{2});
}

TEST(Corpus, MissingFileIsIoError) {
  EXPECT_TRUE(HasErrorCode(ReadCorpus("/nonexistent/x.jsonl").status(),
                           ErrorCode::kIoError));
}

TEST(Corpus, EmptyStreamCreatesEmptyFile) {
  TempDir dir;
  auto n = WriteCorpus<Record>({}, dir / "empty.jsonl");
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(*n, 0u);
  ASSERT_TRUE(fs::exists(dir / "empty.jsonl"));
  EXPECT_EQ(fs::file_size(dir / "empty.jsonl"), 0u);
}

TEST(Corpus, TripletRoundTrip) {
  TempDir dir;
  SanitizationTriplet t;
  t.record = FixtureRecord();
  t.final_instruction = "Remove the name.";
  t.sanitized_text = "Patient [MASKED] was admitted.";
  SanitizationTarget target;
  target.key = "first_name";
  target.value = "Ada";
  t.targets = {target};
  t.retention = {"hospital"};
  std::vector<SanitizationTriplet> ts = {t, t};
  ts[1].record.id = "rec-2";
  ASSERT_TRUE(WriteCorpus<SanitizationTriplet>(ts, dir / "t.jsonl").ok());
  auto back = ReadTriplets(dir / "t.jsonl");
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, ts);
}

TEST(Corpus, WriteFailureLeavesNoPartialFile) {
  TempDir dir;
  const std::string path = dir / "big.jsonl";
  Spit(path, "previous contents\n");
  std::string payload(1 << 20, 'x');

  struct rlimit old_limit;
  ASSERT_EQ(getrlimit(RLIMIT_FSIZE, &old_limit), 0);
  auto old_handler = std::signal(SIGXFSZ, SIG_IGN);
  struct rlimit small = old_limit;
  small.rlim_cur = 4096;
  ASSERT_EQ(setrlimit(RLIMIT_FSIZE, &small), 0);
  absl::Status status = WriteFileAtomic(path, payload);
  setrlimit(RLIMIT_FSIZE, &old_limit);
  std::signal(SIGXFSZ, old_handler);

  EXPECT_TRUE(HasErrorCode(status, ErrorCode::kIoError)) << status;
  EXPECT_EQ(Slurp(path), "previous contents\n");
  size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir / ""))
    ++files;
  EXPECT_EQ(files, 1u);
}

TEST(Corpus, UnwritableDestinationIsIoError) {
  EXPECT_TRUE(HasErrorCode(WriteFileAtomic("/nonexistent/dir/x", "a"),
                           ErrorCode::kIoError));
}

// --- config ---

TEST(Config, DefaultsAndOverrides) {
  auto c = ConfigFromJson(nlohmann::json::object());
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->provider_kind, "mock");
  EXPECT_EQ(c->sanitization.tau, 512u);
  EXPECT_EQ(c->sanitization.retention, 2);
  EXPECT_DOUBLE_EQ(c->sanitization.group_omission_p, 0.3);
  EXPECT_EQ(c->mattr_window, 100u);
  auto o = ConfigFromJson(nlohmann::json::parse(
      R"({"seed": 9, "workers": 3, "sanitization": {"tau": 256},
          "refinement": {"beta": 0.0}})"));
  ASSERT_TRUE(o.ok()) << o.status();
  EXPECT_EQ(o->seed, 9u);
  EXPECT_EQ(o->sanitization.seed, 9u);
  EXPECT_EQ(o->synthesis.workers, 3u);
  EXPECT_EQ(o->sanitization.tau, 256u);
  auto round = ConfigFromJson(ConfigToJson(*o));
  ASSERT_TRUE(round.ok()) << round.status();
  EXPECT_EQ(ConfigToJson(*round), ConfigToJson(*o));
}

TEST(Config, UnknownKeyAndBadTypes) {
  auto unknown =
      ConfigFromJson(nlohmann::json::parse(R"({"sanitization": {"tua": 3}})"));
  EXPECT_TRUE(HasErrorCode(unknown.status(), ErrorCode::kConfigError));
  EXPECT_NE(std::string(unknown.status().message()).find("tua"),
            std::string::npos);
  EXPECT_TRUE(HasErrorCode(
      ConfigFromJson(nlohmann::json::parse(R"({"seed": "x"})")).status(),
      ErrorCode::kConfigError));
  EXPECT_TRUE(HasErrorCode(
      ConfigFromJson(nlohmann::json::parse(
                         R"({"sanitization": {"targets_min": 4,
                                              "targets_max": 2}})"))
          .status(),
      ErrorCode::kConfigError));
  TempDir dir;
  Spit(dir / "bad.json", "{ nope");
  EXPECT_TRUE(
      HasErrorCode(LoadConfig(dir / "bad.json").status(), ErrorCode::kConfigError));
}

// --- CLI ---

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult RunCommand(std::vector<std::string> args) {
  args.insert(args.begin(), "privsynth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, UnknownFlagIsUsageError) {
  auto r = RunCommand({"synthesize", "--bogus", "1", "--out", "x"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("CONFIG_ERROR"), std::string::npos);
  EXPECT_NE(r.err.find("synthesize"), std::string::npos);
  EXPECT_EQ(RunCommand({}).code, kExitUsage);
  EXPECT_EQ(RunCommand({"--help"}).code, kExitOk);
}

TEST(Cli, BadConfigFileIsUsageError) {
  TempDir dir;
  Spit(dir / "c.json", R"({"nonsense": 1})");
  auto r = RunCommand({"--config", dir / "c.json", "diversity", "--in", dir / "c.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("nonsense"), std::string::npos);
}

std::vector<std::string> Chain(const TempDir& dir, const std::string& tag,
                               int workers) {
  const std::string w = std::to_string(workers);
  const std::string records = dir / (tag + "_records.jsonl");
  const std::string triplets = dir / (tag + "_triplets.jsonl");
  const std::string metrics = dir / (tag + "_metrics.json");
  const std::string reports = dir / (tag + "_reports.jsonl");
  const std::vector<std::string> common = {"--provider", "mock", "--seed", "7",
                                           "--workers", w};
  auto with = [&](std::vector<std::string> tail) {
    std::vector<std::string> args = common;
    args.insert(args.end(), tail.begin(), tail.end());
    return RunCommand(args);
  };
  auto s = with({"synthesize", "--count", "10", "--out", records});
  EXPECT_EQ(s.code, kExitOk) << s.err;
  auto z = with({"sanitize", "--in", records, "--out", triplets});
  EXPECT_EQ(z.code, kExitOk) << z.err;
  auto e = with({"evaluate", "--cases", triplets, "--out", metrics,
                 "--reports", reports});
  EXPECT_EQ(e.code, kExitOk) << e.err;
  return {Slurp(records), Slurp(triplets), Slurp(reports), Slurp(metrics)};
}

TEST(Cli, ChainProducesMetricsDeterministically) {
  TempDir dir;
  auto a = Chain(dir, "a", 1);
  auto b = Chain(dir, "b", 1);
  auto c = Chain(dir, "c", 8);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  auto metrics = nlohmann::json::parse(a[3]);
  EXPECT_TRUE(metrics.contains("successful_attribute"));
  EXPECT_TRUE(metrics.contains("leak_type_ratios"));
  EXPECT_EQ(std::count(a[0].begin(), a[0].end(), '\n'), 10);

  auto d = RunCommand({"diversity", "--in", dir / "a_records.jsonl"});
  EXPECT_EQ(d.code, kExitOk) << d.err;
  auto report = nlohmann::json::parse(d.out);
  EXPECT_TRUE(report.contains("mattr"));
}

}  // namespace
}  // namespace privsynth::io
