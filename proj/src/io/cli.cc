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

#include "privsynth/io/cli.h"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "privsynth/core/json_codec.h"
#include "privsynth/core/parallel.h"
#include "privsynth/core/status.h"
#include "privsynth/diversity/report.h"
#include "privsynth/evaluation/aggregate.h"
#include "privsynth/evaluation/cascade.h"
#include "privsynth/io/corpus.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/http_provider.h"
#include "privsynth/llm/mock_provider.h"
#include "privsynth/sanitization/pipeline.h"
#include "privsynth/synthesis/name_source.h"
#include "privsynth/synthesis/pipeline.h"
#include "spdlog/spdlog.h"

namespace privsynth::io {
namespace {

namespace fs = std::filesystem;

// Flag values as parsed. Unset optionals leave the config untouched.
struct Flags {
  std::string config_path;
  bool strict = false;
  std::optional<uint64_t> seed;
  std::optional<std::string> provider;
  std::optional<size_t> workers;

  // synthesize
  std::optional<size_t> count;
  std::string names_path;
  std::string refinement_log;
  std::optional<double> beta;

  // sanitize
  std::optional<int> targets_min;
  std::optional<int> targets_max;
  std::optional<int> retention;
  std::optional<size_t> tau;

  // evaluate
  std::string reports_path;
  bool case_insensitive = false;

  // diversity
  std::optional<size_t> window;

  std::string in;
  std::string out;
};

std::string Sidecar(const std::string& out, std::string_view name) {
  fs::path parent = fs::path(out).parent_path();
  return (parent / std::string(name)).string();
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return kExitFailure;
}

void ApplyFlags(const Flags& f, PipelineConfig& c) {
  if (f.seed) c.seed = *f.seed;
  if (f.provider) c.provider_kind = *f.provider;
  if (f.workers) c.workers = *f.workers;
  if (f.count) c.synthesis.count = *f.count;
  if (f.beta) c.synthesis.refinement.beta = *f.beta;
  if (f.targets_min) c.sanitization.targets_min = *f.targets_min;
  if (f.targets_max) c.sanitization.targets_max = *f.targets_max;
  if (f.retention) c.sanitization.retention = *f.retention;
  if (f.tau) c.sanitization.tau = *f.tau;
  if (f.window) c.mattr_window = *f.window;
  if (f.case_insensitive) c.evaluation.case_insensitive = true;
  c.Propagate();
}

Json StepToJson(const synthesis::RefinementStep& s) {
  return {{"step", s.step},
          {"llm_score", s.llm_score},
          {"vendi_delta", s.vendi_delta},
          {"score", s.score},
          {"accepted", s.accepted}};
}

int RunSynthesize(const Flags& f, const PipelineConfig& c, llm::Gateway& gw,
                  std::ostream& out, std::ostream& err) {
  synthesis::NameTable names = synthesis::DefaultNameTable();
  if (!f.names_path.empty()) {
    absl::StatusOr<synthesis::NameTable> loaded =
        synthesis::LoadNameCsv(f.names_path);
    if (!loaded.ok()) return Fail(err, loaded.status());
    names = *std::move(loaded);
  }
  absl::StatusOr<synthesis::SynthesisOutput> result =
      synthesis::SynthesizeCorpus(gw, names, c.synthesis);
  if (!result.ok()) return Fail(err, result.status());

  absl::StatusOr<size_t> written =
      WriteCorpus<Record>(result->records, f.out);
  if (!written.ok()) return Fail(err, written.status());

  std::vector<Json> rejected;
  for (const synthesis::Rejection& r : result->rejected) {
    rejected.push_back(
        {{"record", JsonCodec<Record>::ToJson(r.record)}, {"reasons", r.reasons}});
  }
  absl::StatusOr<size_t> side =
      WriteJsonLines(Sidecar(f.out, "rejected.jsonl"), rejected);
  if (!side.ok()) return Fail(err, side.status());

  if (!f.refinement_log.empty()) {
    std::vector<Json> logs;
    for (size_t i = 0; i < result->records.size(); ++i) {
      Json steps = Json::array();
      for (const auto& s : result->refinement_logs[i]) {
        steps.push_back(StepToJson(s));
      }
      logs.push_back({{"id", result->records[i].id}, {"steps", steps}});
    }
    absl::StatusOr<size_t> n = WriteJsonLines(f.refinement_log, logs);
    if (!n.ok()) return Fail(err, n.status());
  }
  for (const auto& failure : result->failures) {
    spdlog::warn("candidate {} failed at {}: {}", failure.index, failure.stage,
                 failure.error);
  }
  out << fmt::format(
      "synthesized {} records ({} attempts, {} rejected, {} failed)\n",
      *written, result->attempts, result->rejected.size(),
      result->failures.size());
  if (*written < c.synthesis.count) {
    err << fmt::format("warning: only {} of {} records kept\n", *written,
                       c.synthesis.count);
  }
  bool failed = !result->failures.empty() || *written < c.synthesis.count;
  return f.strict && failed ? kExitFailure : kExitOk;
}

int RunSanitize(const Flags& f, const PipelineConfig& c, llm::Gateway& gw,
                std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::vector<Record>> records = ReadCorpus(f.in);
  if (!records.ok()) return Fail(err, records.status());
  sanitization::SanitizationOutput result =
      sanitization::SanitizeCorpus(gw, *records, c.sanitization);

  absl::StatusOr<size_t> written =
      WriteCorpus<SanitizationTriplet>(result.triplets, f.out);
  if (!written.ok()) return Fail(err, written.status());
  std::vector<Json> failures;
  for (const auto& failure : result.failures) {
    failures.push_back({{"record_id", failure.record_id},
                        {"stage", failure.stage},
                        {"error", failure.error}});
  }
  absl::StatusOr<size_t> side =
      WriteJsonLines(Sidecar(f.out, "sanitize_failures.jsonl"), failures);
  if (!side.ok()) return Fail(err, side.status());
  out << fmt::format("sanitized {} of {} records ({} failed)\n", *written,
                     records->size(), result.failures.size());
  return f.strict && !result.failures.empty() ? kExitFailure : kExitOk;
}

// Accepts evaluation cases or sanitization triplets, line by line.
absl::StatusOr<std::vector<evaluation::EvalCase>> ReadCases(
    const std::string& path) {
  return ReadJsonLines(path, [](const Json& j) -> absl::StatusOr<evaluation::EvalCase> {
    if (j.is_object() && j.contains("record")) {
      absl::StatusOr<SanitizationTriplet> triplet =
          JsonCodec<SanitizationTriplet>::FromJson(j);
      if (!triplet.ok()) return triplet.status();
      return evaluation::CaseFromTriplet(*triplet);
    }
    return evaluation::CaseFromJson(j);
  });
}

int RunEvaluate(const Flags& f, const PipelineConfig& c, llm::Gateway& gw,
                std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::vector<evaluation::EvalCase>> cases = ReadCases(f.in);
  if (!cases.ok()) return Fail(err, cases.status());
  std::vector<LeakReport> reports(cases->size());
  ParallelFor(cases->size(), c.workers, [&](size_t i) {
    reports[i] = evaluation::EvaluateRecord(gw, (*cases)[i], c.evaluation);
  });

  size_t indeterminate = 0;
  for (const LeakReport& r : reports) {
    if (r.indeterminate) {
      ++indeterminate;
      spdlog::warn("record {} indeterminate: {}", r.record_id, r.error);
    }
  }
  if (!f.reports_path.empty()) {
    absl::StatusOr<size_t> n = WriteCorpus<LeakReport>(reports, f.reports_path);
    if (!n.ok()) return Fail(err, n.status());
  }
  absl::StatusOr<evaluation::MetricsSummary> summary =
      evaluation::Aggregate(reports);
  if (!summary.ok()) return Fail(err, summary.status());
  absl::Status st = WriteFileAtomic(
      f.out, DumpJsonPretty(evaluation::SummaryToJson(*summary)) + "\n");
  if (!st.ok()) return Fail(err, st);
  out << fmt::format(
      "evaluated {} records ({} indeterminate): successful_attribute={:.4f} "
      "successful_record={:.4f}\n",
      reports.size(), indeterminate, summary->successful_attribute,
      summary->successful_record);
  return f.strict && indeterminate > 0 ? kExitFailure : kExitOk;
}

int RunDiversity(const Flags& f, const PipelineConfig& c, llm::Gateway& gw,
                 std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::vector<Record>> records = ReadCorpus(f.in);
  if (!records.ok()) return Fail(err, records.status());
  std::vector<std::string> texts;
  texts.reserve(records->size());
  for (const Record& r : *records) texts.push_back(r.text);
  diversity::ReportOptions options;
  options.mattr_window = c.mattr_window;
  absl::StatusOr<diversity::DiversityReport> report =
      diversity::ComputeReport(texts, gw, options);
  if (!report.ok()) return Fail(err, report.status());
  std::string body = DumpJsonPretty(diversity::ReportToJson(*report)) + "\n";
  if (f.out.empty()) {
    out << body;
    return kExitOk;
  }
  absl::Status st = WriteFileAtomic(f.out, body);
  if (!st.ok()) return Fail(err, st);
  out << fmt::format("vendi={:.4f} mattr={:.4f} over {} records\n",
                     report->vendi, report->mattr, report->corpus_size);
  return kExitOk;
}

}  // namespace

std::shared_ptr<llm::LlmProvider> MakeProvider(const PipelineConfig& config) {
  if (config.provider_kind == "http") {
    return std::make_shared<llm::HttpProvider>(config.provider);
  }
  llm::MockProvider::Options options;
  options.simulate = true;
  options.embedding_dim = config.mock_embedding_dim;
  return std::make_shared<llm::MockProvider>(options);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Synthetic private-record generation, sanitization and "
               "leakage evaluation",
               "privsynth"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_flag("--strict", f.strict,
               "Exit non-zero when any record fails or is indeterminate");
  app.add_option("--seed", f.seed, "Global seed");
  app.add_option("--provider", f.provider, "Model backend")
      ->check(CLI::IsMember({"mock", "http"}));
  app.add_option("--workers", f.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* syn = app.add_subcommand("synthesize", "Generate a record corpus");
  syn->add_option("--count", f.count, "Records to keep")
      ->check(CLI::PositiveNumber);
  syn->add_option("--out", f.out, "Output JSONL")->required();
  syn->add_option("--names", f.names_path, "Name CSV (name,weight)")
      ->check(CLI::ExistingFile);
  syn->add_option("--refinement-log", f.refinement_log,
                  "Per-record refinement steps (JSONL)");
  syn->add_option("--beta", f.beta, "Weight of the diversity term");

  CLI::App* san = app.add_subcommand("sanitize", "Sanitize a record corpus");
  san->add_option("--in", f.in, "Input records (JSONL)")->required();
  san->add_option("--out", f.out, "Output triplets (JSONL)")->required();
  san->add_option("--targets-min", f.targets_min)->check(CLI::PositiveNumber);
  san->add_option("--targets-max", f.targets_max)->check(CLI::PositiveNumber);
  san->add_option("--retention", f.retention)->check(CLI::NonNegativeNumber);
  san->add_option("--tau", f.tau, "Chunk size in bytes");

  CLI::App* ev = app.add_subcommand("evaluate", "Measure leakage");
  ev->add_option("--cases", f.in, "Cases or triplets (JSONL)")->required();
  ev->add_option("--out", f.out, "Metrics JSON")->required();
  ev->add_option("--reports", f.reports_path, "Per-record reports (JSONL)");
  ev->add_flag("--case-insensitive", f.case_insensitive,
               "Case-insensitive verbatim matching");

  CLI::App* div = app.add_subcommand("diversity", "Corpus diversity report");
  div->add_option("--in", f.in, "Input records (JSONL)")->required();
  div->add_option("--window", f.window, "MATTR window")
      ->check(CLI::PositiveNumber);
  div->add_option("--out", f.out, "Report JSON (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << ErrorCodeName(ErrorCode::kConfigError) << ": " << e.what() << "\n\n"
        << app.help();
    return kExitUsage;
  }

  PipelineConfig config;
  if (!f.config_path.empty()) {
    absl::StatusOr<PipelineConfig> loaded = LoadConfig(f.config_path);
    if (!loaded.ok()) {
      err << loaded.status().message() << "\n";
      return kExitUsage;
    }
    config = *std::move(loaded);
  }
  ApplyFlags(f, config);
  if (absl::Status st = config.Validate(); !st.ok()) {
    err << st.message() << "\n";
    return kExitUsage;
  }

  llm::Gateway gateway(MakeProvider(config),
                       llm::GatewayOptions::FromProviderConfig(config.provider));
  if (syn->parsed()) return RunSynthesize(f, config, gateway, out, err);
  if (san->parsed()) return RunSanitize(f, config, gateway, out, err);
  if (ev->parsed()) return RunEvaluate(f, config, gateway, out, err);
  return RunDiversity(f, config, gateway, out, err);
}

}  // namespace privsynth::io
