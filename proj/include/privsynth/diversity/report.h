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

#ifndef PRIVSYNTH_DIVERSITY_REPORT_H_
#define PRIVSYNTH_DIVERSITY_REPORT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "privsynth/diversity/metrics.h"
#include "privsynth/llm/gateway.h"

namespace privsynth::diversity {

struct DiversityReport {
  double mattr = 0.0;
  double bigram_diversity = 0.0;
  double shannon_entropy = 0.0;
  // Unset for corpora with fewer than two documents.
  std::optional<double> mean_cosine;
  double vendi = 0.0;
  size_t corpus_size = 0;
};

struct ReportOptions {
  size_t mattr_window = 100;
  size_t embed_batch = 64;
};

struct LexicalSummary {
  double mattr = 0.0;
  double bigram_diversity = 0.0;
  double shannon_entropy = 0.0;
};

// Lexical metrics are computed per document and averaged. Documents too short
// for a metric are left out of that metric's mean.
absl::StatusOr<LexicalSummary> SummarizeLexical(
    std::span<const std::string> documents, size_t mattr_window);

// Fills the embedding-based fields from precomputed vectors (one per
// document).
absl::StatusOr<DiversityReport> BuildReport(
    std::span<const std::string> documents, std::span<const Vector> embeddings,
    const ReportOptions& options = {});

// Embeds every document through the gateway and builds the full report.
absl::StatusOr<DiversityReport> ComputeReport(
    std::span<const std::string> documents, llm::Gateway& gateway,
    const ReportOptions& options = {});

nlohmann::json ReportToJson(const DiversityReport& report);

}  // namespace privsynth::diversity

#endif  // PRIVSYNTH_DIVERSITY_REPORT_H_
