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

#include "privsynth/diversity/report.h"

#include <algorithm>
#include <vector>

#include "privsynth/core/status.h"
#include "privsynth/core/text.h"

namespace privsynth::diversity {

absl::StatusOr<LexicalSummary> SummarizeLexical(
    std::span<const std::string> documents, size_t mattr_window) {
  if (documents.empty()) {
    return MakeError(ErrorCode::kEmptyInput, "empty corpus");
  }
  double mattr_sum = 0.0, bigram_sum = 0.0, entropy_sum = 0.0;
  size_t mattr_n = 0, bigram_n = 0, entropy_n = 0;
  for (const std::string& doc : documents) {
    const std::vector<std::string> tokens = LexicalTokens(doc);
    if (auto m = Mattr(tokens, mattr_window); m.ok()) {
      mattr_sum += *m;
      ++mattr_n;
    }
    if (auto b = BigramDiversity(tokens); b.ok()) {
      bigram_sum += *b;
      ++bigram_n;
    }
    if (auto h = ShannonEntropy(tokens); h.ok()) {
      entropy_sum += *h;
      ++entropy_n;
    }
  }
  if (mattr_n == 0) {
    return MakeError(ErrorCode::kEmptyInput, "no document has any tokens");
  }
  LexicalSummary summary;
  summary.mattr = mattr_sum / static_cast<double>(mattr_n);
  summary.bigram_diversity =
      bigram_n == 0 ? 0.0 : bigram_sum / static_cast<double>(bigram_n);
  summary.shannon_entropy = entropy_sum / static_cast<double>(entropy_n);
  return summary;
}

absl::StatusOr<DiversityReport> BuildReport(
    std::span<const std::string> documents, std::span<const Vector> embeddings,
    const ReportOptions& options) {
  if (embeddings.size() != documents.size()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     StrCat(documents.size(), " documents but ",
                            embeddings.size(), " embeddings"));
  }
  PRIVSYNTH_ASSIGN_OR_RETURN(LexicalSummary lexical,
                             SummarizeLexical(documents, options.mattr_window));
  DiversityReport report;
  report.corpus_size = documents.size();
  report.mattr = lexical.mattr;
  report.bigram_diversity = lexical.bigram_diversity;
  report.shannon_entropy = lexical.shannon_entropy;
  if (embeddings.size() >= 2) {
    PRIVSYNTH_ASSIGN_OR_RETURN(report.mean_cosine,
                               MeanPairwiseCosine(embeddings));
  }
  PRIVSYNTH_ASSIGN_OR_RETURN(report.vendi, VendiScore(embeddings));
  return report;
}

absl::StatusOr<DiversityReport> ComputeReport(
    std::span<const std::string> documents, llm::Gateway& gateway,
    const ReportOptions& options) {
  std::vector<Vector> embeddings;
  embeddings.reserve(documents.size());
  const size_t batch = std::max<size_t>(1, options.embed_batch);
  for (size_t start = 0; start < documents.size(); start += batch) {
    const size_t len = std::min(batch, documents.size() - start);
    PRIVSYNTH_ASSIGN_OR_RETURN(std::vector<Vector> part,
                               gateway.Embed(documents.subspan(start, len)));
    for (Vector& v : part) embeddings.push_back(std::move(v));
  }
  return BuildReport(documents, embeddings, options);
}

nlohmann::json ReportToJson(const DiversityReport& report) {
  nlohmann::json j;
  j["mattr"] = report.mattr;
  j["bigram_diversity"] = report.bigram_diversity;
  j["shannon_entropy"] = report.shannon_entropy;
  j["mean_cosine"] = report.mean_cosine.has_value()
                         ? nlohmann::json(*report.mean_cosine)
                         : nlohmann::json(nullptr);
  j["vendi"] = report.vendi;
  j["corpus_size"] = report.corpus_size;
  return j;
}

}  // namespace privsynth::diversity
