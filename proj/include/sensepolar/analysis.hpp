// include/sensepolar/analysis.hpp

// Copyright 2026 The sensepolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sensepolar/transform.hpp"

namespace sensepolar {

/// Dimensions ranked by |scores_a - scores_b|; signed_value = a - b.
struct DiffReport {
  std::string label_a;
  std::string label_b;
  std::vector<DimensionScore> dimension_scores;
  /// Largest out-of-span residual among the inputs (0 when none recorded).
  double residual_norm = 0.0;
};

struct SenseProfile {
  std::string word;
  std::string context_id;
  std::vector<DimensionScore> top;
};

/// Bias-analysis diff of two embeddings of the same space and
/// normalization state. Labels default to the embeddings' words.
DiffReport DiffDimensions(const PolarSpace &space, const PolarEmbedding &p_a,
                          const PolarEmbedding &p_b, std::size_t k);

/// Diff of the per-group mean scores (e.g. transformed [CLS] vectors of
/// the positive and negative class).
DiffReport ClassDiscriminative(const PolarSpace &space,
                               std::span<const PolarEmbedding> group_a,
                               std::span<const PolarEmbedding> group_b, std::size_t k,
                               std::string label_a = "group_a",
                               std::string label_b = "group_b");

SenseProfile MakeSenseProfile(const PolarSpace &space, const PolarEmbedding &p,
                              std::size_t k);

enum class ReportFormat { kJson, kTsv, kMarkdownTable };

/// "json", "tsv" or "markdown-table"; anything else is a UsageError.
ReportFormat ParseReportFormat(std::string_view name);

/// Deterministic rendering with values at 6 significant digits.
/// tsv rows: rank, pole_a, pole_b, signed_value, dimension_index.
std::string RenderReport(const SenseProfile &profile, ReportFormat format);
std::string RenderReport(const DiffReport &report, ReportFormat format);

}  // namespace sensepolar
