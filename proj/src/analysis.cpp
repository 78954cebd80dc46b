// src/analysis.cpp

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

#include "sensepolar/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "sensepolar/error.hpp"

namespace sensepolar {

using nlohmann::json;

namespace {

void CheckMember(const PolarSpace &space, const PolarEmbedding &p,
                 const PolarEmbedding &reference) {
  if (p.space_ref != reference.space_ref) {
    throw ContractViolation("embeddings come from different spaces: " +
                            reference.space_ref + " and " + p.space_ref);
  }
  if (p.space_ref != space.space_ref()) {
    throw ContractViolation("embedding " + p.context_id + " belongs to space " +
                            p.space_ref + ", not " + space.space_ref());
  }
  if (p.normalized != reference.normalized) {
    throw ContractViolation("cannot compare a normalized with an unnormalized embedding (" +
                            reference.context_id + ", " + p.context_id + ")");
  }
  if (p.scores.dim() != space.n()) {
    throw ContractViolation("embedding " + p.context_id + " has " +
                            std::to_string(p.scores.dim()) + " scores, space has n = " +
                            std::to_string(space.n()));
  }
}

PolarEmbedding GroupMean(const PolarSpace &space, std::span<const PolarEmbedding> group,
                         const PolarEmbedding &reference, const std::string &label) {
  std::vector<double> sum(space.n(), 0.0);
  for (const auto &p : group) {
    CheckMember(space, p, reference);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += p.scores[i];
  }
  for (double &x : sum) x /= static_cast<double>(group.size());
  PolarEmbedding mean;
  mean.scores = Vector(std::move(sum));
  mean.word = label;
  mean.context_id = label;
  mean.space_ref = reference.space_ref;
  mean.normalized = reference.normalized;
  double residual = 0.0;
  for (const auto &p : group) residual = std::max(residual, p.residual_norm.value_or(0.0));
  if (residual > 0.0) mean.residual_norm = residual;
  return mean;
}

std::string Sig6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// The same 6-digit value as a JSON number.
double Round6(double x) { return std::strtod(Sig6(x).c_str(), nullptr); }

json ScoresJson(const std::vector<DimensionScore> &scores) {
  json arr = json::array();
  for (const auto &s : scores) {
    arr.push_back(json{{"rank", s.rank},
                       {"dimension_index", s.dimension_index},
                       {"pole_a", s.pole_a.ToString()},
                       {"pole_b", s.pole_b.ToString()},
                       {"signed_value", Round6(s.signed_value)}});
  }
  return arr;
}

std::string TsvRows(const std::vector<DimensionScore> &scores) {
  std::string out;
  for (const auto &s : scores) {
    out += std::to_string(s.rank) + "\t" + s.pole_a.ToString() + "\t" +
           s.pole_b.ToString() + "\t" + Sig6(s.signed_value) + "\t" +
           std::to_string(s.dimension_index) + "\n";
  }
  return out;
}

// Pole a on the left, pole b on the right, score in between: a negative
// score leans left, a positive one right.
std::string MarkdownTable(const std::vector<DimensionScore> &scores) {
  std::string out = "| rank | pole_a | score | pole_b |\n|---:|:---|:---:|---:|\n";
  for (const auto &s : scores) {
    out += "| " + std::to_string(s.rank) + " | " + s.pole_a.ToString() + " | " +
           Sig6(s.signed_value) + " | " + s.pole_b.ToString() + " |\n";
  }
  return out;
}

}  // namespace

DiffReport DiffDimensions(const PolarSpace &space, const PolarEmbedding &p_a,
                          const PolarEmbedding &p_b, std::size_t k) {
  CheckMember(space, p_a, p_a);
  CheckMember(space, p_b, p_a);
  if (k < 1 || k > space.n()) {
    throw PreconditionError("k = " + std::to_string(k) + " outside [1, " +
                            std::to_string(space.n()) + "]");
  }
  const Vector diff = Subtract(p_a.scores, p_b.scores);
  const auto order = RankOrder(diff.values());
  DiffReport report;
  report.label_a = p_a.word;
  report.label_b = p_b.word;
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t i = order[r];
    const auto &label = space.dimension_labels()[i];
    report.dimension_scores.push_back({i, label.pole_a, label.pole_b, diff[i], r + 1});
  }
  report.residual_norm =
      std::max(p_a.residual_norm.value_or(0.0), p_b.residual_norm.value_or(0.0));
  return report;
}

DiffReport ClassDiscriminative(const PolarSpace &space,
                               std::span<const PolarEmbedding> group_a,
                               std::span<const PolarEmbedding> group_b, std::size_t k,
                               std::string label_a, std::string label_b) {
  if (group_a.empty() || group_b.empty()) {
    throw PreconditionError("class comparison needs two non-empty groups (sizes " +
                            std::to_string(group_a.size()) + ", " +
                            std::to_string(group_b.size()) + ")");
  }
  const PolarEmbedding &reference = group_a.front();
  const PolarEmbedding mean_a = GroupMean(space, group_a, reference, label_a);
  const PolarEmbedding mean_b = GroupMean(space, group_b, reference, label_b);
  return DiffDimensions(space, mean_a, mean_b, k);
}

SenseProfile MakeSenseProfile(const PolarSpace &space, const PolarEmbedding &p,
                              std::size_t k) {
  if (p.space_ref != space.space_ref()) {
    throw ContractViolation("embedding " + p.context_id + " belongs to space " +
                            p.space_ref + ", not " + space.space_ref());
  }
  return SenseProfile{p.word, p.context_id, TopK(space, p, k)};
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  if (name == "markdown-table") return ReportFormat::kMarkdownTable;
  throw UsageError("unknown report format \"" + std::string(name) +
                   "\" (expected json, tsv or markdown-table)");
}

std::string RenderReport(const SenseProfile &profile, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return json{{"word", profile.word},
                  {"context_id", profile.context_id},
                  {"top", ScoresJson(profile.top)}}
                 .dump() +
             "\n";
    case ReportFormat::kTsv:
      return TsvRows(profile.top);
    case ReportFormat::kMarkdownTable:
      return "**" + profile.word + "** (" + profile.context_id + ")\n\n" +
             MarkdownTable(profile.top) + "\n";
  }
  throw UsageError("unknown report format");
}

std::string RenderReport(const DiffReport &report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return json{{"label_a", report.label_a},
                  {"label_b", report.label_b},
                  {"residual_norm", Round6(report.residual_norm)},
                  {"dimensions", ScoresJson(report.dimension_scores)}}
                 .dump() +
             "\n";
    case ReportFormat::kTsv:
      return TsvRows(report.dimension_scores);
    case ReportFormat::kMarkdownTable:
      return "**" + report.label_a + "** vs **" + report.label_b + "**\n\n" +
             MarkdownTable(report.dimension_scores) + "\n";
  }
  throw UsageError("unknown report format");
}

}  // namespace sensepolar
