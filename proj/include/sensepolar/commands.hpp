// include/sensepolar/commands.hpp

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

// Subcommands of the sensepolar tool. Each one reads its inputs, writes
// data to files or `out`, diagnostics to `err`, and throws a
// sensepolar::Error on failure. Inputs are never modified.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sensepolar/analysis.hpp"
#include "sensepolar/lexicon.hpp"
#include "sensepolar/numerics.hpp"

namespace sensepolar::cli {

struct Streams {
  std::ostream &out;
  std::ostream &err;
  bool quiet = false;
};

/// Context id under which the embeddings file must provide the vector for
/// context `ordinal` of `sense` on pair side `side` ('a' or 'b'):
/// "right.a.02#b/0".
std::string ContextKey(const SenseIdentifier &sense, char side, std::size_t ordinal);

/// One context whose embedding build-space needs.
struct ContextSlot {
  SenseIdentifier sense;
  std::string context_id;
  const ContextExample *context = nullptr;  // points into the lexicon
};

/// Every slot build-space reads, grouped by sense in lexicon order. A sense
/// that appears in several pairs takes its contexts from its first
/// appearance only.
std::vector<ContextSlot> RequiredContexts(const Lexicon &lexicon);

struct BuildSpaceOptions {
  std::string lexicon_path;
  std::string embeddings_path;
  std::string out_path;
  double rcond = kDefaultRcond;
  std::optional<double> merge_threshold;
  std::optional<std::string> mean_corpus_path;
};
void BuildSpaceCommand(const BuildSpaceOptions &opts, Streams io);

struct TransformOptions {
  std::string space_path;
  std::string embeddings_path;
  std::string out_path;
  bool normalize = false;
  std::optional<std::string> mean_corpus_path;
  bool residual = false;
};
void TransformCommand(const TransformOptions &opts, Streams io);

struct TopOptions {
  std::string space_path;
  std::string polar_path;
  std::size_t k = 5;
  ReportFormat format = ReportFormat::kJson;
  bool normalize = true;  // applied when the space stores a mean
};
void TopCommand(const TopOptions &opts, Streams io);

struct DiffOptions {
  std::string space_path;
  std::string polar_a_path;
  std::string polar_b_path;
  std::size_t index_a = 0;  // line (0-based record) within each file
  std::size_t index_b = 0;
  std::size_t k = 5;
  ReportFormat format = ReportFormat::kJson;
  bool normalize = true;
};
void DiffCommand(const DiffOptions &opts, Streams io);

struct ExplainOptions {
  std::string space_path;
  std::string group_a_path;
  std::string group_b_path;
  std::size_t k = 5;
  ReportFormat format = ReportFormat::kJson;
  bool normalize = true;
};
void ExplainCommand(const ExplainOptions &opts, Streams io);

enum class SelectionMethod { kVariance, kOrthogonality };
SelectionMethod ParseSelectionMethod(const std::string &name);

struct SelectDimsOptions {
  std::string space_path;
  SelectionMethod method = SelectionMethod::kOrthogonality;
  std::size_t k = 1;
  std::optional<std::string> corpus_polar_path;
  std::string out_path;
};
void SelectDimsCommand(const SelectDimsOptions &opts, Streams io);

struct ValidateLexiconOptions {
  std::string lexicon_path;
};
void ValidateLexiconCommand(const ValidateLexiconOptions &opts, Streams io);

struct TrainOptions {
  std::string data_path;
  std::string out_path;
  int epochs = 500;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
};
void TrainCommand(const TrainOptions &opts, Streams io);

struct EvaluateOptions {
  std::string model_path;
  std::string data_path;
};
void EvaluateCommand(const EvaluateOptions &opts, Streams io);

}  // namespace sensepolar::cli
