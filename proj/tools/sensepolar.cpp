// tools/sensepolar.cpp

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

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sensepolar/commands.hpp"
#include "sensepolar/error.hpp"

namespace {

constexpr int kExitRuntimeError = 1;
constexpr int kExitUsageError = 2;

}  // namespace

int main(int argc, char *argv[]) {
  using namespace sensepolar;
  using namespace sensepolar::cli;

  CLI::App app{
      "Builds an interpretable polar sense space from antonym sense pairs and\n"
      "contextual embeddings, transforms embeddings into it, and ranks,\n"
      "compares and explains its dimensions."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also follow the subcommand

  double rcond = kDefaultRcond;
  std::uint64_t seed = 0;
  std::string format_name = "json";
  bool quiet = false;
  app.add_option("--rcond", rcond, "Relative singular-value cutoff for the pseudoinverse")
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for anything randomized (training shuffles)")
      ->capture_default_str();
  app.add_option("--format", format_name, "Report format: json, tsv or markdown-table")
      ->capture_default_str();
  app.add_flag("--quiet", quiet, "Suppress diagnostics on stdout and warnings");

  BuildSpaceOptions build;
  double merge_threshold = 0.0;
  std::string build_mean;
  auto *build_cmd = app.add_subcommand("build-space", "Build a polar sense space file");
  build_cmd->add_option("--lexicon", build.lexicon_path, "Lexicon JSON")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--embeddings", build.embeddings_path,
                        "Context embeddings JSONL keyed lemma.p.NN#side/ordinal")
      ->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--out", build.out_path, "Output space file")->required();
  auto *merge_opt = build_cmd->add_option("--merge-threshold", merge_threshold,
                                          "Merge pairs whose pole embeddings both reach this cosine")
                        ->check(CLI::Validator(
                            [](std::string &s) -> std::string {
                              char *end = nullptr;
                              const double t = std::strtod(s.c_str(), &end);
                              const bool ok = !s.empty() && *end == '\0' && t > 0.0 && t <= 1.0;
                              return ok ? "" : "must be a number in (0, 1]";
                            },
                            "(0, 1]"));
  auto *build_mean_opt = build_cmd->add_option("--mean-corpus", build_mean,
                                                "Embeddings JSONL whose mean is stored for normalization")
                             ->check(CLI::ExistingFile);

  TransformOptions transform;
  std::string transform_mean;
  auto *transform_cmd = app.add_subcommand("transform", "Transform embeddings into polar coordinates");
  transform_cmd->add_option("--space", transform.space_path, "Space file")->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("--embeddings", transform.embeddings_path, "Embeddings JSONL")
      ->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("--out", transform.out_path, "Output polar JSONL")->required();
  transform_cmd->add_flag("--normalize", transform.normalize, "Subtract the mean polar embedding");
  auto *transform_mean_opt = transform_cmd->add_option("--mean-corpus", transform_mean,
                                                       "Embeddings JSONL to take the mean from")
                                 ->check(CLI::ExistingFile);
  transform_cmd->add_flag("--residual", transform.residual,
                          "Record |x - directions^T p| per embedding");

  TopOptions top;
  bool top_raw = false;
  auto *top_cmd = app.add_subcommand("top", "Report the top-k dimensions of each polar embedding");
  top_cmd->add_option("--space", top.space_path, "Space file")->required()->check(CLI::ExistingFile);
  top_cmd->add_option("--polar", top.polar_path, "Polar JSONL")->required()->check(CLI::ExistingFile);
  top_cmd->add_option("-k", top.k, "Number of dimensions")->capture_default_str();
  top_cmd->add_flag("--no-normalize", top_raw, "Report raw scores even if the space stores a mean");

  DiffOptions diff;
  bool diff_raw = false;
  auto *diff_cmd = app.add_subcommand("diff", "Dimensions in which two embeddings differ most");
  diff_cmd->add_option("--space", diff.space_path, "Space file")->required()->check(CLI::ExistingFile);
  diff_cmd->add_option("--a", diff.polar_a_path, "Polar JSONL holding embedding a")->required()->check(CLI::ExistingFile);
  diff_cmd->add_option("--b", diff.polar_b_path, "Polar JSONL holding embedding b")->required()->check(CLI::ExistingFile);
  diff_cmd->add_option("--a-index", diff.index_a, "Record of --a to use")->capture_default_str();
  diff_cmd->add_option("--b-index", diff.index_b, "Record of --b to use")->capture_default_str();
  diff_cmd->add_option("-k", diff.k, "Number of dimensions")->capture_default_str();
  diff_cmd->add_flag("--no-normalize", diff_raw, "Diff raw scores even if the space stores a mean");

  ExplainOptions explain;
  bool explain_raw = false;
  auto *explain_cmd = app.add_subcommand("explain", "Most discriminative dimensions between two groups");
  explain_cmd->add_option("--space", explain.space_path, "Space file")->required()->check(CLI::ExistingFile);
  explain_cmd->add_option("--group-a", explain.group_a_path, "Polar JSONL of group a")->required()->check(CLI::ExistingFile);
  explain_cmd->add_option("--group-b", explain.group_b_path, "Polar JSONL of group b")->required()->check(CLI::ExistingFile);
  explain_cmd->add_option("-k", explain.k, "Number of dimensions")->capture_default_str();
  explain_cmd->add_flag("--no-normalize", explain_raw, "Use raw scores even if the space stores a mean");

  SelectDimsOptions select;
  std::string method_name;
  std::string select_corpus;
  auto *select_cmd = app.add_subcommand("select-dims", "Reduce a space to k dimensions");
  select_cmd->add_option("--space", select.space_path, "Space file")->required()->check(CLI::ExistingFile);
  select_cmd->add_option("--method", method_name, "variance or orthogonality")->required();
  select_cmd->add_option("-k", select.k, "Dimensions to keep")->required();
  auto *select_corpus_opt = select_cmd->add_option("--corpus", select_corpus,
                                                   "Polar JSONL (variance method)")
                                ->check(CLI::ExistingFile);
  select_cmd->add_option("--out", select.out_path, "Output space file")->required();

  ValidateLexiconOptions validate;
  auto *validate_cmd = app.add_subcommand("validate-lexicon", "Parse a lexicon and report context warnings");
  validate_cmd->add_option("lexicon", validate.lexicon_path, "Lexicon JSON")->required()->check(CLI::ExistingFile);

  TrainOptions train;
  auto *train_cmd = app.add_subcommand("train", "Train a logistic-regression probe on JSONL features");
  train_cmd->add_option("--data", train.data_path, "Dataset JSONL")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--out", train.out_path, "Output model JSON")->required();
  train_cmd->add_option("--epochs", train.epochs, "Gradient-descent epochs")->capture_default_str();
  train_cmd->add_option("--learning-rate", train.learning_rate, "Step size")->capture_default_str();

  EvaluateOptions evaluate;
  auto *evaluate_cmd = app.add_subcommand("evaluate", "Accuracy and F1 of a trained probe");
  evaluate_cmd->add_option("--model", evaluate.model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--data", evaluate.data_path, "Dataset JSONL")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  Streams io{std::cout, std::cerr, quiet};
  try {
    const ReportFormat format = ParseReportFormat(format_name);
    if (*build_cmd) {
      build.rcond = rcond;
      if (*merge_opt) build.merge_threshold = merge_threshold;
      if (*build_mean_opt) build.mean_corpus_path = build_mean;
      BuildSpaceCommand(build, io);
    } else if (*transform_cmd) {
      if (*transform_mean_opt) transform.mean_corpus_path = transform_mean;
      TransformCommand(transform, io);
    } else if (*top_cmd) {
      top.format = format;
      top.normalize = !top_raw;
      TopCommand(top, io);
    } else if (*diff_cmd) {
      diff.format = format;
      diff.normalize = !diff_raw;
      DiffCommand(diff, io);
    } else if (*explain_cmd) {
      explain.format = format;
      explain.normalize = !explain_raw;
      ExplainCommand(explain, io);
    } else if (*select_cmd) {
      select.method = ParseSelectionMethod(method_name);
      if (*select_corpus_opt) select.corpus_polar_path = select_corpus;
      SelectDimsCommand(select, io);
    } else if (*validate_cmd) {
      ValidateLexiconCommand(validate, io);
    } else if (*train_cmd) {
      train.seed = seed;
      TrainCommand(train, io);
    } else if (*evaluate_cmd) {
      EvaluateCommand(evaluate, io);
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return 0;
}
