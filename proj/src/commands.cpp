// src/commands.cpp

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

#include "sensepolar/commands.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "sensepolar/embedding_io.hpp"
#include "sensepolar/error.hpp"
#include "sensepolar/eval.hpp"
#include "sensepolar/lexicon.hpp"
#include "sensepolar/space_io.hpp"
#include "sensepolar/transform.hpp"

namespace sensepolar::cli {

namespace {

// Refuses to write over any of the inputs.
void CheckOutputPath(const std::string &out,
                     std::initializer_list<const std::optional<std::string>> inputs) {
  namespace fs = std::filesystem;
  const fs::path target = fs::weakly_canonical(out);
  for (const auto &in : inputs) {
    if (in && fs::weakly_canonical(*in) == target) {
      throw UsageError("output path " + out + " is also an input");
    }
  }
}

PolarSpace MeanFromCorpus(const PolarSpace &space, const std::string &path) {
  MeanAccumulator acc(space);
  JsonlReader reader(path);
  while (auto r = reader.NextEmbeddingRecord()) acc.Add(*r);
  if (acc.count() == 0) throw PreconditionError("mean corpus " + path + " is empty");
  return space.WithMean(MatVec(space.inverse_transform(), acc.Mean()));
}

void CheckK(std::size_t k, const PolarSpace &space) {
  if (k < 1 || k > space.n()) {
    throw UsageError("k = " + std::to_string(k) + " must lie in [1, " +
                     std::to_string(space.n()) + "] for this space");
  }
}

void CheckSpaceRef(const PolarSpace &space, const PolarEmbedding &p, const std::string &path) {
  if (p.space_ref != space.space_ref()) {
    throw ContractViolation(path + ": embedding " + p.context_id + " has space_ref " +
                            p.space_ref + " but the space file has " + space.space_ref());
  }
}

PolarEmbedding MaybeNormalize(const PolarSpace &space, const PolarEmbedding &p,
                              bool enabled) {
  if (!enabled || p.normalized || !space.mean_polar()) return p;
  return Normalize(space, p);
}

std::vector<PolarEmbedding> ReadForSpace(const PolarSpace &space, const std::string &path,
                                         bool normalize) {
  std::vector<PolarEmbedding> out;
  for (auto &p : ReadPolarEmbeddings(path)) {
    CheckSpaceRef(space, p, path);
    out.push_back(MaybeNormalize(space, p, normalize));
  }
  return out;
}

}  // namespace

std::string ContextKey(const SenseIdentifier &sense, char side, std::size_t ordinal) {
  return sense.ToString() + "#" + side + "/" + std::to_string(ordinal);
}

std::vector<ContextSlot> RequiredContexts(const Lexicon &lexicon) {
  std::vector<ContextSlot> out;
  std::set<SenseIdentifier> seen;
  const auto add = [&](const SenseIdentifier &sense, char side,
                       const std::vector<ContextExample> &contexts) {
    if (!seen.insert(sense).second) return;
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      out.push_back({sense, ContextKey(sense, side, c), &contexts[c]});
    }
  };
  for (const auto &p : lexicon.pairs) {
    add(p.pole_a, 'a', p.contexts_a);
    add(p.pole_b, 'b', p.contexts_b);
  }
  return out;
}

void BuildSpaceCommand(const BuildSpaceOptions &opts, Streams io) {
  CheckOutputPath(opts.out_path,
                  {opts.lexicon_path, opts.embeddings_path, opts.mean_corpus_path});
  const Lexicon lexicon = ParseLexicon(ReadFile(opts.lexicon_path));
  if (!io.quiet) {
    for (const auto &w : ValidateContexts(lexicon)) {
      io.err << "warning: " << ContextWarningKindName(w.kind) << ": " << w.message << "\n";
    }
  }

  const auto slots = RequiredContexts(lexicon);
  std::map<std::string, std::size_t> wanted;  // context id -> slot
  for (std::size_t i = 0; i < slots.size(); ++i) wanted.emplace(slots[i].context_id, i);

  std::map<std::string, EmbeddingRecord> found;
  std::string model_id;
  JsonlReader reader(opts.embeddings_path);
  while (auto r = reader.NextEmbeddingRecord()) {
    if (!wanted.contains(r->context_id)) continue;
    if (found.empty()) {
      model_id = r->model_id;
    } else if (r->model_id != model_id) {
      throw ContractViolation(opts.embeddings_path + ":" +
                              std::to_string(reader.line_number()) + ": model \"" +
                              r->model_id + "\" differs from \"" + model_id + "\"");
    }
    const std::string key = r->context_id;
    if (!found.emplace(key, std::move(*r)).second) {
      throw ValidationError(opts.embeddings_path + ":" +
                            std::to_string(reader.line_number()) +
                            ": duplicate context_id " + key);
    }
  }

  std::vector<std::string> missing;
  for (const auto &slot : slots) {
    if (!found.contains(slot.context_id)) {
      missing.push_back(slot.sense.ToString() + " " + slot.context_id);
    }
  }
  if (!missing.empty()) {
    std::string msg = std::to_string(missing.size()) + " context embedding(s) missing from " +
                      opts.embeddings_path + ":";
    for (const auto &m : missing) msg += "\n  " + m;
    throw PreconditionError(msg);
  }

  std::map<SenseIdentifier, SenseEmbedding> sense_embeddings;
  for (std::size_t i = 0; i < slots.size();) {
    std::vector<EmbeddingRecord> records;
    std::size_t j = i;
    for (; j < slots.size() && slots[j].sense == slots[i].sense; ++j) {
      records.push_back(found.at(slots[j].context_id));
    }
    sense_embeddings.emplace(slots[i].sense, BuildSenseEmbedding(slots[i].sense, records));
    i = j;
  }

  const Lexicon merged = opts.merge_threshold
                             ? MergeSimilarPairs(lexicon, sense_embeddings, *opts.merge_threshold)
                             : lexicon;
  PolarSpace space = BuildSpace(merged, sense_embeddings, model_id, opts.rcond);
  if (opts.mean_corpus_path) space = MeanFromCorpus(space, *opts.mean_corpus_path);
  SaveSpace(space, opts.out_path);

  if (!io.quiet) {
    const std::size_t rank = NumericalRank(space.directions(), opts.rcond);
    io.out << "space_ref " << space.space_ref() << "\n"
           << "n " << space.n() << "\n"
           << "d " << space.d() << "\n"
           << "rank " << rank << (rank == space.d() ? " (directions span R^d)" : " (directions do not span R^d)") << "\n";
    if (merged.pairs.size() != lexicon.pairs.size()) {
      io.out << "merged " << lexicon.pairs.size() - merged.pairs.size() << " pair(s)\n";
    }
    io.out << "mean " << (space.mean_polar() ? "stored" : "absent") << "\n";
  }
}

void TransformCommand(const TransformOptions &opts, Streams io) {
  CheckOutputPath(opts.out_path,
                  {opts.space_path, opts.embeddings_path, opts.mean_corpus_path});
  PolarSpace space = LoadSpace(opts.space_path);
  if (opts.normalize) {
    if (opts.mean_corpus_path) {
      space = MeanFromCorpus(space, *opts.mean_corpus_path);
    } else if (!space.mean_polar()) {
      throw UsageError("--normalize needs a mean: the space stores none and no "
                       "--mean-corpus was given");
    }
  } else if (opts.mean_corpus_path) {
    throw UsageError("--mean-corpus only makes sense together with --normalize");
  }

  std::ofstream out(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw PreconditionError("cannot write " + opts.out_path);
  JsonlReader reader(opts.embeddings_path);
  std::size_t count = 0;
  while (auto r = reader.NextEmbeddingRecord()) {
    PolarEmbedding p = Transform(space, *r, opts.residual);
    if (opts.normalize) p = Normalize(space, p);
    out << SerializePolarEmbedding(p) << '\n';
    ++count;
  }
  out.close();
  if (!out) throw Error("write to " + opts.out_path + " failed");
  if (!io.quiet) io.out << "transformed " << count << " embedding(s)\n";
}

void TopCommand(const TopOptions &opts, Streams io) {
  const PolarSpace space = LoadSpace(opts.space_path);
  CheckK(opts.k, space);
  JsonlReader reader(opts.polar_path);
  while (auto p = reader.NextPolarEmbedding()) {
    CheckSpaceRef(space, *p, opts.polar_path);
    const PolarEmbedding q = MaybeNormalize(space, *p, opts.normalize);
    io.out << RenderReport(MakeSenseProfile(space, q, opts.k), opts.format);
  }
}

void DiffCommand(const DiffOptions &opts, Streams io) {
  const PolarSpace space = LoadSpace(opts.space_path);
  CheckK(opts.k, space);
  const auto a = ReadPolarEmbeddings(opts.polar_a_path);
  const auto b = ReadPolarEmbeddings(opts.polar_b_path);
  if (opts.index_a >= a.size() || opts.index_b >= b.size()) {
    throw UsageError("record index out of range (" + opts.polar_a_path + " has " +
                     std::to_string(a.size()) + ", " + opts.polar_b_path + " has " +
                     std::to_string(b.size()) + ")");
  }
  const PolarEmbedding &pa = a[opts.index_a];
  const PolarEmbedding &pb = b[opts.index_b];
  if (pa.space_ref != pb.space_ref) {
    throw ContractViolation("inputs come from different spaces: " + pa.space_ref + " (" +
                            opts.polar_a_path + ") vs " + pb.space_ref + " (" +
                            opts.polar_b_path + ")");
  }
  CheckSpaceRef(space, pa, opts.polar_a_path);
  const DiffReport report =
      DiffDimensions(space, MaybeNormalize(space, pa, opts.normalize),
                     MaybeNormalize(space, pb, opts.normalize), opts.k);
  io.out << RenderReport(report, opts.format);
}

void ExplainCommand(const ExplainOptions &opts, Streams io) {
  const PolarSpace space = LoadSpace(opts.space_path);
  CheckK(opts.k, space);
  const auto a = ReadPolarEmbeddings(opts.group_a_path);
  const auto b = ReadPolarEmbeddings(opts.group_b_path);
  if (a.empty() || b.empty()) {
    throw PreconditionError("both groups need at least one embedding");
  }
  if (a.front().space_ref != b.front().space_ref) {
    throw ContractViolation("groups come from different spaces: " + a.front().space_ref +
                            " (" + opts.group_a_path + ") vs " + b.front().space_ref + " (" +
                            opts.group_b_path + ")");
  }
  const auto ga = ReadForSpace(space, opts.group_a_path, opts.normalize);
  const auto gb = ReadForSpace(space, opts.group_b_path, opts.normalize);
  const DiffReport report =
      ClassDiscriminative(space, ga, gb, opts.k, opts.group_a_path, opts.group_b_path);
  io.out << RenderReport(report, opts.format);
}

SelectionMethod ParseSelectionMethod(const std::string &name) {
  if (name == "variance") return SelectionMethod::kVariance;
  if (name == "orthogonality") return SelectionMethod::kOrthogonality;
  throw UsageError("unknown selection method \"" + name +
                   "\" (expected variance or orthogonality)");
}

void SelectDimsCommand(const SelectDimsOptions &opts, Streams io) {
  CheckOutputPath(opts.out_path, {opts.space_path, opts.corpus_polar_path});
  const PolarSpace space = LoadSpace(opts.space_path);
  CheckK(opts.k, space);
  PolarSpace reduced = [&] {
    if (opts.method == SelectionMethod::kOrthogonality) {
      return SelectDimensionsOrthogonality(space, opts.k);
    }
    if (!opts.corpus_polar_path) {
      throw UsageError("variance selection needs --corpus (polar embeddings JSONL)");
    }
    std::vector<PolarEmbedding> corpus;
    for (auto &p : ReadPolarEmbeddings(*opts.corpus_polar_path)) {
      CheckSpaceRef(space, p, *opts.corpus_polar_path);
      corpus.push_back(std::move(p));
    }
    return SelectDimensionsVariance(space, corpus, opts.k);
  }();
  SaveSpace(reduced, opts.out_path);
  if (!io.quiet) {
    io.out << "space_ref " << reduced.space_ref() << "\n";
    for (const auto &l : reduced.dimension_labels()) io.out << l.ToString() << "\n";
  }
}

void ValidateLexiconCommand(const ValidateLexiconOptions &opts, Streams io) {
  const Lexicon lexicon = ParseLexicon(ReadFile(opts.lexicon_path));
  const auto warnings = ValidateContexts(lexicon);
  for (const auto &w : warnings) {
    io.err << "warning: " << ContextWarningKindName(w.kind) << ": " << w.message << "\n";
  }
  if (!io.quiet) {
    io.out << lexicon.pairs.size() << " pair(s), " << warnings.size() << " warning(s)\n";
  }
}

void TrainCommand(const TrainOptions &opts, Streams io) {
  CheckOutputPath(opts.out_path, {opts.data_path});
  const auto data = ReadDataset(opts.data_path);
  const LinearModel model = TrainLogistic(data, opts.epochs, opts.learning_rate, opts.seed);
  WriteFile(opts.out_path, SerializeModel(model));
  if (!io.quiet) io.out << "final_loss " << model.training_meta.final_loss << "\n";
}

void EvaluateCommand(const EvaluateOptions &opts, Streams io) {
  const LinearModel model = ParseModel(ReadFile(opts.model_path));
  const auto data = ReadDataset(opts.data_path);
  const Metrics m = Evaluate(model, data);
  io.out << nlohmann::json{{"accuracy", m.accuracy}, {"f1", m.f1}}.dump() << "\n";
}

}  // namespace sensepolar::cli
