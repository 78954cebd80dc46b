// tests/test_commands.cpp

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

#include <random>
#include <set>
#include <sstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "sensepolar/commands.hpp"
#include "sensepolar/embedding_io.hpp"
#include "sensepolar/error.hpp"
#include "sensepolar/eval.hpp"
#include "sensepolar/space_io.hpp"
#include "support/fixtures.hpp"

using namespace sensepolar;
using namespace sensepolar::testing;
namespace cli = sensepolar::cli;

namespace {

struct Capture {
  std::ostringstream out, err;
  cli::Streams streams(bool quiet = false) { return {out, err, quiet}; }
};

// Two-pair lexicon whose directions are the 2-D standard basis.
void WriteIdentityFixture(const TempDir &dir) {
  const Lexicon lex = SyntheticLexicon(2);
  WriteFile(dir / "lex.json", SerializeLexicon(lex));
  std::string lines;
  for (std::size_t i = 0; i < 2; ++i) {
    Vector b(2);
    b[i] = 1.0;
    EmbeddingRecord ra = Record(Vector(2), "toy", cli::ContextKey(lex.pairs[i].pole_a, 'a', 0));
    EmbeddingRecord rb = Record(b, "toy", cli::ContextKey(lex.pairs[i].pole_b, 'b', 0));
    lines += SerializeEmbeddingRecord(ra) + "\n" + SerializeEmbeddingRecord(rb) + "\n";
  }
  WriteFile(dir / "emb.jsonl", lines);
}

void BuildFixtureSpace(const TempDir &dir, const std::string &out, bool with_mean = false) {
  Capture c;
  cli::BuildSpaceOptions o;
  o.lexicon_path = DataPath("sample_lexicon.json");
  o.embeddings_path = DataPath("sample_embeddings.jsonl");
  o.out_path = dir / out;
  if (with_mean) o.mean_corpus_path = DataPath("sample_corpus.jsonl");
  cli::BuildSpaceCommand(o, c.streams(true));
}

void TransformFile(const std::string &space, const std::string &in, const std::string &out,
                   bool normalize = false) {
  Capture c;
  cli::TransformOptions o;
  o.space_path = space;
  o.embeddings_path = in;
  o.out_path = out;
  o.normalize = normalize;
  cli::TransformCommand(o, c.streams());
}

}  // namespace

TEST_CASE("context keys") {
  CHECK(cli::ContextKey(Sense("right.a.02"), 'b', 3) == "right.a.02#b/3");
  const Lexicon lex = ParseLexicon(ReadFile(DataPath("sample_lexicon.json")));
  const auto slots = cli::RequiredContexts(lex);
  std::set<std::string> ids;
  for (const auto &s : slots) CHECK(ids.insert(s.context_id).second);
}

TEST_CASE("build-space on the fixtures") {
  TempDir dir("cmd");
  Capture c;
  cli::BuildSpaceOptions o;
  o.lexicon_path = DataPath("sample_lexicon.json");
  o.embeddings_path = DataPath("sample_embeddings.jsonl");
  o.out_path = dir / "s.space";
  cli::BuildSpaceCommand(o, c.streams());
  CHECK(c.out.str().find("n 24\nd 16\nrank 16") != std::string::npos);
  CHECK(c.out.str().find("mean absent") != std::string::npos);
  CHECK(c.err.str().find("warning: ") != std::string::npos);
  const PolarSpace space = LoadSpace(dir / "s.space");
  CHECK(space.n() == 24);
  CHECK(space.model_id() == "synthetic-16");

  Capture quiet;
  o.out_path = dir / "q.space";
  cli::BuildSpaceCommand(o, quiet.streams(true));
  CHECK(quiet.out.str().empty());
  CHECK(quiet.err.str().empty());
}

TEST_CASE("build-space names a missing context") {
  TempDir dir("cmd");
  const std::string all = ReadFile(DataPath("sample_embeddings.jsonl"));
  std::istringstream in(all);
  std::string line, kept, dropped_id;
  while (std::getline(in, line)) {
    if (dropped_id.empty()) {
      dropped_id = ParseEmbeddingRecord(line).context_id;
      continue;
    }
    kept += line + "\n";
  }
  WriteFile(dir / "partial.jsonl", kept);
  cli::BuildSpaceOptions o;
  o.lexicon_path = DataPath("sample_lexicon.json");
  o.embeddings_path = dir / "partial.jsonl";
  o.out_path = dir / "s.space";
  Capture c;
  CHECK_THROWS_WITH_AS(cli::BuildSpaceCommand(o, c.streams(true)), doctest::Contains(dropped_id.c_str()),
                       PreconditionError);
}

TEST_CASE("build-space and transform are deterministic") {
  TempDir dir("cmd");
  BuildFixtureSpace(dir, "one.space", true);
  BuildFixtureSpace(dir, "two.space", true);
  CHECK(ReadFile(dir / "one.space") == ReadFile(dir / "two.space"));
  TransformFile(dir / "one.space", DataPath("sample_corpus.jsonl"), dir / "one.jsonl", true);
  TransformFile(dir / "two.space", DataPath("sample_corpus.jsonl"), dir / "two.jsonl", true);
  CHECK(ReadFile(dir / "one.jsonl") == ReadFile(dir / "two.jsonl"));
}

TEST_CASE("identity space through the command layer") {
  TempDir dir("cmd");
  WriteIdentityFixture(dir);
  Capture c;
  cli::BuildSpaceOptions o;
  o.lexicon_path = dir / "lex.json";
  o.embeddings_path = dir / "emb.jsonl";
  o.out_path = dir / "id.space";
  cli::BuildSpaceCommand(o, c.streams(true));
  const PolarSpace space = LoadSpace(dir / "id.space");
  CHECK(space.directions() == Matrix::Identity(2));

  WriteFile(dir / "x.jsonl", SerializeEmbeddingRecord(Record(Vector{0.75, -2.5}, "toy", "x")) + "\n");
  TransformFile(dir / "id.space", dir / "x.jsonl", dir / "px.jsonl");
  const auto p = ReadPolarEmbeddings(dir / "px.jsonl");
  REQUIRE(p.size() == 1);
  CHECK(p[0].scores == Vector{0.75, -2.5});
  CHECK(p[0].space_ref == space.space_ref());

  cli::TransformOptions t;
  t.space_path = dir / "id.space";
  t.embeddings_path = dir / "x.jsonl";
  t.out_path = dir / "nx.jsonl";
  t.normalize = true;
  t.mean_corpus_path = dir / "x.jsonl";
  cli::TransformCommand(t, c.streams());
  const auto n = ReadPolarEmbeddings(dir / "nx.jsonl");
  CHECK(n[0].normalized);
  CHECK(InfNorm(n[0].scores) == 0.0);
}

TEST_CASE("batch transform equals one-at-a-time") {
  TempDir dir("cmd");
  BuildFixtureSpace(dir, "s.space");
  std::mt19937_64 rng(61);
  std::string batch, singles;
  for (int i = 0; i < 100; ++i) {
    const std::string line =
        SerializeEmbeddingRecord(Record(RandomVector(rng, 16), "synthetic-16", "r" + std::to_string(i)));
    batch += line + "\n";
    WriteFile(dir / "one.jsonl", line + "\n");
    TransformFile(dir / "s.space", dir / "one.jsonl", dir / "pone.jsonl");
    singles += ReadFile(dir / "pone.jsonl");
  }
  WriteFile(dir / "batch.jsonl", batch);
  TransformFile(dir / "s.space", dir / "batch.jsonl", dir / "pbatch.jsonl");
  CHECK(ReadFile(dir / "pbatch.jsonl") == singles);
}

TEST_CASE("usage errors") {
  TempDir dir("cmd");
  BuildFixtureSpace(dir, "s.space");
  Capture c;

  cli::TransformOptions t;
  t.space_path = dir / "s.space";
  t.embeddings_path = DataPath("sample_corpus.jsonl");
  t.out_path = dir / "p.jsonl";
  t.normalize = true;
  CHECK_THROWS_AS(cli::TransformCommand(t, c.streams()), UsageError);
  t.normalize = false;
  t.mean_corpus_path = DataPath("sample_corpus.jsonl");
  CHECK_THROWS_AS(cli::TransformCommand(t, c.streams()), UsageError);

  t.mean_corpus_path.reset();
  t.out_path = DataPath("sample_corpus.jsonl");
  CHECK_THROWS_AS(cli::TransformCommand(t, c.streams()), UsageError);

  cli::SelectDimsOptions s;
  s.space_path = dir / "s.space";
  s.method = cli::SelectionMethod::kVariance;
  s.k = 3;
  s.out_path = dir / "r.space";
  CHECK_THROWS_AS(cli::SelectDimsCommand(s, c.streams()), UsageError);
  CHECK_THROWS_AS(cli::ParseSelectionMethod("random"), UsageError);

  t.out_path = dir / "p.jsonl";
  cli::TransformCommand(t, c.streams());
  cli::TopOptions top;
  top.space_path = dir / "s.space";
  top.polar_path = dir / "p.jsonl";
  top.k = 25;
  CHECK_THROWS_AS(cli::TopCommand(top, c.streams()), UsageError);
}

TEST_CASE("diff and explain refuse mixed spaces") {
  TempDir dir("cmd");
  BuildFixtureSpace(dir, "s.space");
  Capture c;
  cli::SelectDimsOptions s;
  s.space_path = dir / "s.space";
  s.k = 6;
  s.out_path = dir / "r.space";
  cli::SelectDimsCommand(s, c.streams(true));
  TransformFile(dir / "s.space", DataPath("sample_corpus.jsonl"), dir / "ps.jsonl");
  TransformFile(dir / "r.space", DataPath("sample_corpus.jsonl"), dir / "pr.jsonl");

  cli::DiffOptions d;
  d.space_path = dir / "s.space";
  d.polar_a_path = dir / "ps.jsonl";
  d.polar_b_path = dir / "pr.jsonl";
  CHECK_THROWS_AS(cli::DiffCommand(d, c.streams()), ContractViolation);
  d.polar_b_path = dir / "ps.jsonl";
  d.index_b = 1;
  cli::DiffCommand(d, c.streams());
  const auto j = nlohmann::json::parse(c.out.str());
  CHECK(j["dimensions"].size() == 5);

  cli::ExplainOptions e;
  e.space_path = dir / "s.space";
  e.group_a_path = dir / "ps.jsonl";
  e.group_b_path = dir / "pr.jsonl";
  CHECK_THROWS_AS(cli::ExplainCommand(e, c.streams()), ContractViolation);
}

TEST_CASE("validate-lexicon reports warnings") {
  Capture c;
  cli::ValidateLexiconCommand({DataPath("sample_lexicon.json")}, c.streams());
  CHECK(c.out.str() == "24 pair(s), 8 warning(s)\n");
  CHECK(c.err.str().find("POLE_CONFUSION") != std::string::npos);
}

TEST_CASE("train and evaluate") {
  TempDir dir("cmd");
  std::string lines;
  for (int i = 0; i < 20; ++i) {
    const double x = (i % 2 == 0 ? 1.0 : -1.0) * (1.0 + 0.1 * i);
    lines += SerializeLabeledExample({Vector{x, 0.5}, i % 2 == 0 ? 1 : 0}) + "\n";
  }
  WriteFile(dir / "d.jsonl", lines);
  Capture c;
  cli::TrainOptions t;
  t.data_path = dir / "d.jsonl";
  t.out_path = dir / "m.json";
  t.epochs = 300;
  t.learning_rate = 0.5;
  cli::TrainCommand(t, c.streams());
  cli::EvaluateCommand({dir / "m.json", dir / "d.jsonl"}, c.streams());
  CHECK(c.out.str().find(R"({"accuracy":1.0,"f1":1.0})") != std::string::npos);
}
