// tests/support/fixtures.hpp

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

#include <unistd.h>

#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sensepolar/lexicon.hpp"
#include "sensepolar/sense_space.hpp"

#ifndef SENSEPOLAR_DATA_DIR
#error "SENSEPOLAR_DATA_DIR must point at the repository data/ directory"
#endif

namespace sensepolar::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(SENSEPOLAR_DATA_DIR) + "/" + name;
}

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("sensepolar-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::string operator/(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline SenseIdentifier Sense(const std::string &key) { return SenseIdentifier::Parse(key); }

/// Lexicon of n pairs "a<i>.a.01" / "b<i>.a.01", one context per pole.
inline Lexicon SyntheticLexicon(std::size_t n) {
  Lexicon lex;
  lex.version = "1";
  lex.source = "synthetic";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = "alpha" + std::to_string(i), b = "beta" + std::to_string(i);
    lex.pairs.push_back({Sense(a + ".a.01"), Sense(b + ".a.01"),
                         {{"it was " + a, a}},
                         {{"it was " + b, b}}});
  }
  return lex;
}

/// Random sense embeddings (dimension d) for every sense of the lexicon.
inline std::map<SenseIdentifier, SenseEmbedding> RandomSenseEmbeddings(
    const Lexicon &lex, std::size_t d, std::mt19937_64 &rng) {
  std::map<SenseIdentifier, SenseEmbedding> out;
  for (const auto &p : lex.pairs) {
    for (const auto *s : {&p.pole_a, &p.pole_b}) {
      if (!out.contains(*s)) out.emplace(*s, SenseEmbedding{*s, RandomVector(rng, d), 1});
    }
  }
  return out;
}

inline EmbeddingRecord Record(Vector v, const std::string &model = "test-model",
                              const std::string &id = "ctx") {
  return EmbeddingRecord{"word", id, 0, std::move(v), model};
}

inline std::vector<DimensionLabel> Labels(std::size_t n) {
  std::vector<DimensionLabel> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({Sense("neg" + std::to_string(i) + ".a.01"),
                   Sense("pos" + std::to_string(i) + ".a.01")});
  }
  return out;
}

inline PolarSpace SpaceFromMatrix(const Matrix &directions,
                                  const std::string &model = "test-model") {
  return PolarSpace::FromDirections(Labels(directions.rows()), directions, model);
}

}  // namespace sensepolar::testing
