// tools/synth_embeddings.cpp

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

// Writes synthetic context embeddings for every context of a lexicon, keyed
// the way build-space expects, plus an optional corpus for normalization.
// Each sense gets a random centroid; its contexts scatter around it. Corpus
// vectors share a common offset so the mean is far from the origin, the
// way contextual embeddings cluster in a narrow cone.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "sensepolar/commands.hpp"
#include "sensepolar/embedding_io.hpp"
#include "sensepolar/lexicon.hpp"

namespace {

std::uint64_t HashKey(const std::string &s, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

sensepolar::Vector Gaussian(std::mt19937_64 &rng, std::size_t dim, double scale,
                            const std::vector<double> *offset = nullptr) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = normal(rng) + (offset ? (*offset)[i] : 0.0);
    v[i] = static_cast<double>(static_cast<float>(v[i]));
  }
  return sensepolar::Vector(std::move(v));
}

}  // namespace

int main(int argc, char *argv[]) {
  CLI::App app{"Generate synthetic embeddings for a lexicon"};
  std::string lexicon_path, out_path, corpus_path, model_id = "synthetic";
  std::size_t dim = 16, corpus_size = 200;
  std::uint64_t seed = 7;
  double noise = 0.1;
  app.add_option("--lexicon", lexicon_path, "Lexicon JSON")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "Context embeddings JSONL")->required();
  app.add_option("--corpus-out", corpus_path, "Corpus embeddings JSONL");
  app.add_option("--corpus-size", corpus_size, "Corpus records")->capture_default_str();
  app.add_option("--dim", dim, "Embedding dimension")->capture_default_str();
  app.add_option("--model-id", model_id, "model_id to stamp on records")->capture_default_str();
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--noise", noise, "Context scatter around the sense centroid")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    using namespace sensepolar;
    const Lexicon lexicon = ParseLexicon(ReadFile(lexicon_path));
    std::ofstream out(out_path, std::ios::trunc);
    for (const auto &slot : cli::RequiredContexts(lexicon)) {
      const std::string key = slot.sense.ToString();
      std::mt19937_64 centroid_rng(HashKey(key, seed));
      const Vector centroid = Gaussian(centroid_rng, dim, 1.0);
      std::mt19937_64 context_rng(HashKey(slot.context_id, seed + 1));
      std::vector<double> offset(centroid.values().begin(), centroid.values().end());
      EmbeddingRecord r{slot.sense.lemma, slot.context_id, 12,
                        Gaussian(context_rng, dim, noise, &offset), model_id};
      out << SerializeEmbeddingRecord(r) << "\n";
    }
    if (!corpus_path.empty()) {
      std::ofstream corpus(corpus_path, std::ios::trunc);
      std::mt19937_64 rng(seed + 2);
      const std::vector<double> cone(dim, 1.5);
      for (std::size_t i = 0; i < corpus_size; ++i) {
        EmbeddingRecord r{"w" + std::to_string(i), "corpus#" + std::to_string(i), 12,
                          Gaussian(rng, dim, 1.0, &cone), model_id};
        corpus << SerializeEmbeddingRecord(r) << "\n";
      }
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
