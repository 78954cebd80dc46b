// include/sensepolar/lexicon.hpp

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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sensepolar {

struct SenseEmbedding;

enum class PartOfSpeech { kNoun, kVerb, kAdjective, kAdverb };

/// "noun" / "verb" / "adjective" / "adverb".
std::string_view PosName(PartOfSpeech pos);
/// WordNet letter: n, v, a, r.
char PosLetter(PartOfSpeech pos);
PartOfSpeech ParsePosName(std::string_view name);

/// A WordNet-style sense key such as right.a.02. The lemma is lowercase and
/// may contain spaces for multi-word senses ("keep track").
struct SenseIdentifier {
  std::string lemma;
  PartOfSpeech pos = PartOfSpeech::kNoun;
  int sense_number = 1;

  /// "lemma.p.NN", e.g. "right.a.02".
  std::string ToString() const;
  /// Inverse of ToString. Throws ParseError on malformed keys.
  static SenseIdentifier Parse(std::string_view key);

  auto operator<=>(const SenseIdentifier &) const = default;
};

struct ContextExample {
  std::string sentence;
  std::string target_surface;  // token span realizing the sense in sentence

  bool operator==(const ContextExample &) const = default;
};

/// One interpretable dimension. pole_b plays s_{-i} in the direction
/// a_i = s_{-i} - s_i, so positive scores lean toward pole_b.
struct PolarSensePair {
  SenseIdentifier pole_a;
  SenseIdentifier pole_b;
  std::vector<ContextExample> contexts_a;
  std::vector<ContextExample> contexts_b;

  bool operator==(const PolarSensePair &) const = default;
};

struct Lexicon {
  std::vector<PolarSensePair> pairs;  // order == dimension order
  std::string source;
  std::string version;

  bool operator==(const Lexicon &) const = default;
};

/// Parses and validates the lexicon JSON document. Unknown fields are
/// rejected. Throws ParseError (syntax, with line/column) or ValidationError.
Lexicon ParseLexicon(std::string_view bytes);

/// Canonical JSON rendering; ParseLexicon(SerializeLexicon(x)) == x.
std::string SerializeLexicon(const Lexicon &lexicon);

/// Checks every invariant of a lexicon built in memory; throws
/// ValidationError naming the offending pair.
void ValidateLexicon(const Lexicon &lexicon);

/// True when target occurs in sentence as a contiguous run of tokens,
/// compared case-insensitively.
bool ContainsTokenSpan(std::string_view sentence, std::string_view target);

enum class ContextWarningKind {
  kInflection,       // surface is an inflected form of the pole lemma
  kSurfaceMismatch,  // unrelated surface: synonym or misspelling
  kPoleConfusion,    // surface realizes the opposite pole
};

std::string_view ContextWarningKindName(ContextWarningKind kind);

enum class PoleSide { kA, kB };

struct ContextWarning {
  std::size_t pair_index = 0;
  PoleSide side = PoleSide::kA;
  std::size_t context_index = 0;
  ContextWarningKind kind = ContextWarningKind::kSurfaceMismatch;
  std::string message;
};

/// One warning per context whose target_surface differs from its pole
/// lemma. Never modifies the lexicon.
std::vector<ContextWarning> ValidateContexts(const Lexicon &lexicon);

/// Drops every pair whose pole_a and pole_b sense embeddings both reach
/// `threshold` cosine similarity with an earlier surviving pair, appending
/// its contexts to that survivor. Threshold must lie in (0, 1].
Lexicon MergeSimilarPairs(
    const Lexicon &lexicon,
    const std::map<SenseIdentifier, SenseEmbedding> &sense_embeddings,
    double threshold);

}  // namespace sensepolar
