// src/lexicon.cpp

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

#include "sensepolar/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <utility>

#include <json.hpp>

#include "sensepolar/error.hpp"
#include "sensepolar/numerics.hpp"
#include "sensepolar/sense_space.hpp"
#include "json_util.hpp"

namespace sensepolar {

using nlohmann::json;

using internal::RequireKeys;
using internal::RequireString;
using internal::SenseFromJson;
using internal::SenseToJson;
using internal::LineColumn;

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsTokenChar(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '\'' || c == '-';
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (IsTokenChar(c)) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<ContextExample> ContextsFromJson(const json &j, const std::string &where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array");
  std::vector<ContextExample> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    RequireKeys(j[i], {"sentence", "target_surface"}, at);
    out.push_back({RequireString(j[i], "sentence", at),
                   RequireString(j[i], "target_surface", at)});
  }
  return out;
}

json ContextsToJson(const std::vector<ContextExample> &contexts) {
  json arr = json::array();
  for (const auto &c : contexts) {
    arr.push_back(json{{"sentence", c.sentence}, {"target_surface", c.target_surface}});
  }
  return arr;
}

std::string PairName(std::size_t index, const PolarSensePair &pair) {
  return "pair " + std::to_string(index) + " (" + pair.pole_a.ToString() +
         " / " + pair.pole_b.ToString() + ")";
}

void ValidateSense(const SenseIdentifier &id, const std::string &where) {
  if (id.lemma.empty()) throw ValidationError(where + ": empty lemma");
  if (id.lemma != Lower(id.lemma)) {
    throw ValidationError(where + ": lemma \"" + id.lemma + "\" is not lowercase");
  }
  if (id.sense_number < 1) throw ValidationError(where + ": sense_number must be positive");
}

enum class LemmaMatch { kExact, kInflected, kNone };

bool SharesHalfPrefix(const std::string &surface, const std::string &lemma) {
  const std::size_t need = std::max<std::size_t>(1, (lemma.size() + 1) / 2);
  std::size_t common = 0;
  while (common < surface.size() && common < lemma.size() &&
         surface[common] == lemma[common]) {
    ++common;
  }
  return common >= need;
}

LemmaMatch MatchLemma(std::string_view surface, std::string_view lemma) {
  const auto s = Tokenize(surface);
  const auto l = Tokenize(lemma);
  if (s == l) return LemmaMatch::kExact;
  if (s.empty() || s.size() != l.size()) return LemmaMatch::kNone;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != l[i] && !SharesHalfPrefix(s[i], l[i])) return LemmaMatch::kNone;
  }
  return LemmaMatch::kInflected;
}

}  // namespace

std::string_view PosName(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return "noun";
    case PartOfSpeech::kVerb: return "verb";
    case PartOfSpeech::kAdjective: return "adjective";
    case PartOfSpeech::kAdverb: return "adverb";
  }
  return "noun";
}

char PosLetter(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun: return 'n';
    case PartOfSpeech::kVerb: return 'v';
    case PartOfSpeech::kAdjective: return 'a';
    case PartOfSpeech::kAdverb: return 'r';
  }
  return 'n';
}

PartOfSpeech ParsePosName(std::string_view name) {
  if (name == "noun") return PartOfSpeech::kNoun;
  if (name == "verb") return PartOfSpeech::kVerb;
  if (name == "adjective") return PartOfSpeech::kAdjective;
  if (name == "adverb") return PartOfSpeech::kAdverb;
  throw ParseError("unknown part of speech \"" + std::string(name) + "\"");
}

std::string SenseIdentifier::ToString() const {
  char num[16];
  std::snprintf(num, sizeof(num), "%02d", sense_number);
  return lemma + "." + PosLetter(pos) + "." + num;
}

SenseIdentifier SenseIdentifier::Parse(std::string_view key) {
  const auto bad = [&] {
    return ParseError("malformed sense key \"" + std::string(key) + "\"");
  };
  const auto last = key.rfind('.');
  if (last == std::string_view::npos || last < 3) throw bad();
  const auto mid = key.rfind('.', last - 1);
  if (mid == std::string_view::npos || mid == 0 || last - mid != 2) throw bad();
  SenseIdentifier id;
  id.lemma = std::string(key.substr(0, mid));
  switch (key[mid + 1]) {
    case 'n': id.pos = PartOfSpeech::kNoun; break;
    case 'v': id.pos = PartOfSpeech::kVerb; break;
    case 'a': id.pos = PartOfSpeech::kAdjective; break;
    case 'r': id.pos = PartOfSpeech::kAdverb; break;
    default: throw bad();
  }
  const auto digits = key.substr(last + 1);
  if (digits.empty() || digits.size() > 3) throw bad();
  int n = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    n = n * 10 + (c - '0');
  }
  if (n < 1) throw bad();
  id.sense_number = n;
  return id;
}

bool ContainsTokenSpan(std::string_view sentence, std::string_view target) {
  const auto hay = Tokenize(sentence);
  const auto needle = Tokenize(target);
  if (needle.empty()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

void ValidateLexicon(const Lexicon &lexicon) {
  std::set<std::pair<SenseIdentifier, SenseIdentifier>> seen;
  for (std::size_t i = 0; i < lexicon.pairs.size(); ++i) {
    const auto &pair = lexicon.pairs[i];
    const std::string name = PairName(i, pair);
    ValidateSense(pair.pole_a, name + " pole_a");
    ValidateSense(pair.pole_b, name + " pole_b");
    if (pair.pole_a == pair.pole_b) throw ValidationError(name + ": both poles are the same sense");
    if (pair.contexts_a.empty()) throw ValidationError(name + ": contexts_a is empty");
    if (pair.contexts_b.empty()) throw ValidationError(name + ": contexts_b is empty");
    for (const auto *contexts : {&pair.contexts_a, &pair.contexts_b}) {
      for (const auto &c : *contexts) {
        if (!ContainsTokenSpan(c.sentence, c.target_surface)) {
          throw ValidationError(name + ": target \"" + c.target_surface +
                                "\" does not occur in \"" + c.sentence + "\"");
        }
      }
    }
    auto key = std::minmax(pair.pole_a, pair.pole_b);
    if (!seen.emplace(key.first, key.second).second) {
      throw ValidationError(name + ": duplicate of an earlier pair");
    }
  }
}

Lexicon ParseLexicon(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error &e) {
    const auto [line, column] = LineColumn(bytes, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("lexicon is not valid JSON: " + std::string(e.what()), line, column);
  }
  RequireKeys(doc, {"version", "source", "pairs"}, "lexicon");
  Lexicon lex;
  lex.version = RequireString(doc, "version", "lexicon");
  lex.source = RequireString(doc, "source", "lexicon");
  const json &pairs = doc.at("pairs");
  if (!pairs.is_array()) throw ValidationError("lexicon: \"pairs\" must be an array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    RequireKeys(pairs[i], {"pole_a", "pole_b", "contexts_a", "contexts_b"}, where);
    PolarSensePair p;
    p.pole_a = SenseFromJson(pairs[i].at("pole_a"), where + ".pole_a");
    p.pole_b = SenseFromJson(pairs[i].at("pole_b"), where + ".pole_b");
    p.contexts_a = ContextsFromJson(pairs[i].at("contexts_a"), where + ".contexts_a");
    p.contexts_b = ContextsFromJson(pairs[i].at("contexts_b"), where + ".contexts_b");
    lex.pairs.push_back(std::move(p));
  }
  ValidateLexicon(lex);
  return lex;
}

std::string SerializeLexicon(const Lexicon &lexicon) {
  json pairs = json::array();
  for (const auto &p : lexicon.pairs) {
    pairs.push_back(json{{"pole_a", SenseToJson(p.pole_a)},
                         {"pole_b", SenseToJson(p.pole_b)},
                         {"contexts_a", ContextsToJson(p.contexts_a)},
                         {"contexts_b", ContextsToJson(p.contexts_b)}});
  }
  json doc{{"version", lexicon.version}, {"source", lexicon.source}, {"pairs", pairs}};
  return doc.dump(2) + "\n";
}

std::string_view ContextWarningKindName(ContextWarningKind kind) {
  switch (kind) {
    case ContextWarningKind::kInflection: return "INFLECTION";
    case ContextWarningKind::kSurfaceMismatch: return "SURFACE_MISMATCH";
    case ContextWarningKind::kPoleConfusion: return "POLE_CONFUSION";
  }
  return "SURFACE_MISMATCH";
}

std::vector<ContextWarning> ValidateContexts(const Lexicon &lexicon) {
  std::vector<ContextWarning> warnings;
  for (std::size_t i = 0; i < lexicon.pairs.size(); ++i) {
    const auto &pair = lexicon.pairs[i];
    for (PoleSide side : {PoleSide::kA, PoleSide::kB}) {
      const bool is_a = side == PoleSide::kA;
      const auto &own = is_a ? pair.pole_a : pair.pole_b;
      const auto &other = is_a ? pair.pole_b : pair.pole_a;
      const auto &contexts = is_a ? pair.contexts_a : pair.contexts_b;
      for (std::size_t c = 0; c < contexts.size(); ++c) {
        const std::string &surface = contexts[c].target_surface;
        const LemmaMatch own_match = MatchLemma(surface, own.lemma);
        if (own_match == LemmaMatch::kExact) continue;
        const LemmaMatch other_match = MatchLemma(surface, other.lemma);

        ContextWarning w;
        w.pair_index = i;
        w.side = side;
        w.context_index = c;
        std::string detail;
        if (other_match == LemmaMatch::kExact) {
          w.kind = ContextWarningKind::kPoleConfusion;
          detail = "matches the opposite pole \"" + other.lemma + "\"";
        } else if (own_match == LemmaMatch::kInflected) {
          w.kind = ContextWarningKind::kInflection;
          detail = "looks like an inflection of \"" + own.lemma + "\"";
        } else if (other_match == LemmaMatch::kInflected) {
          w.kind = ContextWarningKind::kPoleConfusion;
          detail = "looks like a form of the opposite pole \"" + other.lemma + "\"";
        } else {
          w.kind = ContextWarningKind::kSurfaceMismatch;
          detail = "does not match \"" + own.lemma + "\" (synonym or misspelling?)";
        }
        w.message = PairName(i, pair) + " side " + (is_a ? "a" : "b") +
                    " context " + std::to_string(c) + ": \"" + surface + "\" " + detail;
        warnings.push_back(std::move(w));
      }
    }
  }
  return warnings;
}

Lexicon MergeSimilarPairs(
    const Lexicon &lexicon,
    const std::map<SenseIdentifier, SenseEmbedding> &sense_embeddings,
    double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw PreconditionError("merge threshold must lie in (0, 1], got " +
                            std::to_string(threshold));
  }
  const auto lookup = [&](const SenseIdentifier &id) -> const Vector & {
    auto it = sense_embeddings.find(id);
    if (it == sense_embeddings.end()) {
      throw PreconditionError("no sense embedding for " + id.ToString());
    }
    return it->second.vector;
  };
  for (const auto &p : lexicon.pairs) {
    lookup(p.pole_a);
    lookup(p.pole_b);
  }

  Lexicon out;
  out.source = lexicon.source;
  out.version = lexicon.version;
  for (const auto &pair : lexicon.pairs) {
    const Vector &a = lookup(pair.pole_a);
    const Vector &b = lookup(pair.pole_b);
    PolarSensePair *survivor = nullptr;
    for (auto &kept : out.pairs) {
      if (CosineSimilarity(lookup(kept.pole_a), a) >= threshold &&
          CosineSimilarity(lookup(kept.pole_b), b) >= threshold) {
        survivor = &kept;
        break;
      }
    }
    if (survivor == nullptr) {
      out.pairs.push_back(pair);
      continue;
    }
    survivor->contexts_a.insert(survivor->contexts_a.end(), pair.contexts_a.begin(),
                                pair.contexts_a.end());
    survivor->contexts_b.insert(survivor->contexts_b.end(), pair.contexts_b.begin(),
                                pair.contexts_b.end());
  }
  return out;
}

}  // namespace sensepolar
