// src/json_util.cpp

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

#include "json_util.hpp"

#include <algorithm>

#include "sensepolar/error.hpp"

namespace sensepolar::internal {

using nlohmann::json;

// Maps a byte offset into (line, column), both 1-based.
std::pair<std::size_t, std::size_t> LineColumn(std::string_view bytes,
                                               std::size_t offset) {
  std::size_t line = 1, column = 1;
  offset = std::min(offset, bytes.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (bytes[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void RequireKeys(const json &j, std::initializer_list<const char *> keys,
                 const std::string &where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  for (const char *k : keys) {
    if (!j.contains(k)) throw ValidationError(where + ": missing field \"" + k + "\"");
  }
  for (const auto &item : j.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char *k) {
          return item.key() == k;
        }) == keys.end()) {
      throw ValidationError(where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

std::string RequireString(const json &j, const char *key, const std::string &where) {
  const json &v = j.at(key);
  if (!v.is_string()) throw ValidationError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

SenseIdentifier SenseFromJson(const json &j, const std::string &where) {
  RequireKeys(j, {"lemma", "pos", "sense_number"}, where);
  SenseIdentifier id;
  id.lemma = RequireString(j, "lemma", where);
  try {
    id.pos = ParsePosName(RequireString(j, "pos", where));
  } catch (const ParseError &e) {
    throw ValidationError(where + ": " + e.what());
  }
  const json &num = j.at("sense_number");
  if (!num.is_number_integer()) {
    throw ValidationError(where + ": \"sense_number\" must be an integer");
  }
  const auto n = num.get<long long>();
  if (n < 1 || n > 999) {
    throw ValidationError(where + ": \"sense_number\" must be in [1, 999]");
  }
  id.sense_number = static_cast<int>(n);
  return id;
}

json SenseToJson(const SenseIdentifier &id) {
  return json{{"lemma", id.lemma},
              {"pos", std::string(PosName(id.pos))},
              {"sense_number", id.sense_number}};
}

}  // namespace sensepolar::internal
