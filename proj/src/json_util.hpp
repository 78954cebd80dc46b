// src/json_util.hpp

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

// Internal JSON helpers shared by the file readers and writers.

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "sensepolar/lexicon.hpp"

namespace sensepolar::internal {

/// Exact key set: every listed key present, nothing else.
void RequireKeys(const nlohmann::json &j, std::initializer_list<const char *> keys,
                 const std::string &where);
std::string RequireString(const nlohmann::json &j, const char *key,
                          const std::string &where);

SenseIdentifier SenseFromJson(const nlohmann::json &j, const std::string &where);
nlohmann::json SenseToJson(const SenseIdentifier &id);

/// 1-based (line, column) of a byte offset.
std::pair<std::size_t, std::size_t> LineColumn(std::string_view bytes,
                                               std::size_t offset);

}  // namespace sensepolar::internal
