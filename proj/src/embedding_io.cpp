// src/embedding_io.cpp

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

#include "sensepolar/embedding_io.hpp"

#include <sstream>

#include <json.hpp>

#include "json_util.hpp"
#include "sensepolar/error.hpp"

namespace sensepolar {

using nlohmann::json;

namespace {

json ParseLine(std::string_view line, const char *what) {
  try {
    return json::parse(line.begin(), line.end());
  } catch (const json::parse_error &e) {
    const auto [l, column] = internal::LineColumn(line, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what(), l, column);
  }
}

Vector NumberArray(const json &j, const char *key, const char *what) {
  const json &arr = j.at(key);
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError(std::string(what) + ": \"" + key +
                          "\" must be a non-empty array of numbers");
  }
  std::vector<double> values;
  values.reserve(arr.size());
  for (const auto &x : arr) {
    if (!x.is_number()) {
      throw ValidationError(std::string(what) + ": \"" + key + "\" holds a non-number");
    }
    values.push_back(x.get<double>());
  }
  return Vector(std::move(values));
}

json NumberArrayJson(const Vector &v) {
  json arr = json::array();
  for (double x : v.values()) arr.push_back(x);
  return arr;
}

// Rewrites the error message so it names the file and line.
template <typename Fn>
auto WithLocation(const JsonlReader &reader, Fn &&fn) {
  try {
    return fn();
  } catch (const ParseError &e) {
    throw ParseError(reader.path() + ":" + std::to_string(reader.line_number()) + ": " +
                     e.what());
  } catch (const ValidationError &e) {
    throw ValidationError(reader.path() + ":" + std::to_string(reader.line_number()) +
                          ": " + e.what());
  } catch (const NumericFailure &e) {
    throw NumericFailure(reader.path() + ":" + std::to_string(reader.line_number()) +
                         ": " + e.what());
  }
}

}  // namespace

EmbeddingRecord ParseEmbeddingRecord(std::string_view line) {
  const json j = ParseLine(line, "embedding record");
  const std::string where = "embedding record";
  internal::RequireKeys(j, {"word", "context_id", "layer", "model_id", "vector"}, where);
  EmbeddingRecord r;
  r.word = internal::RequireString(j, "word", where);
  r.context_id = internal::RequireString(j, "context_id", where);
  r.model_id = internal::RequireString(j, "model_id", where);
  const json &layer = j.at("layer");
  if (!layer.is_number_integer() || layer.get<long long>() < 0) {
    throw ValidationError(where + " " + r.context_id +
                          ": \"layer\" must be a non-negative integer");
  }
  r.layer = layer.get<int>();
  r.vector = NumberArray(j, "vector", "embedding record");
  return r;
}

std::string SerializeEmbeddingRecord(const EmbeddingRecord &record) {
  const json j{{"word", record.word},
               {"context_id", record.context_id},
               {"layer", record.layer},
               {"model_id", record.model_id},
               {"vector", NumberArrayJson(record.vector)}};
  return j.dump();
}

PolarEmbedding ParsePolarEmbedding(std::string_view line) {
  json j = ParseLine(line, "polar embedding");
  const std::string where = "polar embedding";
  std::optional<double> residual;
  if (j.is_object() && j.contains("residual_norm")) {
    if (!j.at("residual_norm").is_number()) {
      throw ValidationError(where + ": \"residual_norm\" must be a number");
    }
    residual = j.at("residual_norm").get<double>();
    j.erase("residual_norm");
  }
  internal::RequireKeys(j, {"word", "context_id", "space_ref", "normalized", "scores"},
                        where);
  PolarEmbedding p;
  p.word = internal::RequireString(j, "word", where);
  p.context_id = internal::RequireString(j, "context_id", where);
  p.space_ref = internal::RequireString(j, "space_ref", where);
  if (!j.at("normalized").is_boolean()) {
    throw ValidationError(where + ": \"normalized\" must be a boolean");
  }
  p.normalized = j.at("normalized").get<bool>();
  p.scores = NumberArray(j, "scores", "polar embedding");
  p.residual_norm = residual;
  return p;
}

std::string SerializePolarEmbedding(const PolarEmbedding &p) {
  json j{{"word", p.word},
         {"context_id", p.context_id},
         {"space_ref", p.space_ref},
         {"normalized", p.normalized},
         {"scores", NumberArrayJson(p.scores)}};
  if (p.residual_norm) j["residual_norm"] = *p.residual_norm;
  return j.dump();
}

JsonlReader::JsonlReader(const std::string &path) : path_(path), in_(path) {
  if (!in_) throw PreconditionError("cannot open " + path);
}

std::optional<std::string> JsonlReader::NextLine() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return std::nullopt;
}

std::optional<EmbeddingRecord> JsonlReader::NextEmbeddingRecord() {
  auto line = NextLine();
  if (!line) return std::nullopt;
  return WithLocation(*this, [&] { return ParseEmbeddingRecord(*line); });
}

std::optional<PolarEmbedding> JsonlReader::NextPolarEmbedding() {
  auto line = NextLine();
  if (!line) return std::nullopt;
  return WithLocation(*this, [&] { return ParsePolarEmbedding(*line); });
}

std::vector<EmbeddingRecord> ReadEmbeddingRecords(const std::string &path) {
  JsonlReader reader(path);
  std::vector<EmbeddingRecord> out;
  while (auto r = reader.NextEmbeddingRecord()) out.push_back(std::move(*r));
  return out;
}

std::vector<PolarEmbedding> ReadPolarEmbeddings(const std::string &path) {
  JsonlReader reader(path);
  std::vector<PolarEmbedding> out;
  while (auto p = reader.NextPolarEmbedding()) out.push_back(std::move(*p));
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string &path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PreconditionError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write to " + path + " failed");
}

}  // namespace sensepolar
