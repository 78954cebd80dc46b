// include/sensepolar/embedding_io.hpp

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

#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sensepolar/sense_space.hpp"

namespace sensepolar {

/// {"word","context_id","layer","model_id","vector":[...]}
EmbeddingRecord ParseEmbeddingRecord(std::string_view line);
std::string SerializeEmbeddingRecord(const EmbeddingRecord &record);

/// {"word","context_id","space_ref","normalized","scores":[...]} plus an
/// optional "residual_norm".
PolarEmbedding ParsePolarEmbedding(std::string_view line);
std::string SerializePolarEmbedding(const PolarEmbedding &p);

/// Streams non-blank lines of a JSON Lines file, tracking line numbers so
/// parse errors point at the offending line.
class JsonlReader {
 public:
  explicit JsonlReader(const std::string &path);

  /// Next non-blank line, or nullopt at end of file.
  std::optional<std::string> NextLine();
  /// Next parsed record; errors name the file and line.
  std::optional<EmbeddingRecord> NextEmbeddingRecord();
  std::optional<PolarEmbedding> NextPolarEmbedding();
  std::size_t line_number() const { return line_number_; }
  const std::string &path() const { return path_; }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

std::vector<EmbeddingRecord> ReadEmbeddingRecords(const std::string &path);
std::vector<PolarEmbedding> ReadPolarEmbeddings(const std::string &path);

std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view bytes);

}  // namespace sensepolar
