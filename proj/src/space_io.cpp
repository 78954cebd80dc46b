// src/space_io.cpp

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

#include "sensepolar/space_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include <json.hpp>

#include "json_util.hpp"
#include "sensepolar/embedding_io.hpp"
#include "sensepolar/error.hpp"

namespace sensepolar {

using nlohmann::json;

namespace {

constexpr const char *kSpaceFormatVersion = "1";

void AppendFloat32(std::string &out, double x) {
  const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(x));
  for (int shift = 0; shift < 32; shift += 8)
    out.push_back(static_cast<char>((bits >> shift) & 0xffu));
}

double ReadFloat32(std::string_view bytes, std::size_t offset) {
  std::uint32_t bits = 0;
  for (int i = 0; i < 4; ++i)
    bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
  return static_cast<double>(std::bit_cast<float>(bits));
}

std::size_t RequireCount(const json &header, const char *key) {
  const json &v = header.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
    throw ValidationError(std::string("space header: \"") + key +
                          "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string SerializeSpace(const PolarSpace &space) {
  json labels = json::array();
  for (const auto &l : space.dimension_labels()) {
    labels.push_back(json{{"pole_a", internal::SenseToJson(l.pole_a)},
                          {"pole_b", internal::SenseToJson(l.pole_b)}});
  }
  const json header{{"version", kSpaceFormatVersion},
                    {"model_id", space.model_id()},
                    {"n", space.n()},
                    {"d", space.d()},
                    {"rcond_used", space.rcond_used()},
                    {"has_mean", space.mean_polar().has_value()},
                    {"dimension_labels", labels}};
  std::string out = header.dump();
  out += kSpaceBinaryMarker;
  const std::size_t floats = 2 * space.n() * space.d() + (space.mean_polar() ? space.n() : 0);
  out.reserve(out.size() + 4 * floats);
  for (double x : space.directions().values()) AppendFloat32(out, x);
  for (double x : space.inverse_transform().values()) AppendFloat32(out, x);
  if (space.mean_polar()) {
    for (double x : space.mean_polar()->values()) AppendFloat32(out, x);
  }
  return out;
}

PolarSpace ParseSpace(std::string_view bytes) {
  const auto marker = bytes.find(kSpaceBinaryMarker);
  if (marker == std::string_view::npos) {
    throw ParseError("space file has no BINARY marker");
  }
  const std::string_view header_text = bytes.substr(0, marker);
  json header;
  try {
    header = json::parse(header_text.begin(), header_text.end());
  } catch (const json::parse_error &e) {
    const auto [line, column] =
        internal::LineColumn(header_text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("space header is not valid JSON: " + std::string(e.what()),
                     line, column);
  }
  internal::RequireKeys(header,
                        {"version", "model_id", "n", "d", "rcond_used", "has_mean",
                         "dimension_labels"},
                        "space header");
  const std::string version = internal::RequireString(header, "version", "space header");
  if (version != kSpaceFormatVersion) {
    throw ValidationError("unsupported space format version \"" + version + "\"");
  }
  const std::string model_id = internal::RequireString(header, "model_id", "space header");
  const std::size_t n = RequireCount(header, "n");
  const std::size_t d = RequireCount(header, "d");
  if (!header.at("rcond_used").is_number()) {
    throw ValidationError("space header: \"rcond_used\" must be a number");
  }
  const double rcond = header.at("rcond_used").get<double>();
  if (!header.at("has_mean").is_boolean()) {
    throw ValidationError("space header: \"has_mean\" must be a boolean");
  }
  const bool has_mean = header.at("has_mean").get<bool>();
  const json &label_json = header.at("dimension_labels");
  if (!label_json.is_array() || label_json.size() != n) {
    throw ValidationError("space header: expected " + std::to_string(n) +
                          " dimension labels");
  }
  std::vector<DimensionLabel> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "dimension_labels[" + std::to_string(i) + "]";
    internal::RequireKeys(label_json[i], {"pole_a", "pole_b"}, where);
    labels.push_back({internal::SenseFromJson(label_json[i].at("pole_a"), where + ".pole_a"),
                      internal::SenseFromJson(label_json[i].at("pole_b"), where + ".pole_b")});
  }

  const std::string_view payload = bytes.substr(marker + kSpaceBinaryMarker.size());
  const std::size_t floats = 2 * n * d + (has_mean ? n : 0);
  if (payload.size() != 4 * floats) {
    throw ParseError("space payload has " + std::to_string(payload.size()) +
                     " bytes, expected " + std::to_string(4 * floats));
  }
  std::size_t offset = 0;
  auto take = [&](std::size_t count) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i, offset += 4) v[i] = ReadFloat32(payload, offset);
    return v;
  };
  Matrix directions(n, d, take(n * d));
  Matrix inverse(n, d, take(n * d));
  std::optional<Vector> mean;
  if (has_mean) mean = Vector(take(n));
  return PolarSpace(std::move(labels), std::move(directions), std::move(inverse),
                    std::move(mean), model_id, rcond);
}

void SaveSpace(const PolarSpace &space, const std::string &path) {
  WriteFile(path, SerializeSpace(space));
}

PolarSpace LoadSpace(const std::string &path) { return ParseSpace(ReadFile(path)); }

}  // namespace sensepolar
