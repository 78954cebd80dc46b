// include/sensepolar/space_io.hpp

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

#include <string>
#include <string_view>

#include "sensepolar/sense_space.hpp"

namespace sensepolar {

/// Binary separator between the JSON header and the float payload.
inline constexpr std::string_view kSpaceBinaryMarker = "\nBINARY\n";

/// Space file layout:
///   {"version","model_id","n","d","rcond_used","has_mean","dimension_labels"}
///   "\nBINARY\n"
///   directions        n*d little-endian float32, row-major
///   inverse_transform n*d little-endian float32, row-major
///   mean_polar        n   little-endian float32, only when has_mean
/// Values are rounded to float32 on write, so a loaded space differs from
/// the in-memory one at float32 precision; save(load(bytes)) == bytes.
std::string SerializeSpace(const PolarSpace &space);
PolarSpace ParseSpace(std::string_view bytes);

void SaveSpace(const PolarSpace &space, const std::string &path);
PolarSpace LoadSpace(const std::string &path);

}  // namespace sensepolar
