// Copyright 2026 The shapecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>

#include "shapecode/encoder.hpp"
#include "shapecode/raster.hpp"

namespace shapecode::svg {

/// Skeleton pixels in grey with lines (blue), arcs (red), points (green) and
/// an F1 arrow (orange) per element drawn on top. Lines are centred on
/// their anchor.
void write_overlay(std::ostream& out, const raster::BinaryRaster& skeleton, const encoder::WordCode& word);
void write_overlay(const std::filesystem::path& path, const raster::BinaryRaster& skeleton,
                   const encoder::WordCode& word);

}  // namespace shapecode::svg
