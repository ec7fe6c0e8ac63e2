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
#include <variant>

#include "shapecode/raster.hpp"

namespace shapecode::pnm {

/// PBM (P1/P4) decodes to a BinaryRaster, PGM (P2/P5) to a GrayRaster
/// rescaled to 0..255. Throws ParseError on malformed input.
using Image = std::variant<raster::BinaryRaster, raster::GrayRaster>;

Image read(std::istream& in);
Image read(const std::filesystem::path& path);

/// Reads any supported format and binarizes grayscale input with `threshold`.
raster::BinaryRaster read_binary(const std::filesystem::path& path, int threshold = 128);

/// Writes a plain (P1) or raw (P4) bitmap. Foreground is written as 1 (black).
void write_pbm(std::ostream& out, const raster::BinaryRaster& image, bool plain = true);
void write_pbm(const std::filesystem::path& path, const raster::BinaryRaster& image, bool plain = true);

void write_pgm(std::ostream& out, const raster::GrayRaster& image);

}  // namespace shapecode::pnm
