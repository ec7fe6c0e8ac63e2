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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "shapecode/codebook.hpp"
#include "shapecode/config.hpp"

namespace shapecode::testkit {

/// Writes `<dir>/isolated/<glyph>/<size>.pbm` for every acceptance glyph and size.
void write_acceptance_corpus(const std::filesystem::path& dir, const std::vector<int>& sizes);

/// Connectivity table holding the acceptance glyph ids, all non-joining.
codebook::ConnectivityTable acceptance_table();

struct EndToEndOptions {
    std::vector<int> corpus_sizes{50, 75, 100};
    double word_size = 60.0;
    std::size_t words = 200;
    std::uint32_t seed = 20260101;
    double gap = 0.3;  ///< between glyph boxes, in units of size
    EngineConfig config;
};

struct WordOutcome {
    std::vector<std::string> truth;
    std::vector<std::string> predicted;  ///< one per truth glyph, empty when nothing was recognized
};

struct EndToEndResult {
    codebook::Codebook book;
    codebook::BuildReport report;
    std::vector<WordOutcome> words;
    std::size_t glyphs = 0;
    std::size_t correct = 0;

    double accuracy() const { return glyphs ? static_cast<double>(correct) / static_cast<double>(glyphs) : 0.0; }
};

/// Renders the corpus into `workdir`, builds a codebook from it, then
/// recognizes random 2-3 glyph words drawn at the unseen word size.
EndToEndResult run_end_to_end(const EndToEndOptions& options, const std::filesystem::path& workdir);

}  // namespace shapecode::testkit
