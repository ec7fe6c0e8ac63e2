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
#include <string>
#include <string_view>

#include "shapecode/encoder.hpp"
#include "shapecode/matcher.hpp"

namespace shapecode {

/// Every tunable threshold of the pipeline. Length thresholds of `encoder`
/// apply to glyphs drawn at the codebook reference size and are rescaled for
/// other sizes (see codebook::encoder_for_size).
struct EngineConfig {
    encoder::EncoderConfig encoder{.min_line_length = 30.0};
    matcher::MatchTolerances tolerances;
    int threshold = 128;  ///< PGM binarization threshold, 0-255

    /// Throws PreconditionError on a non-positive tolerance or a threshold outside 0-255.
    void validate() const;

    friend bool operator==(const EngineConfig&, const EngineConfig&) = default;
};

/// Sets one named field. Keys: delta_d, l_min, e_res, dot_max,
/// circular_ratio, delta_l, delta_alpha, delta_a, delta_b, delta_phi,
/// delta_beta, delta_gamma, delta_pt, threshold. Throws ParseError on an
/// unknown key or a malformed value.
void apply_setting(EngineConfig& cfg, std::string_view key, std::string_view value);

/// `key = value` lines; '#' starts a comment. Unlisted keys keep their
/// defaults. The result is validated; out-of-range values also throw
/// ParseError.
EngineConfig parse_config(std::istream& in);
EngineConfig load_config(const std::filesystem::path& path);

/// Serializes every key, readable by parse_config.
std::string format_config(const EngineConfig& cfg);

}  // namespace shapecode
