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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shapecode/encoder.hpp"
#include "shapecode/matcher.hpp"

namespace shapecode::codebook {

using encoder::SubWordCode;
using encoder::WordCode;
using matcher::MatchTolerances;

enum class Position { Isolated, Beginning, Middle, End };

inline constexpr Position kAllPositions[] = {Position::Isolated, Position::Beginning, Position::Middle,
                                             Position::End};

std::string_view to_string(Position p);
/// Accepts "isolated", "beginning", "middle", "end"; throws ParseError otherwise.
Position position_from_string(std::string_view s);

/// A glyph and its joining flags. `right` means the glyph joins the glyph
/// before it (the one to its right in the written line); `left` means it
/// joins the glyph after it.
struct Glyph {
    std::string id;
    bool right = false;
    bool left = false;

    friend bool operator==(const Glyph&, const Glyph&) = default;
};

class ConnectivityTable {
public:
    ConnectivityTable() = default;
    /// Throws PreconditionError on empty or duplicate ids.
    explicit ConnectivityTable(std::vector<Glyph> glyphs);

    /// Tab-separated `id<TAB>right<TAB>left` rows with T/F flags. Lines
    /// starting with '#' and blank lines are ignored. Throws ParseError.
    static ConnectivityTable parse(std::istream& in);
    static ConnectivityTable load(const std::filesystem::path& path);

    const std::vector<Glyph>& glyphs() const { return glyphs_; }
    const Glyph* find(std::string_view id) const;
    std::size_t right_count() const;
    std::size_t left_count() const;

private:
    std::vector<Glyph> glyphs_;
};

/// Placeholder for the glyph a sub-word spec is generated for.
inline constexpr std::string_view kTargetSlot = "*";

/// A run of 1 to 3 glyphs in logical order. The target glyph sits at index 0
/// for isolated and beginning forms, 1 for middle forms and last for end forms.
struct SubWordSpec {
    std::vector<std::string> glyphs;
    Position position = Position::Isolated;

    std::size_t target_index() const;
    /// Glyph ids joined with '+', as used for corpus directory names.
    std::string key() const;

    friend bool operator==(const SubWordSpec&, const SubWordSpec&) = default;
};

/// Contexts in which a glyph is generated at `position`, with the target
/// replaced by kTargetSlot. Beginning: target + right-joining glyph, or target
/// + two-sided glyph + right-joining glyph. Middle: left-joining glyph +
/// target + right-joining glyph. End: left-joining glyph + target, or
/// right-joining glyph + two-sided glyph + target. Isolated: the target alone.
std::vector<SubWordSpec> enumerate_subwords(const ConnectivityTable& table, Position position);

/// Glyphs that may fill the target slot at `position`.
std::vector<std::string> valid_targets(const ConnectivityTable& table, Position position);

/// Copy of `spec` with the target slot replaced by `glyph`.
SubWordSpec instantiate(const SubWordSpec& spec, const std::string& glyph);

/// Whether `spec` (with concrete glyph ids) is joinable at its position.
bool is_valid(const SubWordSpec& spec, const ConnectivityTable& table);

/// Longest element sequence contained in every code, built from elements of
/// the shortest code (directions kept) with lengths and axes averaged over
/// the aligned counterparts. Throws CodebookError when nothing is common.
SubWordCode common_code(const std::vector<SubWordCode>& codes, const MatchTolerances& t);

/// Scales each code to `reference_size` (factor reference_size / size) and
/// returns their common_code.
SubWordCode extract_common_code(const std::vector<SubWordCode>& codes, const std::vector<double>& sizes,
                                double reference_size, const MatchTolerances& t);

struct CharacterCode {
    std::string glyph;
    Position position = Position::Isolated;
    SubWordCode code;
    /// Set when no common code could be extracted; `code` is then empty.
    bool flagged = false;

    friend bool operator==(const CharacterCode&, const CharacterCode&) = default;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr double kReferenceSize = 100.0;

struct Codebook {
    std::string font;
    double reference_size = kReferenceSize;
    MatchTolerances tolerances;
    std::vector<CharacterCode> entries;  ///< sorted by (glyph, position)
    std::vector<SubWordCode> fingerprint;

    const CharacterCode* find(std::string_view glyph, Position position) const;

    friend bool operator==(const Codebook&, const Codebook&) = default;
};

/// `cfg` holds length thresholds for glyphs drawn at `reference_size`; the
/// copy returned suits glyphs drawn at `size`.
encoder::EncoderConfig encoder_for_size(const encoder::EncoderConfig& cfg, double size, double reference_size);

/// Encodes a word drawn at `size` and scales its code to `reference_size`.
WordCode encode_normalized(const raster::BinaryRaster& image, const encoder::EncoderConfig& cfg, double size,
                           double reference_size);

struct BuildOptions {
    std::string font = "font";
    std::vector<int> sizes;
    encoder::EncoderConfig encoder;  ///< thresholds at reference_size
    MatchTolerances tolerances;
    int threshold = 128;  ///< used for PGM rasters
    double reference_size = kReferenceSize;
};

struct BuildReport {
    std::size_t specs = 0;            ///< spec directories accepted
    std::size_t rasters = 0;          ///< rasters encoded
    std::size_t missing = 0;          ///< (spec, size) pairs without a raster
    std::size_t skipped = 0;          ///< directories rejected as unknown or invalid
    std::size_t flagged = 0;          ///< entries without a common code
    std::vector<std::string> warnings;
};

struct BuildResult {
    Codebook book;
    BuildReport report;
};

/// Reads `<corpus>/<position>/<glyph-seq>/<size>.pbm` (or .pgm) rasters,
/// encodes them in parallel, extracts a common code per spec and then per
/// (target glyph, position). Throws CorpusError when the corpus directory
/// does not exist. The fingerprint is set to all entry codes.
BuildResult build_codebook(const std::filesystem::path& corpus, const ConnectivityTable& table,
                           const BuildOptions& options);

/// Flattened, unscaled codes of one spec with their render sizes.
struct SpecSample {
    SubWordSpec spec;
    std::vector<SubWordCode> codes;
    std::vector<double> sizes;
};

/// The part of build_codebook that follows encoding.
BuildResult assemble_codebook(const std::vector<SpecSample>& samples, const BuildOptions& options);

/// Per font: entry codes that are not sequence_equiv to any entry of any other font.
void build_fingerprints(std::vector<Codebook>& books, const MatchTolerances& t);

/// Font whose fingerprint codes produce the most find_matches hits in
/// `word`; nullopt on a tie or when nothing matches.
std::optional<std::string> identify_font(const WordCode& word, const std::vector<Codebook>& books,
                                         const MatchTolerances& t);

struct Recognition {
    std::string glyph;
    Position position = Position::Isolated;
    std::size_t subword = 0;
    std::size_t offset = 0;
    std::vector<std::size_t> aligned;

    friend bool operator==(const Recognition&, const Recognition&) = default;
};

/// Greedy cover. Each round takes, among all entries matching inside an
/// uncovered run of some sub-word, the longest code, then the earliest
/// window, then the lowest alignment cost, then the smallest (glyph,
/// position). The covered span runs from the first to the last aligned
/// element. Results are returned in window order.
std::vector<Recognition> recognize(const WordCode& word, const Codebook& book, const MatchTolerances& t);

void save_codebook(const Codebook& book, const std::filesystem::path& path);
/// Throws CodebookError on a missing, malformed or wrong-version file.
Codebook load_codebook(const std::filesystem::path& path);

}  // namespace shapecode::codebook
