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

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "shapecode/geomfit.hpp"
#include "shapecode/raster.hpp"

namespace shapecode::encoder {

/// Eight-way chain code, anticlockwise from East on screen (y axis flipped),
/// plus the null direction 9.
enum class Freeman : std::uint8_t {
    East = 0,
    NorthEast = 1,
    North = 2,
    NorthWest = 3,
    West = 4,
    SouthWest = 5,
    South = 6,
    SouthEast = 7,
    Null = 9,
};

using Directions = std::array<Freeman, 3>;
inline constexpr Directions kNullDirections{Freeman::Null, Freeman::Null, Freeman::Null};

int to_int(Freeman f);
/// Throws ParseError for values outside {0..7, 9}.
Freeman freeman_from_int(int v);

/// Centroid of a dot.
struct PointCode {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const PointCode&, const PointCode&) = default;
};

using geomfit::EllipseArcCode;
using geomfit::LineSegmentCode;

using Primitive = std::variant<PointCode, LineSegmentCode, EllipseArcCode>;

struct PrimitiveCode {
    Primitive shape;
    Point2d anchor;               ///< centroid of the pixels that produced the primitive
    std::size_t pixel_count = 0;  ///< ordering tie-break only; not serialized

    friend bool operator==(const PrimitiveCode& a, const PrimitiveCode& b) {
        return a.shape == b.shape && a.anchor == b.anchor;
    }
};

/// c_i = (code_i, F_i1, F_i2, F_i3); F_ij points to element i + j.
struct CodedElement {
    PrimitiveCode code;
    Directions dirs = kNullDirections;

    friend bool operator==(const CodedElement&, const CodedElement&) = default;
};

struct SubWordCode {
    std::vector<CodedElement> elements;

    friend bool operator==(const SubWordCode&, const SubWordCode&) = default;
};

struct SubWordEntry {
    SubWordCode code;
    Directions dirs = kNullDirections;  ///< towards the following sub-word centroids
    Point2d centroid;

    friend bool operator==(const SubWordEntry&, const SubWordEntry&) = default;
};

struct WordCode {
    std::vector<SubWordEntry> subwords;

    bool empty() const { return subwords.empty(); }
    friend bool operator==(const WordCode&, const WordCode&) = default;
};

struct EncoderConfig {
    double line_tolerance = 1.0;     ///< Δd, px
    double min_line_length = 4.0;    ///< L_min, px; a run is kept iff longer
    double ellipse_residual = 0.4;   ///< E_res, mean first-order distance of a run to its fitted ellipse, px
    int dot_max = 9;                 ///< strokes with at most this many pixels are dots
    /// Arcs with b/a at or above this ratio are treated as circular: their
    /// rotation is undefined, so phi is reported as 0.
    double circular_ratio = 0.8;

    /// Throws PreconditionError unless every field is strictly positive.
    void validate() const;
    /// Copy with the length-valued thresholds multiplied by `factor`.
    EncoderConfig scaled(double factor) const;

    friend bool operator==(const EncoderConfig&, const EncoderConfig&) = default;
};

/// Null when from == to. Sector boundaries round toward the lower code.
Freeman freeman_direction(Point2d from, Point2d to);

/// Left to right by centroid x, then top to bottom, then larger strokes first.
std::vector<raster::Stroke> order_strokes(std::vector<raster::Stroke> strokes);

/// (F1, F2, F3) from each anchor to the following three, Null when missing.
std::vector<Directions> neighbor_directions(std::span<const Point2d> anchors);

struct ExtractedLine {
    LineSegmentCode code;
    std::vector<PixelPoint> pixels;  ///< pixels claimed by the run, in path order
};

struct LineExtraction {
    std::vector<ExtractedLine> segments;
    std::vector<PixelPoint> residual;  ///< row-major
};

struct ExtractedArc {
    EllipseArcCode code;
    std::vector<PixelPoint> pixels;  ///< fitted run in path order
    std::vector<PixelPoint> merged;  ///< short leftovers absorbed into this arc
};

struct ArcClustering {
    std::vector<ExtractedArc> arcs;
    /// Runs that could not host an ellipse and touch no accepted arc.
    std::vector<std::vector<PixelPoint>> leftovers;
};

/// Decomposes a pixel set into maximal 8-connected walks. Each walk starts at
/// the first row-major pixel with exactly one unvisited neighbour (or the
/// first unvisited pixel if there is none) and prefers 4-neighbours, then the
/// smallest turn.
std::vector<std::vector<PixelPoint>> walk_paths(std::span<const PixelPoint> pixels);

/// Greedy line regression along walked paths.
LineExtraction extract_lines(const raster::Stroke& stroke, const EncoderConfig& cfg);

/// Groups residual pixels into ellipse arcs.
ArcClustering cluster_ellipses(std::span<const PixelPoint> residual, const EncoderConfig& cfg);

/// Code of one thinned stroke.
SubWordCode encode_stroke(const raster::Stroke& stroke, const EncoderConfig& cfg);

/// Thin, segment, order and encode a whole word image.
WordCode encode_word(const raster::BinaryRaster& image, const EncoderConfig& cfg);

/// Same as encode_word but on an image that is already a skeleton.
WordCode encode_skeleton(const raster::BinaryRaster& skeleton, const EncoderConfig& cfg);

/// Pixel accounting for encode_stroke, used by tests and diagnostics.
struct StrokeAccounting {
    std::size_t line_pixels = 0;
    std::size_t arc_pixels = 0;
    std::size_t point_pixels = 0;
    std::size_t dropped_pixels = 0;
};
StrokeAccounting account_stroke(const raster::Stroke& stroke, const EncoderConfig& cfg);

/// Multiplies every length-valued code field (p, l, centers, axes, point
/// coordinates, anchors) by `factor`; angles and directions are unchanged.
SubWordCode scale_code(const SubWordCode& code, double factor);
WordCode scale_word(const WordCode& word, double factor);

/// Concatenation of the word's sub-word element lists.
SubWordCode flatten(const WordCode& word);

}  // namespace shapecode::encoder
