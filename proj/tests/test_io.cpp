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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "shapecode/code_json.hpp"
#include "shapecode/config.hpp"
#include "shapecode/error.hpp"
#include "shapecode/svg.hpp"

namespace {

using namespace shapecode;
namespace fs = std::filesystem;

const fs::path kSource = SHAPECODE_SOURCE_DIR;

EngineConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

TEST(Config, DefaultsCommentsAndOverrides) {
    EXPECT_EQ(parse(""), EngineConfig{});
    const auto c = parse("# header\n\ndelta_l = 4.5   # inline\nthreshold=90\ndot_max = 3\n");
    EXPECT_DOUBLE_EQ(c.tolerances.length, 4.5);
    EXPECT_EQ(c.threshold, 90);
    EXPECT_EQ(c.encoder.dot_max, 3);
    EXPECT_DOUBLE_EQ(c.tolerances.alpha, matcher::MatchTolerances().alpha);
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(parse("bogus = 1\n"), ParseError);
    EXPECT_THROW(parse("delta_l = abc\n"), ParseError);
    EXPECT_THROW(parse("delta_l\n"), ParseError);
    EXPECT_THROW(parse("delta_l = -1\n"), ParseError);
    EXPECT_THROW(parse("threshold = 300\n"), ParseError);
    EXPECT_THROW(load_config("/nonexistent.conf"), ParseError);
}

TEST(Config, FormatRoundTrips) {
    EngineConfig c;
    c.encoder.line_tolerance = 0.75;
    c.encoder.ellipse_residual = 0.123456789;
    c.tolerances.gamma = 7.25;
    c.threshold = 17;
    EXPECT_EQ(parse(format_config(c)), c);
}

TEST(Config, ShippedFiles) {
    const auto def = load_config(kSource / "config" / "default.conf");
    EXPECT_EQ(def, EngineConfig{});
    const auto syn = load_config(kSource / "config" / "synthetic.conf");
    auto expected = def;
    expected.tolerances.beta = 10.0;
    expected.tolerances.gamma = 10.0;
    EXPECT_EQ(syn, expected);
}

TEST(CodeJson, ElementAndWordRoundTrip) {
    std::mt19937 rng(61);
    for (int k = 0; k < 200; ++k) {
        encoder::WordCode w;
        for (int s = 0; s < 1 + k % 3; ++s) {
            encoder::SubWordEntry sw;
            sw.code.elements = testkit::random_sequence(rng, 1 + k % 4);
            for (auto& e : sw.code.elements) e.code.pixel_count = 0;
            sw.centroid = {1.0 / (k + 1), 2.5};
            sw.dirs = {encoder::Freeman::East, encoder::Freeman::Null, encoder::Freeman::Null};
            w.subwords.push_back(sw);
        }
        const auto text = io::to_json(w).dump();
        EXPECT_EQ(io::word_from_json(nlohmann::json::parse(text)), w);
    }
}

TEST(CodeJson, TupleForms) {
    EXPECT_EQ(io::to_json(encoder::Primitive{encoder::PointCode{1, 2}}), nlohmann::json::parse("[1.0, 2.0]"));
    EXPECT_EQ(io::to_json(encoder::Primitive{encoder::LineSegmentCode{3, 90, 10}}).size(), 3u);
    EXPECT_EQ(io::to_json(encoder::Primitive{encoder::EllipseArcCode{}}).size(), 7u);
    EXPECT_EQ(io::to_json(encoder::WordCode{}), nlohmann::json::array());
}

TEST(CodeJson, MalformedDocumentsThrow) {
    using nlohmann::json;
    EXPECT_THROW(io::primitive_from_json(json::parse("[1, 2, 3, 4]")), ParseError);
    EXPECT_THROW(io::primitive_from_json(json::parse("{\"x\": 1}")), ParseError);
    EXPECT_THROW(io::element_from_json(json::parse("{\"code\": [1, 2], \"dirs\": [0, 8, 9], \"anchor\": [0, 0]}")),
                 ParseError);
    EXPECT_THROW(io::element_from_json(json::parse("{\"code\": [1, 2], \"anchor\": [0, 0]}")), ParseError);
    EXPECT_THROW(io::word_from_json(json::parse("{}")), ParseError);
}

TEST(Svg, DrawsEveryPrimitiveKind) {
    raster::BinaryRaster skeleton(40, 30);
    skeleton.set(3, 4);
    encoder::WordCode w;
    encoder::SubWordEntry sw;
    sw.code.elements = {
        {{encoder::LineSegmentCode{10, 90, 20}, {15, 10}, 0}, {encoder::Freeman::East, encoder::Freeman::Null, encoder::Freeman::Null}},
        {{encoder::EllipseArcCode{20, 15, 8, 5, 30, 0, 180}, {20, 15}, 0}, encoder::kNullDirections},
        {{encoder::PointCode{30, 20}, {30, 20}, 0}, encoder::kNullDirections},
    };
    w.subwords.push_back(sw);
    std::ostringstream out;
    svg::write_overlay(out, skeleton, w);
    const auto s = out.str();
    EXPECT_EQ(s.rfind("<svg", 0), 0u);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    for (const char* colour : {"blue", "red", "green", "orange", "#bbb"}) EXPECT_NE(s.find(colour), std::string::npos) << colour;
}

}  // namespace
