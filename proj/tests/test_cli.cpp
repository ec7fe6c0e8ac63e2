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

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "e2e.hpp"
#include "shapecode/code_json.hpp"
#include "shapecode/pnm.hpp"
#include "synth.hpp"
#include "tempdir.hpp"

namespace {

using namespace shapecode;
namespace fs = std::filesystem;

const fs::path kSource = SHAPECODE_SOURCE_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "shapecode");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        raster::BinaryRaster dot(12, 12);
        dot.set(5, 5);
        dot.set(6, 5);
        pnm::write_pbm(dir_ / "dot.pbm", dot);
        pnm::write_pbm(dir_ / "blank.pbm", raster::BinaryRaster(12, 12));
        const auto& glyphs = testkit::acceptance_glyphs();
        const auto& cup = *std::find_if(glyphs.begin(), glyphs.end(), [](const auto& g) { return g.id == "cup"; });
        pnm::write_pbm(dir_ / "cup.pbm", testkit::render_glyph(cup, 75, testkit::acceptance_thickness(75)), false);
        std::ofstream(dir_ / "bad.pbm") << "P1\n3 3\n1 0";
        std::ofstream(dir_ / "gray.pgm") << "P2\n3 1\n255\n0 200 10\n";
    }

    std::string p(const std::string& name) const { return (dir_ / name).string(); }

    /// Codebook of the acceptance glyphs built through the CLI.
    std::string build_book() {
        testkit::write_acceptance_corpus(dir_ / "corpus", {50, 75, 100});
        std::ofstream table(dir_ / "table.tsv");
        for (const auto& g : testkit::acceptance_glyphs()) table << g.id << "\tF\tF\n";
        table.close();
        const auto r = run({"build-codebook", "--corpus", p("corpus"), "--table", p("table.tsv"), "--sizes",
                            "50,75,100", "--font", "synthetic", "--config",
                            (kSource / "config" / "synthetic.conf").string(), "-o", p("book.json")});
        EXPECT_EQ(r.code, cli::kExitOk) << r.err;
        EXPECT_NE(r.out.find("entries 12"), std::string::npos) << r.out;
        return p("book.json");
    }

    testkit::TempDir dir_{"cli"};
};

TEST_F(Cli, ThinWritesSkeleton) {
    const auto r = run({"thin", p("cup.pbm"), "-o", p("skel.pbm"), "--svg", p("skel.svg")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto skel = std::get<raster::BinaryRaster>(pnm::read(fs::path(p("skel.pbm"))));
    EXPECT_EQ(skel, raster::thin(pnm::read_binary(p("cup.pbm"))));
    EXPECT_NE(slurp(p("skel.svg")).find("<svg"), std::string::npos);

    EXPECT_EQ(run({"thin", p("gray.pgm"), "--threshold", "100", "-o", p("g.pbm")}).code, cli::kExitOk);
}

TEST_F(Cli, ParseFailuresExitTwo) {
    auto r = run({"thin", p("missing.pbm"), "-o", p("x.pbm")});
    EXPECT_EQ(r.code, cli::kExitParse);
    EXPECT_NE(r.err.find("error"), std::string::npos);
    EXPECT_EQ(run({"encode", p("bad.pbm")}).code, cli::kExitParse);
    EXPECT_EQ(run({"encode", p("dot.pbm"), "--config", p("missing.conf")}).code, cli::kExitParse);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitParse);
    EXPECT_EQ(run({"thin", p("dot.pbm"), "-o", p("x.pbm"), "--threshold", "999"}).code, cli::kExitParse);
}

TEST_F(Cli, EncodeDotAndBlank) {
    auto r = run({"encode", p("dot.pbm")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    ASSERT_EQ(j[0]["elements"].size(), 1u);
    EXPECT_EQ(j[0]["elements"][0]["code"].size(), 2u);
    EXPECT_EQ(j[0]["elements"][0]["dirs"], nlohmann::json::parse("[9, 9, 9]"));

    r = run({"encode", p("blank.pbm")});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::array());
}

TEST_F(Cli, EncodeJsonRoundTripsLosslessly) {
    const auto r = run({"encode", p("cup.pbm"), "-o", p("cup.json"), "--svg", p("cup.svg")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto word = io::word_from_json(nlohmann::json::parse(slurp(p("cup.json"))));
    const auto direct = encoder::encode_word(pnm::read_binary(p("cup.pbm")), EngineConfig{}.encoder);
    EXPECT_EQ(word, direct);
    EXPECT_EQ(io::to_json(word).dump(1) + "\n", slurp(p("cup.json")));
}

TEST_F(Cli, SegmentAndFit) {
    auto r = run({"segment", p("dot.pbm")});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "0\t2\t5.5\t5\n");

    r = run({"fit", p("cup.pbm"), "--model", "ellipse"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["a"].get<double>(), 0.0);

    r = run({"fit", p("dot.pbm"), "--model", "line"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NEAR(nlohmann::json::parse(r.out)["alpha"].get<double>(), 90.0, 1e-9);
}

TEST_F(Cli, BuildCodebookCorpusErrors) {
    std::ofstream(dir_ / "table.tsv") << "vbar\tF\tF\n";
    fs::create_directories(dir_ / "empty");
    EXPECT_EQ(run({"build-codebook", "--corpus", p("empty"), "--table", p("table.tsv"), "-o", p("b.json")}).code,
              cli::kExitCorpus);
    EXPECT_EQ(run({"build-codebook", "--corpus", p("absent"), "--table", p("table.tsv"), "-o", p("b.json")}).code,
              cli::kExitCorpus);
    EXPECT_EQ(run({"build-codebook", "--corpus", p("empty"), "--table", p("absent.tsv"), "-o", p("b.json")}).code,
              cli::kExitParse);
}

TEST_F(Cli, BuildCodebookCountsMissingSizes) {
    testkit::write_acceptance_corpus(dir_ / "corpus", {50, 75});
    std::ofstream table(dir_ / "table.tsv");
    for (const auto& g : testkit::acceptance_glyphs()) table << g.id << "\tF\tF\n";
    table.close();
    const auto r = run({"build-codebook", "--corpus", p("corpus"), "--table", p("table.tsv"), "--sizes", "50,75,100",
                        "-o", p("b.json")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_NE(r.out.find("missing 12"), std::string::npos) << r.out;
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(Cli, RecognizeAndIdentify) {
    const auto book = build_book();
    auto r = run({"recognize", p("cup.pbm"), "--codebook", book, "--size", "75"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "cup\tisolated\t0\t0\n");

    r = run({"recognize", p("dot.pbm"), "--codebook", book});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "");

    r = run({"identify-font", p("cup.pbm"), "--codebook", book, "--size", "75"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "synthetic\n");

    // The same book twice: every fingerprint cancels out.
    r = run({"identify-font", p("cup.pbm"), "--codebook", book, "--codebook", book, "--size", "75"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(r.out, "unknown\n");
}

TEST_F(Cli, CorruptCodebookExitsFour) {
    std::ofstream(dir_ / "corrupt.json") << "{\"schema_version\": 1, \"font\": ";
    EXPECT_EQ(run({"recognize", p("cup.pbm"), "--codebook", p("corrupt.json")}).code, cli::kExitCodebook);
    EXPECT_EQ(run({"recognize", p("cup.pbm"), "--codebook", p("nothing.json")}).code, cli::kExitCodebook);
    EXPECT_EQ(run({"identify-font", p("cup.pbm"), "--codebook", p("corrupt.json")}).code, cli::kExitCodebook);
}

TEST_F(Cli, Deterministic) {
    const auto a = run({"encode", p("cup.pbm")});
    const auto b = run({"encode", p("cup.pbm")});
    EXPECT_EQ(a.out, b.out);
}

}  // namespace
