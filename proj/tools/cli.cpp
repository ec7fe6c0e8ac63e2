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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "shapecode/code_json.hpp"
#include "shapecode/codebook.hpp"
#include "shapecode/config.hpp"
#include "shapecode/error.hpp"
#include "shapecode/geomfit.hpp"
#include "shapecode/pnm.hpp"
#include "shapecode/svg.hpp"

namespace shapecode::cli {

namespace {

struct Common {
    std::string config_path;
    std::optional<int> threshold;
    std::string svg_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "key = value engine configuration");
    cmd->add_option("--threshold", c.threshold, "PGM binarization threshold")->check(CLI::Range(0, 255));
    cmd->add_option("--svg", c.svg_path, "write an SVG overlay");
}

EngineConfig load(const Common& c) {
    EngineConfig cfg = c.config_path.empty() ? EngineConfig{} : load_config(c.config_path);
    if (c.threshold) cfg.threshold = *c.threshold;
    return cfg;
}

/// Ink bounding-box height, the default nominal size of an input word.
double ink_height(const raster::BinaryRaster& img) {
    const auto fg = img.foreground();
    if (fg.empty()) return 0.0;
    return static_cast<double>(fg.back().y - fg.front().y + 1);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric shape-coding OCR engine"};
    app.require_subcommand(1);
    Common common;

    std::string input, output;
    auto* thin = app.add_subcommand("thin", "write the skeleton of a PBM/PGM image");
    thin->add_option("input", input)->required();
    thin->add_option("-o,--output", output, "output PBM")->required();
    add_common(thin, common);

    auto* segment = app.add_subcommand("segment", "list the 8-connected strokes of an image");
    segment->add_option("input", input)->required();
    add_common(segment, common);

    double size = 0.0;
    auto* encode = app.add_subcommand("encode", "print the word code of an image as JSON");
    encode->add_option("input", input)->required();
    encode->add_option("-o,--output", output, "output JSON (default standard output)");
    encode->add_option("--size", size, "nominal glyph size; when set, thresholds and codes are normalized");
    add_common(encode, common);

    std::string model = "ellipse";
    auto* fit = app.add_subcommand("fit", "fit one line or ellipse to all foreground pixels");
    fit->add_option("input", input)->required();
    fit->add_option("--model", model)->check(CLI::IsMember({"line", "ellipse"}));
    add_common(fit, common);

    std::string corpus, table_path, font = "font";
    std::vector<int> sizes;
    auto* build = app.add_subcommand("build-codebook", "build a codebook from a rendered corpus");
    build->add_option("--corpus", corpus)->required();
    build->add_option("--table", table_path, "connectivity TSV")->required();
    build->add_option("--sizes", sizes, "render sizes to use (default: all found)")->delimiter(',');
    build->add_option("--font", font);
    build->add_option("-o,--output", output)->required();
    add_common(build, common);

    std::vector<std::string> books;
    auto* recognize = app.add_subcommand("recognize", "recognize the glyphs of a word image");
    recognize->add_option("input", input)->required();
    recognize->add_option("--codebook", books)->required()->expected(1);
    recognize->add_option("--size", size, "nominal glyph size (default: ink height)");
    add_common(recognize, common);

    auto* identify = app.add_subcommand("identify-font", "name the font whose fingerprint best matches");
    identify->add_option("input", input)->required();
    identify->add_option("--codebook", books)->required();
    identify->add_option("--size", size, "nominal glyph size (default: ink height)");
    add_common(identify, common);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    EngineConfig cfg;
    try {
        cfg = load(common);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }

    // Input images are loaded first so that parse failures map to their own code.
    raster::BinaryRaster image;
    if (!input.empty()) {
        try {
            image = pnm::read_binary(input, cfg.threshold);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return kExitParse;
        }
    }

    try {
        if (*thin) {
            const auto skeleton = raster::thin(image);
            pnm::write_pbm(output, skeleton, true);
            if (!common.svg_path.empty()) svg::write_overlay(common.svg_path, skeleton, {});
            return kExitOk;
        }
        if (*segment) {
            const auto strokes = encoder::order_strokes(raster::segment(image));
            for (std::size_t i = 0; i < strokes.size(); ++i)
                out << i << '\t' << strokes[i].pixels.size() << '\t' << strokes[i].centroid.x << '\t'
                    << strokes[i].centroid.y << '\n';
            return kExitOk;
        }
        if (*encode) {
            const auto word = size > 0.0
                                  ? codebook::encode_normalized(image, cfg.encoder, size, codebook::kReferenceSize)
                                  : encoder::encode_word(image, cfg.encoder);
            write_text(output, io::to_json(word).dump(1) + "\n", out);
            if (!common.svg_path.empty()) {
                const auto skeleton = raster::thin(image);
                svg::write_overlay(common.svg_path, skeleton,
                                   size > 0.0 ? encoder::scale_word(word, size / codebook::kReferenceSize) : word);
            }
            return kExitOk;
        }
        if (*fit) {
            const auto pixels = image.foreground();
            nlohmann::json j;
            if (model == "line") {
                const auto line = geomfit::fit_line(pixels);
                j = {{"p", line.p}, {"alpha", line.alpha},
                     {"residual", geomfit::line_residual(to_real(pixels), line)}};
            } else {
                const auto pts = to_real(pixels);
                const auto c = geomfit::fit_ellipse(pts);
                const auto g = geomfit::conic_to_geometric(c);
                j = {{"conic", {c.a, c.b, c.c, c.d, c.e, c.f}},
                     {"x0", g.x0}, {"y0", g.y0}, {"a", g.a}, {"b", g.b}, {"phi", g.phi},
                     {"residual", geomfit::algebraic_residual(pts, c)}};
            }
            out << j.dump(1) << '\n';
            return kExitOk;
        }
        if (*build) {
            codebook::ConnectivityTable table;
            try {
                table = codebook::ConnectivityTable::load(table_path);
            } catch (const ParseError& e) {
                err << "error: " << e.what() << '\n';
                return kExitParse;
            }
            codebook::BuildOptions options;
            options.font = font;
            options.sizes = sizes;
            options.encoder = cfg.encoder;
            options.tolerances = cfg.tolerances;
            options.threshold = cfg.threshold;
            codebook::BuildResult result;
            try {
                result = codebook::build_codebook(corpus, table, options);
            } catch (const CorpusError& e) {
                err << "error: " << e.what() << '\n';
                return kExitCorpus;
            }
            for (const auto& w : result.report.warnings) err << "warning: " << w << '\n';
            if (result.report.rasters == 0) {
                err << "error: corpus " << corpus << " holds no usable rasters\n";
                return kExitCorpus;
            }
            codebook::save_codebook(result.book, output);
            out << "entries " << result.book.entries.size() << "\nfingerprint " << result.book.fingerprint.size()
                << "\nflagged " << result.report.flagged << "\nskipped " << result.report.skipped << "\nmissing "
                << result.report.missing << "\nwarnings " << result.report.warnings.size() << '\n';
            return kExitOk;
        }

        std::vector<codebook::Codebook> loaded;
        try {
            for (const auto& b : books) loaded.push_back(codebook::load_codebook(b));
        } catch (const CodebookError& e) {
            err << "error: " << e.what() << '\n';
            return kExitCodebook;
        }
        const double nominal = size > 0.0 ? size : ink_height(image);
        const double reference = loaded.front().reference_size;
        const auto word = nominal > 0.0 ? codebook::encode_normalized(image, cfg.encoder, nominal, reference)
                                        : encoder::WordCode{};
        if (*recognize) {
            const auto& tolerances = common.config_path.empty() ? loaded.front().tolerances : cfg.tolerances;
            for (const auto& r : codebook::recognize(word, loaded.front(), tolerances))
                out << r.glyph << '\t' << codebook::to_string(r.position) << '\t' << r.subword << '\t' << r.offset
                    << '\n';
            return kExitOk;
        }
        codebook::build_fingerprints(loaded, cfg.tolerances);
        const auto name = codebook::identify_font(word, loaded, cfg.tolerances);
        out << (name ? *name : "unknown") << '\n';
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace shapecode::cli
