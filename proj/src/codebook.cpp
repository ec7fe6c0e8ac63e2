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

#include "shapecode/codebook.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "shapecode/code_json.hpp"
#include "shapecode/error.hpp"
#include "shapecode/pnm.hpp"

namespace shapecode::codebook {

namespace fs = std::filesystem;
using encoder::CodedElement;
using nlohmann::json;

std::string_view to_string(Position p) {
    switch (p) {
        case Position::Isolated:
            return "isolated";
        case Position::Beginning:
            return "beginning";
        case Position::Middle:
            return "middle";
        case Position::End:
            return "end";
    }
    return "isolated";
}

Position position_from_string(std::string_view s) {
    for (Position p : kAllPositions)
        if (to_string(p) == s) return p;
    throw ParseError("unknown position \"" + std::string(s) + "\"");
}

ConnectivityTable::ConnectivityTable(std::vector<Glyph> glyphs) : glyphs_(std::move(glyphs)) {
    std::set<std::string> seen;
    for (const auto& g : glyphs_) {
        if (g.id.empty() || g.id == kTargetSlot || g.id.find('+') != std::string::npos)
            throw PreconditionError("invalid glyph id \"" + g.id + "\"");
        if (!seen.insert(g.id).second) throw PreconditionError("duplicate glyph id \"" + g.id + "\"");
    }
}

ConnectivityTable ConnectivityTable::parse(std::istream& in) {
    const auto flag = [](const std::string& s, std::size_t line) {
        if (s == "T") return true;
        if (s == "F") return false;
        throw ParseError("connectivity line " + std::to_string(line) + ": flag must be T or F");
    };
    std::vector<Glyph> glyphs;
    std::string row;
    for (std::size_t line = 1; std::getline(in, row); ++line) {
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (row.empty() || row.front() == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(row);
        for (std::string c; std::getline(ss, c, '\t');) cols.push_back(c);
        if (cols.size() < 3) throw ParseError("connectivity line " + std::to_string(line) + ": expected 3 columns");
        glyphs.push_back({cols[0], flag(cols[1], line), flag(cols[2], line)});
    }
    try {
        return ConnectivityTable(std::move(glyphs));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

ConnectivityTable ConnectivityTable::load(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open connectivity table " + path.string());
    return parse(in);
}

const Glyph* ConnectivityTable::find(std::string_view id) const {
    for (const auto& g : glyphs_)
        if (g.id == id) return &g;
    return nullptr;
}

std::size_t ConnectivityTable::right_count() const {
    return static_cast<std::size_t>(std::count_if(glyphs_.begin(), glyphs_.end(), [](const Glyph& g) { return g.right; }));
}

std::size_t ConnectivityTable::left_count() const {
    return static_cast<std::size_t>(std::count_if(glyphs_.begin(), glyphs_.end(), [](const Glyph& g) { return g.left; }));
}

std::size_t SubWordSpec::target_index() const {
    if (glyphs.empty()) throw PreconditionError("empty sub-word spec");
    switch (position) {
        case Position::Middle:
            return 1;
        case Position::End:
            return glyphs.size() - 1;
        default:
            return 0;
    }
}

std::string SubWordSpec::key() const {
    std::string out;
    for (std::size_t i = 0; i < glyphs.size(); ++i) out += (i ? "+" : "") + glyphs[i];
    return out;
}

namespace {

bool target_ok(const Glyph& g, Position p) {
    switch (p) {
        case Position::Isolated:
            return true;
        case Position::Beginning:
            return g.left;
        case Position::Middle:
            return g.left && g.right;
        case Position::End:
            return g.right;
    }
    return false;
}

/// Requirement on the non-target glyph at `index` of a spec of `length`.
bool context_ok(const Glyph& g, Position p, std::size_t length, std::size_t index) {
    switch (p) {
        case Position::Isolated:
            return false;
        case Position::Beginning:
            return index == length - 1 ? g.right : (g.right && g.left);
        case Position::Middle:
            return index == 0 ? g.left : g.right;
        case Position::End:
            if (length == 2) return g.left;
            return index == 0 ? g.right : (g.right && g.left);
    }
    return false;
}

std::vector<std::size_t> lengths_for(Position p) {
    switch (p) {
        case Position::Isolated:
            return {1};
        case Position::Middle:
            return {3};
        default:
            return {2, 3};
    }
}

}  // namespace

std::vector<SubWordSpec> enumerate_subwords(const ConnectivityTable& table, Position position) {
    std::vector<SubWordSpec> out;
    if (table.glyphs().empty()) return out;
    for (std::size_t length : lengths_for(position)) {
        SubWordSpec spec{std::vector<std::string>(length), position};
        const std::size_t target = spec.target_index();
        spec.glyphs[target] = std::string(kTargetSlot);
        std::function<void(std::size_t)> fill = [&](std::size_t index) {
            if (index == length) {
                out.push_back(spec);
                return;
            }
            if (index == target) return fill(index + 1);
            for (const auto& g : table.glyphs())
                if (context_ok(g, position, length, index)) {
                    spec.glyphs[index] = g.id;
                    fill(index + 1);
                }
        };
        fill(0);
    }
    return out;
}

std::vector<std::string> valid_targets(const ConnectivityTable& table, Position position) {
    std::vector<std::string> out;
    for (const auto& g : table.glyphs())
        if (target_ok(g, position)) out.push_back(g.id);
    return out;
}

SubWordSpec instantiate(const SubWordSpec& spec, const std::string& glyph) {
    SubWordSpec out = spec;
    for (auto& g : out.glyphs)
        if (g == kTargetSlot) g = glyph;
    return out;
}

bool is_valid(const SubWordSpec& spec, const ConnectivityTable& table) {
    const auto lengths = lengths_for(spec.position);
    if (std::find(lengths.begin(), lengths.end(), spec.glyphs.size()) == lengths.end()) return false;
    const std::size_t target = spec.target_index();
    for (std::size_t i = 0; i < spec.glyphs.size(); ++i) {
        const Glyph* g = table.find(spec.glyphs[i]);
        if (!g) return false;
        const bool ok = i == target ? target_ok(*g, spec.position)
                                    : context_ok(*g, spec.position, spec.glyphs.size(), i);
        if (!ok) return false;
    }
    return true;
}

namespace {

/// Above this many candidate elements the exhaustive subset search gives way
/// to greedy removal.
constexpr std::size_t kExhaustiveLimit = 16;

bool contained_in_all(const std::vector<CodedElement>& pattern, const std::vector<SubWordCode>& codes,
                      const MatchTolerances& t) {
    for (const auto& c : codes)
        if (!matcher::sequence_subset(pattern, c.elements, t)) return false;
    return true;
}

std::vector<CodedElement> pick(const std::vector<CodedElement>& ref, const std::vector<std::size_t>& idx) {
    std::vector<CodedElement> out;
    for (std::size_t i : idx) out.push_back(ref[i]);
    return out;
}

std::optional<std::vector<CodedElement>> largest_common(const std::vector<CodedElement>& ref,
                                                        const std::vector<std::size_t>& candidates,
                                                        const std::vector<SubWordCode>& codes,
                                                        const MatchTolerances& t) {
    const std::size_t n = candidates.size();
    if (n <= kExhaustiveLimit) {
        for (std::size_t k = n; k >= 1; --k) {
            // Combinations of k candidates in lexicographic order.
            std::vector<std::size_t> sel(k);
            for (std::size_t i = 0; i < k; ++i) sel[i] = i;
            for (;;) {
                std::vector<std::size_t> idx;
                for (std::size_t s : sel) idx.push_back(candidates[s]);
                auto pattern = pick(ref, idx);
                if (contained_in_all(pattern, codes, t)) return pattern;
                std::size_t i = k;
                while (i > 0 && sel[i - 1] == n - k + i - 1) --i;
                if (i == 0) break;
                ++sel[i - 1];
                for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
            }
        }
        return std::nullopt;
    }
    std::vector<std::size_t> idx = candidates;
    while (!idx.empty()) {
        auto pattern = pick(ref, idx);
        if (contained_in_all(pattern, codes, t)) return pattern;
        std::size_t best = idx.size() - 1;
        std::size_t best_hits = 0;
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
            auto trial = idx;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(drop));
            const auto p = pick(ref, trial);
            std::size_t hits = 0;
            for (const auto& c : codes) hits += matcher::sequence_subset(p, c.elements, t) ? 1 : 0;
            if (hits > best_hits || (hits == best_hits && drop > best)) {
                best = drop;
                best_hits = hits;
            }
        }
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return std::nullopt;
}

void average_counterparts(std::vector<CodedElement>& pattern, const std::vector<SubWordCode>& codes,
                          const MatchTolerances& t) {
    std::vector<std::vector<double>> sums(pattern.size(), std::vector<double>(2, 0.0));
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (const auto* l = std::get_if<encoder::LineSegmentCode>(&pattern[i].code.shape)) sums[i][0] = l->length;
        if (const auto* a = std::get_if<encoder::EllipseArcCode>(&pattern[i].code.shape)) {
            sums[i][0] = a->a;
            sums[i][1] = a->b;
        }
    }
    std::size_t count = 1;
    for (const auto& c : codes) {
        const auto aligned = matcher::align(pattern, c.elements, t);
        if (!aligned) return;
        ++count;
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            const auto& shape = c.elements[(*aligned)[i]].code.shape;
            if (const auto* l = std::get_if<encoder::LineSegmentCode>(&shape)) sums[i][0] += l->length;
            if (const auto* a = std::get_if<encoder::EllipseArcCode>(&shape)) {
                sums[i][0] += a->a;
                sums[i][1] += a->b;
            }
        }
    }
    auto averaged = pattern;
    const double n = static_cast<double>(count);
    for (std::size_t i = 0; i < averaged.size(); ++i) {
        if (auto* l = std::get_if<encoder::LineSegmentCode>(&averaged[i].code.shape)) l->length = sums[i][0] / n;
        if (auto* a = std::get_if<encoder::EllipseArcCode>(&averaged[i].code.shape)) {
            a->a = sums[i][0] / n;
            a->b = sums[i][1] / n;
        }
    }
    if (contained_in_all(averaged, codes, t)) pattern = std::move(averaged);
}

}  // namespace

SubWordCode common_code(const std::vector<SubWordCode>& codes, const MatchTolerances& t) {
    if (codes.empty()) throw CodebookError("no codes to extract a common code from");
    std::size_t ref_index = 0;
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i].elements.size() < codes[ref_index].elements.size()) ref_index = i;
    const auto& ref = codes[ref_index].elements;
    if (ref.empty()) throw CodebookError("empty common code");

    std::vector<std::size_t> candidates;
    for (std::size_t e = 0; e < ref.size(); ++e) {
        bool everywhere = true;
        for (const auto& c : codes) {
            const bool found = std::any_of(c.elements.begin(), c.elements.end(), [&](const CodedElement& d) {
                return matcher::primitive_contained(ref[e].code.shape, d.code.shape, t);
            });
            if (!found) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) candidates.push_back(e);
    }
    auto pattern = largest_common(ref, candidates, codes, t);
    if (!pattern) throw CodebookError("empty common code");
    average_counterparts(*pattern, codes, t);
    return {std::move(*pattern)};
}

SubWordCode extract_common_code(const std::vector<SubWordCode>& codes, const std::vector<double>& sizes,
                                double reference_size, const MatchTolerances& t) {
    if (codes.size() != sizes.size()) throw PreconditionError("one size per code is required");
    std::vector<SubWordCode> scaled;
    for (std::size_t i = 0; i < codes.size(); ++i) {
        if (!(sizes[i] > 0.0)) throw PreconditionError("render sizes must be positive");
        scaled.push_back(encoder::scale_code(codes[i], reference_size / sizes[i]));
    }
    return common_code(scaled, t);
}

encoder::EncoderConfig encoder_for_size(const encoder::EncoderConfig& cfg, double size, double reference_size) {
    if (!(size > 0.0) || !(reference_size > 0.0)) throw PreconditionError("sizes must be positive");
    return cfg.scaled(size / reference_size);
}

WordCode encode_normalized(const raster::BinaryRaster& image, const encoder::EncoderConfig& cfg, double size,
                           double reference_size) {
    const auto word = encoder::encode_word(image, encoder_for_size(cfg, size, reference_size));
    return encoder::scale_word(word, reference_size / size);
}

const CharacterCode* Codebook::find(std::string_view glyph, Position position) const {
    for (const auto& e : entries)
        if (e.glyph == glyph && e.position == position) return &e;
    return nullptr;
}

BuildResult assemble_codebook(const std::vector<SpecSample>& samples, const BuildOptions& options) {
    options.tolerances.validate();
    BuildResult result;
    result.book.font = options.font;
    result.book.reference_size = options.reference_size;
    result.book.tolerances = options.tolerances;

    std::map<std::pair<std::string, Position>, std::vector<SubWordCode>> per_glyph;
    std::set<std::pair<std::string, Position>> keys;
    for (const auto& s : samples) {
        const auto key = std::make_pair(s.spec.glyphs.at(s.spec.target_index()), s.spec.position);
        keys.insert(key);
        if (s.codes.empty()) continue;
        try {
            per_glyph[key].push_back(extract_common_code(s.codes, s.sizes, options.reference_size, options.tolerances));
        } catch (const CodebookError&) {
            result.report.warnings.push_back("no common code across sizes for " + std::string(to_string(s.spec.position)) +
                                             "/" + s.spec.key());
        }
    }
    for (const auto& key : keys) {
        CharacterCode entry{key.first, key.second, {}, false};
        const auto it = per_glyph.find(key);
        if (it == per_glyph.end()) {
            entry.flagged = true;
        } else {
            try {
                entry.code = common_code(it->second, options.tolerances);
            } catch (const CodebookError&) {
                entry.flagged = true;
            }
        }
        if (entry.flagged) {
            ++result.report.flagged;
            result.report.warnings.push_back("no common code for " + key.first + " (" +
                                             std::string(to_string(key.second)) + ")");
        }
        result.book.entries.push_back(std::move(entry));
    }
    std::sort(result.book.entries.begin(), result.book.entries.end(), [](const auto& a, const auto& b) {
        return std::tie(a.glyph, a.position) < std::tie(b.glyph, b.position);
    });
    for (const auto& e : result.book.entries)
        if (!e.flagged) result.book.fingerprint.push_back(e.code);
    return result;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::vector<std::string> split_key(const std::string& key) {
    std::vector<std::string> out;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, '+');) out.push_back(part);
    return out;
}

struct Job {
    std::size_t sample;
    int size;
    fs::path path;
};

}  // namespace

BuildResult build_codebook(const fs::path& corpus, const ConnectivityTable& table, const BuildOptions& options) {
    options.encoder.validate();
    if (!fs::is_directory(corpus)) throw CorpusError("corpus directory not found: " + corpus.string());

    BuildReport report;
    std::vector<SpecSample> samples;
    std::vector<Job> jobs;

    std::vector<fs::path> position_dirs;
    for (const auto& e : fs::directory_iterator(corpus))
        if (e.is_directory()) position_dirs.push_back(e.path());
    std::sort(position_dirs.begin(), position_dirs.end());

    for (const auto& pdir : position_dirs) {
        Position position;
        try {
            position = position_from_string(pdir.filename().string());
        } catch (const ParseError&) {
            ++report.skipped;
            report.warnings.push_back("skipping unknown position directory " + pdir.string());
            continue;
        }
        std::vector<fs::path> spec_dirs;
        for (const auto& e : fs::directory_iterator(pdir))
            if (e.is_directory()) spec_dirs.push_back(e.path());
        std::sort(spec_dirs.begin(), spec_dirs.end());
        for (const auto& sdir : spec_dirs) {
            SubWordSpec spec{split_key(sdir.filename().string()), position};
            if (!is_valid(spec, table)) {
                ++report.skipped;
                report.warnings.push_back("skipping invalid sub-word " + sdir.string());
                continue;
            }
            std::map<int, fs::path> found;
            for (const auto& f : fs::directory_iterator(sdir)) {
                const auto ext = f.path().extension();
                if (ext != ".pbm" && ext != ".pgm") continue;
                if (const auto size = parse_int(f.path().stem().string()); size && *size > 0) found[*size] = f.path();
            }
            std::vector<int> sizes = options.sizes;
            if (sizes.empty())
                for (const auto& [size, path] : found) sizes.push_back(size);
            const std::size_t index = samples.size();
            samples.push_back({spec, {}, {}});
            ++report.specs;
            for (int size : sizes) {
                const auto it = found.find(size);
                if (it == found.end()) {
                    ++report.missing;
                    report.warnings.push_back("missing size " + std::to_string(size) + " for " + sdir.string());
                    continue;
                }
                jobs.push_back({index, size, it->second});
            }
        }
    }

    std::vector<std::optional<SubWordCode>> encoded(jobs.size());
    std::vector<std::string> failures(jobs.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(jobs.size(), std::thread::hardware_concurrency()));
    const auto work = [&](std::size_t first) {
        for (std::size_t j = first; j < jobs.size(); j += workers) {
            try {
                const auto image = pnm::read_binary(jobs[j].path, options.threshold);
                encoded[j] = encoder::flatten(encoder::encode_word(
                    image, encoder_for_size(options.encoder, jobs[j].size, options.reference_size)));
            } catch (const Error& e) {
                failures[j] = jobs[j].path.string() + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();

    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (!encoded[j]) {
            ++report.missing;
            report.warnings.push_back("unreadable raster " + failures[j]);
            continue;
        }
        if (encoded[j]->elements.empty()) {
            ++report.missing;
            report.warnings.push_back("blank raster " + jobs[j].path.string());
            continue;
        }
        ++report.rasters;
        samples[jobs[j].sample].codes.push_back(std::move(*encoded[j]));
        samples[jobs[j].sample].sizes.push_back(static_cast<double>(jobs[j].size));
    }

    auto result = assemble_codebook(samples, options);
    report.flagged = result.report.flagged;
    report.warnings.insert(report.warnings.end(), result.report.warnings.begin(), result.report.warnings.end());
    result.report = std::move(report);
    return result;
}

void build_fingerprints(std::vector<Codebook>& books, const MatchTolerances& t) {
    std::vector<std::vector<SubWordCode>> prints(books.size());
    for (std::size_t b = 0; b < books.size(); ++b)
        for (const auto& e : books[b].entries) {
            if (e.flagged) continue;
            bool unique = true;
            for (std::size_t o = 0; o < books.size() && unique; ++o) {
                if (o == b) continue;
                for (const auto& f : books[o].entries)
                    if (!f.flagged && matcher::sequence_equiv(e.code.elements, f.code.elements, t)) {
                        unique = false;
                        break;
                    }
            }
            if (unique) prints[b].push_back(e.code);
        }
    for (std::size_t b = 0; b < books.size(); ++b) books[b].fingerprint = std::move(prints[b]);
}

std::optional<std::string> identify_font(const WordCode& word, const std::vector<Codebook>& books,
                                         const MatchTolerances& t) {
    if (word.empty()) return std::nullopt;
    std::size_t best = 0;
    std::optional<std::size_t> winner;
    bool tie = false;
    for (std::size_t b = 0; b < books.size(); ++b) {
        std::size_t hits = 0;
        for (const auto& code : books[b].fingerprint) hits += matcher::find_matches(word, code, t).size();
        if (hits == 0) continue;
        if (hits > best) {
            best = hits;
            winner = b;
            tie = false;
        } else if (hits == best) {
            tie = true;
        }
    }
    if (!winner || tie) return std::nullopt;
    return books[*winner].font;
}

std::vector<Recognition> recognize(const WordCode& word, const Codebook& book, const MatchTolerances& t) {
    struct Candidate {
        std::size_t length;
        std::size_t subword;
        std::size_t offset;
        double cost;
        const CharacterCode* entry;
        std::vector<std::size_t> aligned;
    };
    const auto better = [](const Candidate& a, const Candidate& b) {
        if (a.length != b.length) return a.length > b.length;
        if (a.subword != b.subword) return a.subword < b.subword;
        if (a.offset != b.offset) return a.offset < b.offset;
        if (a.cost != b.cost) return a.cost < b.cost;
        return std::tie(a.entry->glyph, a.entry->position) < std::tie(b.entry->glyph, b.entry->position);
    };

    std::vector<std::vector<char>> covered;
    for (const auto& sw : word.subwords) covered.emplace_back(sw.code.elements.size(), 0);
    std::vector<Recognition> out;
    for (;;) {
        std::optional<Candidate> best;
        for (std::size_t s = 0; s < word.subwords.size(); ++s) {
            const auto& elements = word.subwords[s].code.elements;
            std::size_t start = 0;
            while (start < elements.size()) {
                if (covered[s][start]) {
                    ++start;
                    continue;
                }
                std::size_t end = start;
                while (end < elements.size() && !covered[s][end]) ++end;
                const std::span<const CodedElement> run(elements.data() + start, end - start);
                for (const auto& entry : book.entries) {
                    if (entry.flagged || entry.code.elements.empty()) continue;
                    for (auto& a : matcher::alignments(entry.code.elements, run, t)) {
                        const double cost = matcher::alignment_cost(entry.code.elements, run, a, t);
                        for (auto& i : a) i += start;
                        Candidate c{entry.code.elements.size(), s, a.front(), cost, &entry, std::move(a)};
                        if (!best || better(c, *best)) best = std::move(c);
                    }
                }
                start = end;
            }
        }
        if (!best) break;
        for (std::size_t i = best->aligned.front(); i <= best->aligned.back(); ++i) covered[best->subword][i] = 1;
        out.push_back({best->entry->glyph, best->entry->position, best->subword, best->offset, best->aligned});
    }
    std::sort(out.begin(), out.end(),
              [](const Recognition& a, const Recognition& b) { return std::tie(a.subword, a.offset) < std::tie(b.subword, b.offset); });
    return out;
}

namespace {

json tolerances_to_json(const MatchTolerances& t) {
    return {{"delta_l", t.length}, {"delta_alpha", t.alpha}, {"delta_a", t.axis_a}, {"delta_b", t.axis_b},
            {"delta_phi", t.phi},  {"delta_beta", t.beta},   {"delta_gamma", t.gamma}, {"delta_pt", t.point}};
}

MatchTolerances tolerances_from_json(const json& j) {
    MatchTolerances t;
    t.length = j.at("delta_l").get<double>();
    t.alpha = j.at("delta_alpha").get<double>();
    t.axis_a = j.at("delta_a").get<double>();
    t.axis_b = j.at("delta_b").get<double>();
    t.phi = j.at("delta_phi").get<double>();
    t.beta = j.at("delta_beta").get<double>();
    t.gamma = j.at("delta_gamma").get<double>();
    t.point = j.at("delta_pt").get<double>();
    return t;
}

}  // namespace

void save_codebook(const Codebook& book, const fs::path& path) {
    json entries = json::array();
    for (const auto& e : book.entries)
        entries.push_back({{"glyph", e.glyph},
                           {"position", std::string(to_string(e.position))},
                           {"flagged", e.flagged},
                           {"code", io::to_json(e.code)}});
    json fingerprint = json::array();
    for (const auto& f : book.fingerprint) fingerprint.push_back(io::to_json(f));
    const json doc = {{"schema_version", kSchemaVersion},
                      {"font", book.font},
                      {"reference_size", book.reference_size},
                      {"tolerances", tolerances_to_json(book.tolerances)},
                      {"entries", std::move(entries)},
                      {"fingerprint", std::move(fingerprint)}};
    std::ofstream out(path);
    if (!out) throw CodebookError("cannot write codebook " + path.string());
    out << doc.dump(1) << '\n';
    if (!out) throw CodebookError("failed writing codebook " + path.string());
}

Codebook load_codebook(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw CodebookError("cannot open codebook " + path.string());
    try {
        const json doc = json::parse(in);
        if (!doc.is_object() || doc.value("schema_version", -1) != kSchemaVersion)
            throw CodebookError("unsupported codebook schema in " + path.string());
        Codebook book;
        book.font = doc.at("font").get<std::string>();
        book.reference_size = doc.at("reference_size").get<double>();
        book.tolerances = tolerances_from_json(doc.at("tolerances"));
        for (const auto& e : doc.at("entries"))
            book.entries.push_back({e.at("glyph").get<std::string>(),
                                    position_from_string(e.at("position").get<std::string>()),
                                    io::subword_from_json(e.at("code")), e.at("flagged").get<bool>()});
        for (const auto& f : doc.at("fingerprint")) book.fingerprint.push_back(io::subword_from_json(f));
        return book;
    } catch (const CodebookError&) {
        throw;
    } catch (const std::exception& e) {
        throw CodebookError("malformed codebook " + path.string() + ": " + e.what());
    }
}

}  // namespace shapecode::codebook
