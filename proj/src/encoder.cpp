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

#include "shapecode/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "shapecode/error.hpp"

namespace shapecode::encoder {

using geomfit::kPi;

int to_int(Freeman f) { return static_cast<int>(f); }

Freeman freeman_from_int(int v) {
    if ((v >= 0 && v <= 7) || v == 9) return static_cast<Freeman>(v);
    throw ParseError("invalid Freeman direction " + std::to_string(v));
}

void EncoderConfig::validate() const {
    if (!(line_tolerance > 0.0) || !(min_line_length > 0.0) || !(ellipse_residual > 0.0) || dot_max <= 0 ||
        !(circular_ratio > 0.0))
        throw PreconditionError("encoder thresholds must be strictly positive");
}

EncoderConfig EncoderConfig::scaled(double factor) const {
    EncoderConfig out = *this;
    out.min_line_length *= factor;
    return out;
}

Freeman freeman_direction(Point2d from, Point2d to) {
    const double dx = to.x - from.x;
    const double dy = from.y - to.y;  // screen y grows downward
    if (dx == 0.0 && dy == 0.0) return Freeman::Null;
    // Angles within kBoundarySlack of a sector edge count as on the edge.
    constexpr double kBoundarySlack = 1e-9;
    const double theta = geomfit::wrap_degrees(geomfit::rad_to_deg(std::atan2(dy, dx)));
    const double sector = (theta - 22.5) / 45.0;
    if (sector <= kBoundarySlack || sector >= 7.0 - kBoundarySlack) return Freeman::East;
    return static_cast<Freeman>(static_cast<int>(std::ceil(sector - kBoundarySlack)));
}

std::vector<raster::Stroke> order_strokes(std::vector<raster::Stroke> strokes) {
    std::stable_sort(strokes.begin(), strokes.end(), [](const raster::Stroke& a, const raster::Stroke& b) {
        if (a.centroid.x != b.centroid.x) return a.centroid.x < b.centroid.x;
        if (a.centroid.y != b.centroid.y) return a.centroid.y < b.centroid.y;
        return a.pixels.size() > b.pixels.size();
    });
    return strokes;
}

std::vector<Directions> neighbor_directions(std::span<const Point2d> anchors) {
    std::vector<Directions> out(anchors.size(), kNullDirections);
    for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = 1; j <= 3 && i + j < anchors.size(); ++j)
            out[i][j - 1] = freeman_direction(anchors[i], anchors[i + j]);
    return out;
}

namespace {

// E, S, W, N first so 4-neighbours win ties, then the diagonals.
constexpr std::array<std::array<int, 2>, 8> kSteps = {{
    {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1},
}};

int open_neighbors(const std::set<PixelPoint>& open, PixelPoint p) {
    int n = 0;
    for (const auto& s : kSteps)
        if (open.count({p.x + s[0], p.y + s[1]})) ++n;
    return n;
}

double turn_between(std::array<int, 2> a, std::array<int, 2> b) {
    const double ta = std::atan2(a[1], a[0]);
    const double tb = std::atan2(b[1], b[0]);
    double d = std::abs(ta - tb);
    if (d > kPi) d = 2.0 * kPi - d;
    return d;
}

}  // namespace

std::vector<std::vector<PixelPoint>> walk_paths(std::span<const PixelPoint> pixels) {
    std::set<PixelPoint> open(pixels.begin(), pixels.end());
    std::vector<std::vector<PixelPoint>> paths;
    while (!open.empty()) {
        PixelPoint start = *open.begin();
        for (const auto& p : open)
            if (open_neighbors(open, p) == 1) {
                start = p;
                break;
            }
        std::vector<PixelPoint> path{start};
        open.erase(start);
        std::optional<std::array<int, 2>> last_step;
        PixelPoint cur = start;
        for (;;) {
            int best = -1;
            bool best_is_four = false;
            double best_turn = 0.0;
            for (std::size_t k = 0; k < kSteps.size(); ++k) {
                const PixelPoint cand{cur.x + kSteps[k][0], cur.y + kSteps[k][1]};
                if (!open.count(cand)) continue;
                const bool four = k < 4;
                const double turn = last_step ? turn_between(*last_step, kSteps[k]) : 0.0;
                const bool better = best < 0 || (four && !best_is_four) ||
                                    (four == best_is_four && turn < best_turn - 1e-12);
                if (better) {
                    best = static_cast<int>(k);
                    best_is_four = four;
                    best_turn = turn;
                }
            }
            if (best < 0) break;
            const auto& step = kSteps[static_cast<std::size_t>(best)];
            cur = {cur.x + step[0], cur.y + step[1]};
            last_step = step;
            open.erase(cur);
            path.push_back(cur);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

namespace {

// Absorbs distances that equal the tolerance up to floating-point noise.
constexpr double kDistanceSlack = 1e-9;

}  // namespace

LineExtraction extract_lines(const raster::Stroke& stroke, const EncoderConfig& cfg) {
    if (stroke.pixels.empty()) throw PreconditionError("extract_lines on an empty stroke");
    LineExtraction out;
    for (const auto& path : walk_paths(stroke.pixels)) {
        std::size_t s = 0;
        while (s + 1 < path.size()) {
            std::vector<PixelPoint> run{path[s], path[s + 1]};
            geomfit::PolarLine line = geomfit::fit_line(std::span<const PixelPoint>(run));
            std::size_t v = s + 2;
            while (v < path.size() &&
                   geomfit::point_line_distance(path[v], line) <= cfg.line_tolerance + kDistanceSlack) {
                run.push_back(path[v]);
                line = geomfit::fit_line(std::span<const PixelPoint>(run));
                ++v;
            }
            const auto extent = geomfit::segment_extent(run, line);
            if (extent.length > cfg.min_line_length) {
                out.segments.push_back({{line.p, line.alpha, extent.length}, std::move(run)});
            } else {
                out.residual.insert(out.residual.end(), run.begin(), run.end());
            }
            s = v;
        }
        if (s + 1 == path.size()) out.residual.push_back(path[s]);
    }
    std::sort(out.residual.begin(), out.residual.end());
    return out;
}

namespace {

struct ArcFit {
    geomfit::EllipseCoefficients conic;
    geomfit::GeometricEllipse geo;
};

// Thinner or far larger ellipses than the run itself describe straight
// pieces, not arcs.
constexpr double kMinMinorAxis = 1.0;
constexpr double kMaxAxisToSpan = 3.0;

double span_of(std::span<const PixelPoint> run) {
    int x0 = run.front().x, x1 = x0, y0 = run.front().y, y1 = y0;
    for (const auto& p : run) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

std::optional<ArcFit> try_fit_arc(std::span<const PixelPoint> run, const EncoderConfig& cfg) {
    const auto pts = to_real(run);
    try {
        ArcFit fit;
        fit.conic = geomfit::fit_ellipse(pts);
        fit.geo = geomfit::conic_to_geometric(fit.conic);
        if (fit.geo.b < kMinMinorAxis || fit.geo.a > kMaxAxisToSpan * span_of(run)) return std::nullopt;
        double total = 0.0;
        for (const auto& p : pts) total += geomfit::sampson_distance(p, fit.conic);
        if (!(total / static_cast<double>(pts.size()) <= cfg.ellipse_residual)) return std::nullopt;
        return fit;
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool within_ccw(double angle, double from, double to) {
    return geomfit::wrap_degrees(angle - from) <= geomfit::wrap_degrees(to - from);
}

EllipseArcCode make_arc_code(const ArcFit& fit, std::span<const PixelPoint> run, const EncoderConfig& cfg) {
    geomfit::GeometricEllipse geo = fit.geo;
    if (geo.b / geo.a >= cfg.circular_ratio) geo.phi = 0.0;
    PixelPoint first = run.front();
    PixelPoint last = run.back();
    const PixelPoint mid = run[run.size() / 2];
    auto angles = geomfit::arc_angles(geo, first.to_real(), last.to_real());
    const auto mid_angles = geomfit::arc_angles(geo, mid.to_real(), last.to_real());
    if (!within_ccw(mid_angles.beta, angles.beta, angles.gamma)) std::swap(angles.beta, angles.gamma);
    return {geo.x0, geo.y0, geo.a, geo.b, geo.phi, angles.beta, angles.gamma};
}

bool touches(std::span<const PixelPoint> a, const std::set<PixelPoint>& b) {
    for (const auto& p : a)
        for (const auto& s : kSteps)
            if (b.count({p.x + s[0], p.y + s[1]})) return true;
    return false;
}

/// Moves every leftover that touches a host (directly or through other
/// leftovers) into that host. Returns the leftovers that touch nothing.
template <typename Host, typename PixelsOf, typename MergeInto>
std::vector<std::vector<PixelPoint>> absorb_leftovers(std::vector<std::vector<PixelPoint>> leftovers,
                                                      std::vector<Host>& hosts, PixelsOf&& pixels_of,
                                                      MergeInto&& merge_into) {
    std::vector<std::set<PixelPoint>> host_sets;
    for (auto& h : hosts) {
        const auto px = pixels_of(h);
        host_sets.emplace_back(px.begin(), px.end());
    }
    bool changed = true;
    while (changed && !leftovers.empty()) {
        changed = false;
        for (auto it = leftovers.begin(); it != leftovers.end();) {
            std::size_t target = hosts.size();
            for (std::size_t h = 0; h < hosts.size(); ++h)
                if (touches(*it, host_sets[h])) {
                    target = h;
                    break;
                }
            if (target == hosts.size()) {
                ++it;
                continue;
            }
            host_sets[target].insert(it->begin(), it->end());
            merge_into(hosts[target], *it);
            it = leftovers.erase(it);
            changed = true;
        }
    }
    return leftovers;
}

}  // namespace

ArcClustering cluster_ellipses(std::span<const PixelPoint> residual, const EncoderConfig& cfg) {
    constexpr std::size_t kMinArcPixels = 5;
    ArcClustering out;
    for (const auto& group : raster::connected_groups(residual)) {
        std::vector<ExtractedArc> arcs;
        std::vector<std::vector<PixelPoint>> leftovers;
        std::vector<PixelPoint> pending;  // consecutive pixels that could not seed an arc
        const auto flush_pending = [&] {
            if (!pending.empty()) leftovers.push_back(std::exchange(pending, {}));
        };
        for (const auto& path : walk_paths(group)) {
            std::size_t s = 0;
            while (s < path.size()) {
                if (path.size() - s < kMinArcPixels) {
                    pending.insert(pending.end(), path.begin() + static_cast<std::ptrdiff_t>(s), path.end());
                    break;
                }
                // Longest admissible run from s; short skeleton runs fit poorly
                // even when the whole arc fits well, so every length is tried.
                std::optional<ArcFit> fit;
                std::size_t e = path.size();
                for (; e >= s + kMinArcPixels; --e)
                    if ((fit = try_fit_arc(std::span(path).subspan(s, e - s), cfg))) break;
                if (!fit) {
                    pending.push_back(path[s]);
                    ++s;
                    continue;
                }
                flush_pending();
                const auto run = std::span(path).subspan(s, e - s);
                arcs.push_back({make_arc_code(*fit, run, cfg), {run.begin(), run.end()}, {}});
                s = e;
            }
            flush_pending();
        }
        auto rest = absorb_leftovers(
            std::move(leftovers), arcs, [](const ExtractedArc& a) { return a.pixels; },
            [](ExtractedArc& a, const std::vector<PixelPoint>& px) {
                a.merged.insert(a.merged.end(), px.begin(), px.end());
            });
        for (auto& a : arcs) out.arcs.push_back(std::move(a));
        for (auto& r : rest) out.leftovers.push_back(std::move(r));
    }
    return out;
}

namespace {

struct StrokeDecomposition {
    std::vector<PrimitiveCode> primitives;
    StrokeAccounting accounting;
};

StrokeDecomposition decompose(const raster::Stroke& stroke, const EncoderConfig& cfg) {
    if (stroke.pixels.empty()) throw PreconditionError("encode_stroke on an empty stroke");
    StrokeDecomposition out;
    if (stroke.pixels.size() <= static_cast<std::size_t>(cfg.dot_max)) {
        out.primitives.push_back({PointCode{stroke.centroid.x, stroke.centroid.y}, stroke.centroid,
                                  stroke.pixels.size()});
        out.accounting.point_pixels = stroke.pixels.size();
        return out;
    }

    auto lines = extract_lines(stroke, cfg);
    auto arcs = cluster_ellipses(lines.residual, cfg);

    struct LineHost {
        ExtractedLine* line;
        std::vector<PixelPoint> extra;
    };
    std::vector<LineHost> hosts;
    for (auto& l : lines.segments) hosts.push_back({&l, {}});
    auto orphans = absorb_leftovers(
        std::move(arcs.leftovers), hosts,
        [](const LineHost& h) {
            auto px = h.line->pixels;
            px.insert(px.end(), h.extra.begin(), h.extra.end());
            return px;
        },
        [](LineHost& h, const std::vector<PixelPoint>& px) { h.extra.insert(h.extra.end(), px.begin(), px.end()); });

    for (const auto& h : hosts) {
        out.primitives.push_back({h.line->code, raster::centroid(h.line->pixels), h.line->pixels.size()});
        out.accounting.line_pixels += h.line->pixels.size() + h.extra.size();
    }
    for (const auto& a : arcs.arcs) {
        out.primitives.push_back({a.code, raster::centroid(a.pixels), a.pixels.size()});
        out.accounting.arc_pixels += a.pixels.size() + a.merged.size();
    }
    // Orphans that touch each other form one dot-like primitive.
    std::vector<PixelPoint> orphan_pixels;
    for (const auto& o : orphans) orphan_pixels.insert(orphan_pixels.end(), o.begin(), o.end());
    for (const auto& g : raster::connected_groups(orphan_pixels)) {
        const Point2d c = raster::centroid(g);
        out.primitives.push_back({PointCode{c.x, c.y}, c, g.size()});
        out.accounting.point_pixels += g.size();
    }

    std::stable_sort(out.primitives.begin(), out.primitives.end(), [](const PrimitiveCode& a, const PrimitiveCode& b) {
        if (a.anchor.x != b.anchor.x) return a.anchor.x < b.anchor.x;
        if (a.anchor.y != b.anchor.y) return a.anchor.y < b.anchor.y;
        return a.pixel_count > b.pixel_count;
    });
    const std::size_t claimed = out.accounting.line_pixels + out.accounting.arc_pixels + out.accounting.point_pixels;
    out.accounting.dropped_pixels = stroke.pixels.size() - std::min(claimed, stroke.pixels.size());
    return out;
}

}  // namespace

SubWordCode encode_stroke(const raster::Stroke& stroke, const EncoderConfig& cfg) {
    auto parts = decompose(stroke, cfg);
    std::vector<Point2d> anchors;
    for (const auto& p : parts.primitives) anchors.push_back(p.anchor);
    const auto dirs = neighbor_directions(anchors);
    SubWordCode code;
    for (std::size_t i = 0; i < parts.primitives.size(); ++i)
        code.elements.push_back({std::move(parts.primitives[i]), dirs[i]});
    return code;
}

StrokeAccounting account_stroke(const raster::Stroke& stroke, const EncoderConfig& cfg) {
    return decompose(stroke, cfg).accounting;
}

WordCode encode_skeleton(const raster::BinaryRaster& skeleton, const EncoderConfig& cfg) {
    cfg.validate();
    const auto strokes = order_strokes(raster::segment(skeleton));
    std::vector<Point2d> centroids;
    for (const auto& s : strokes) centroids.push_back(s.centroid);
    const auto dirs = neighbor_directions(centroids);
    WordCode word;
    for (std::size_t i = 0; i < strokes.size(); ++i)
        word.subwords.push_back({encode_stroke(strokes[i], cfg), dirs[i], strokes[i].centroid});
    return word;
}

WordCode encode_word(const raster::BinaryRaster& image, const EncoderConfig& cfg) {
    return encode_skeleton(raster::thin(image), cfg);
}

SubWordCode scale_code(const SubWordCode& code, double factor) {
    SubWordCode out = code;
    for (auto& el : out.elements) {
        el.code.anchor = {el.code.anchor.x * factor, el.code.anchor.y * factor};
        std::visit(
            [factor](auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, PointCode>) {
                    shape.x *= factor;
                    shape.y *= factor;
                } else if constexpr (std::is_same_v<T, LineSegmentCode>) {
                    shape.p *= factor;
                    shape.length *= factor;
                } else {
                    shape.x0 *= factor;
                    shape.y0 *= factor;
                    shape.a *= factor;
                    shape.b *= factor;
                }
            },
            el.code.shape);
    }
    return out;
}

WordCode scale_word(const WordCode& word, double factor) {
    WordCode out = word;
    for (auto& sw : out.subwords) {
        sw.code = scale_code(sw.code, factor);
        sw.centroid = {sw.centroid.x * factor, sw.centroid.y * factor};
    }
    return out;
}

SubWordCode flatten(const WordCode& word) {
    SubWordCode out;
    for (const auto& sw : word.subwords)
        out.elements.insert(out.elements.end(), sw.code.elements.begin(), sw.code.elements.end());
    return out;
}

}  // namespace shapecode::encoder
