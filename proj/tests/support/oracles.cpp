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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace shapecode::testkit {

using raster::BinaryRaster;

BinaryRaster reference_thin(const BinaryRaster& image) {
    const int w = image.width(), h = image.height();
    // One pixel of background on every side.
    std::vector<std::vector<int>> g(static_cast<std::size_t>(h + 2), std::vector<int>(static_cast<std::size_t>(w + 2), 0));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) g[y + 1][x + 1] = image.at(x, y) ? 1 : 0;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            std::vector<std::pair<int, int>> doomed;
            for (int y = 1; y <= h; ++y)
                for (int x = 1; x <= w; ++x) {
                    if (!g[y][x]) continue;
                    // P2..P9 clockwise from north.
                    const int p[8] = {g[y - 1][x], g[y - 1][x + 1], g[y][x + 1], g[y + 1][x + 1],
                                      g[y + 1][x], g[y + 1][x - 1], g[y][x - 1], g[y - 1][x - 1]};
                    int b = 0, a = 0;
                    for (int k = 0; k < 8; ++k) {
                        b += p[k];
                        if (p[k] == 0 && p[(k + 1) % 8] == 1) ++a;
                    }
                    if (b < 2 || b > 6 || a != 1) continue;
                    const int p2 = p[0], p4 = p[2], p6 = p[4], p8 = p[6];
                    const bool c = pass == 0 ? (p2 * p4 * p6 == 0 && p4 * p6 * p8 == 0)
                                             : (p2 * p4 * p8 == 0 && p2 * p6 * p8 == 0);
                    if (c) doomed.emplace_back(x, y);
                }
            for (auto [x, y] : doomed) g[y][x] = 0;
            if (!doomed.empty()) changed = true;
        }
    }

    BinaryRaster out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (g[y + 1][x + 1]) out.set(x, y);
    return out;
}

std::size_t count_components(const BinaryRaster& image) {
    const int w = image.width(), h = image.height();
    std::vector<char> seen(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
    auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x); };
    std::size_t count = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (!image.at(x, y) || seen[idx(x, y)]) continue;
            ++count;
            std::vector<std::pair<int, int>> stack{{x, y}};
            seen[idx(x, y)] = 1;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int nx = cx + dx, ny = cy + dy;
                        if (!image.at(nx, ny) || seen[idx(nx, ny)]) continue;
                        seen[idx(nx, ny)] = 1;
                        stack.emplace_back(nx, ny);
                    }
            }
        }
    return count;
}

BinaryRaster random_blob(std::mt19937& rng) {
    std::uniform_int_distribution<int> canvas(24, 48);
    const int w = canvas(rng), h = canvas(rng);
    BinaryRaster img(w, h);
    std::uniform_int_distribution<int> shapes(1, 3);
    std::bernoulli_distribution disc(0.5);
    const int n = shapes(rng);
    for (int s = 0; s < n; ++s) {
        if (disc(rng)) {
            std::uniform_int_distribution<int> radius(2, 7);
            const int r = radius(rng);
            std::uniform_int_distribution<int> cx(r + 1, w - r - 2), cy(r + 1, h - r - 2);
            const int x0 = cx(rng), y0 = cy(rng);
            for (int y = y0 - r; y <= y0 + r; ++y)
                for (int x = x0 - r; x <= x0 + r; ++x)
                    if ((x - x0) * (x - x0) + (y - y0) * (y - y0) <= r * r) img.set(x, y);
        } else {
            std::uniform_int_distribution<int> side(3, 14);
            const int rw = side(rng), rh = side(rng);
            std::uniform_int_distribution<int> px(1, w - rw - 1), py(1, h - rh - 1);
            const int x0 = px(rng), y0 = py(rng);
            for (int y = y0; y < y0 + rh; ++y)
                for (int x = x0; x < x0 + rw; ++x) img.set(x, y);
        }
    }
    return img;
}

double line_sse(std::span<const Point2d> points, double alpha_deg, double p) {
    const double a = alpha_deg * 3.14159265358979323846 / 180.0;
    const double c = std::cos(a), s = std::sin(a);
    double sse = 0.0;
    for (const auto& pt : points) {
        const double r = pt.x * c + pt.y * s - p;
        sse += r * r;
    }
    return sse;
}

GridLine grid_line_oracle(std::span<const Point2d> points, double diag) {
    constexpr double kStepP = 0.05;
    GridLine best{0.0, 0.0, std::numeric_limits<double>::infinity()};
    for (int k = 0; k < 1800; ++k) {
        const double alpha = 0.1 * k;
        const double a = alpha * 3.14159265358979323846 / 180.0;
        const double c = std::cos(a), s = std::sin(a);
        double mean = 0.0;
        for (const auto& pt : points) mean += pt.x * c + pt.y * s;
        mean /= static_cast<double>(points.size());
        // SSE is a convex parabola in p with vertex at the mean projection,
        // so its grid minimum is one of the two grid points around it.
        const double lo = std::floor(mean / kStepP) * kStepP;
        for (double p : {lo, lo + kStepP}) {
            if (std::abs(p) > diag) continue;
            const double sse = line_sse(points, alpha, p);
            if (sse < best.sse) best = {alpha, p, sse};
        }
    }
    return best;
}

std::optional<std::vector<std::size_t>> brute_force_align(std::span<const encoder::CodedElement> c,
                                                          std::span<const encoder::CodedElement> d,
                                                          const matcher::MatchTolerances& t) {
    const std::size_t n = c.size(), m = d.size();
    if (n == 0) return std::vector<std::size_t>{};
    if (n > m) return std::nullopt;
    std::vector<std::size_t> r(n);
    // Tuples are generated in lexicographic order, so the first hit is the smallest.
    std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t from) -> bool {
        if (i == n) {
            if (!matcher::element_subset(c[0], d[r[0]], t)) return false;
            for (std::size_t j = 1; j < n; ++j)
                if (!matcher::element_subset(c[j], d[r[j]], t) &&
                    !matcher::element_match(c, j, d, r[j - 1], r[j] - r[j - 1], t))
                    return false;
            return true;
        }
        for (std::size_t x = from; x + (n - i) <= m; ++x) {
            r[i] = x;
            if (place(i + 1, x + 1)) return true;
        }
        return false;
    };
    if (place(0, 0)) return r;
    return std::nullopt;
}

encoder::Primitive random_primitive(std::mt19937& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    const int k = kind(rng);
    if (k == 0) {
        std::uniform_real_distribution<double> pos(0.0, 100.0);
        return encoder::PointCode{pos(rng), pos(rng)};
    }
    if (k <= 5) {
        std::uniform_int_distribution<int> alpha(0, 7), length(1, 5);
        std::uniform_real_distribution<double> jitter(-2.0, 2.0), p(0.0, 50.0);
        return encoder::LineSegmentCode{p(rng), geomfit::wrap_degrees(22.5 * alpha(rng) + jitter(rng)),
                                        5.0 * length(rng) + jitter(rng)};
    }
    std::uniform_int_distribution<int> axis(1, 4), quarter(0, 7), span(1, 4);
    std::uniform_real_distribution<double> jitter(-2.0, 2.0), pos(0.0, 100.0);
    const double a = 8.0 * axis(rng) + jitter(rng);
    const double b = std::min(a, 8.0 * axis(rng) + jitter(rng));
    const double beta = geomfit::wrap_degrees(45.0 * quarter(rng) + jitter(rng));
    const double gamma = geomfit::wrap_degrees(beta + 45.0 * span(rng) + jitter(rng));
    return encoder::EllipseArcCode{pos(rng), pos(rng), a, b, geomfit::wrap_degrees(45.0 * quarter(rng), 180.0),
                                   beta, gamma};
}

encoder::CodedElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> dir(0, 5);
    // Few distinct directions keep hop sums interesting.
    constexpr encoder::Freeman kPool[] = {encoder::Freeman::East,  encoder::Freeman::North,
                                          encoder::Freeman::West,  encoder::Freeman::South,
                                          encoder::Freeman::NorthEast, encoder::Freeman::Null};
    encoder::CodedElement e;
    e.code.shape = random_primitive(rng);
    for (auto& f : e.dirs) f = kPool[dir(rng)];
    return e;
}

std::vector<encoder::CodedElement> random_sequence(std::mt19937& rng, std::size_t length) {
    std::vector<encoder::CodedElement> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back(random_element(rng));
    return out;
}

std::pair<std::vector<encoder::CodedElement>, std::vector<encoder::CodedElement>> random_sequence_pair(
    std::mt19937& rng, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    auto c = random_sequence(rng, len(rng));
    std::bernoulli_distribution related(0.7), blank(0.3), filler(0.25), drop(0.1);
    if (!related(rng)) return {c, random_sequence(rng, len(rng))};

    std::uniform_real_distribution<double> jitter(-4.0, 4.0);
    for (auto& e : c)
        for (auto& f : e.dirs)
            if (blank(rng)) f = encoder::Freeman::Null;
    std::vector<encoder::CodedElement> d;
    for (const auto& e : c) {
        if (d.size() < max_length && filler(rng)) d.push_back(random_element(rng));
        if (d.size() >= max_length) break;
        if (drop(rng)) continue;
        auto copy = e;
        if (auto* l = std::get_if<encoder::LineSegmentCode>(&copy.code.shape)) {
            l->length += jitter(rng);
            l->alpha = geomfit::wrap_degrees(l->alpha + jitter(rng));
        } else if (auto* a = std::get_if<encoder::EllipseArcCode>(&copy.code.shape)) {
            a->a += jitter(rng);
            a->b = std::min(a->a, a->b + jitter(rng));
            a->beta = geomfit::wrap_degrees(a->beta + jitter(rng));
            a->gamma = geomfit::wrap_degrees(a->gamma + jitter(rng));
        }
        const auto fresh = random_element(rng);
        for (std::size_t k = 0; k < 3; ++k)
            if (copy.dirs[k] == encoder::Freeman::Null) copy.dirs[k] = fresh.dirs[k];
        d.push_back(copy);
    }
    return {c, d};
}

matcher::MatchTolerances random_tolerances(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.5, 12.0);
    return {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
}

}  // namespace shapecode::testkit
