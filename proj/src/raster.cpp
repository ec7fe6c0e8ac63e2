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

#include "shapecode/raster.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>

#include "shapecode/error.hpp"

namespace shapecode {

std::vector<Point2d> to_real(std::span<const PixelPoint> pixels) {
    std::vector<Point2d> out;
    out.reserve(pixels.size());
    for (const auto& p : pixels) out.push_back(p.to_real());
    return out;
}

}  // namespace shapecode

namespace shapecode::raster {

GrayRaster::GrayRaster(int width, int height, std::vector<std::uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
    if (width < 1 || height < 1) throw PreconditionError("gray raster needs width, height >= 1");
    if (samples_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw PreconditionError("gray raster sample count does not match width x height");
}

GrayRaster::GrayRaster(int width, int height, std::uint8_t fill)
    : GrayRaster(width, height,
                 std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                               static_cast<std::size_t>(std::max(height, 0)),
                                           fill)) {}

BinaryRaster::BinaryRaster(int width, int height) : width_(width), height_(height) {
    if (width < 0 || height < 0) throw PreconditionError("negative raster size");
    bits_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
}

std::size_t BinaryRaster::foreground_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<PixelPoint> BinaryRaster::foreground() const {
    std::vector<PixelPoint> out;
    for (int y = 0; y < height_; ++y)
        for (int x = 0; x < width_; ++x)
            if (bits_[index(x, y)]) out.push_back({x, y});
    return out;
}

Point2d centroid(std::span<const PixelPoint> pixels) {
    if (pixels.empty()) throw PreconditionError("centroid of an empty stroke");
    // Integer sums are exact, which keeps centroids translation-exact.
    long long sx = 0;
    long long sy = 0;
    for (const auto& p : pixels) {
        sx += p.x;
        sy += p.y;
    }
    const auto n = static_cast<double>(pixels.size());
    return {static_cast<double>(sx) / n, static_cast<double>(sy) / n};
}

Stroke make_stroke(std::vector<PixelPoint> pixels) {
    if (pixels.empty()) throw PreconditionError("stroke must contain at least one pixel");
    std::sort(pixels.begin(), pixels.end());
    pixels.erase(std::unique(pixels.begin(), pixels.end()), pixels.end());
    Stroke s;
    s.centroid = centroid(pixels);
    s.pixels = std::move(pixels);
    return s;
}

BinaryRaster binarize(const GrayRaster& image, int threshold) {
    if (threshold < 0 || threshold > 255)
        throw PreconditionError("threshold must be within [0, 255], got " + std::to_string(threshold));
    BinaryRaster out(image.width(), image.height());
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (image.at(x, y) < threshold) out.set(x, y);
    return out;
}

namespace {

// P2..P9 clockwise from north, as in the original formulation.
constexpr std::array<std::array<int, 2>, 8> kRing = {{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1},
}};

bool deletable(const BinaryRaster& img, int x, int y, bool first_pass) {
    std::array<int, 8> p{};
    int b = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        p[i] = img.at(x + kRing[i][0], y + kRing[i][1]) ? 1 : 0;
        b += p[i];
    }
    if (b < 2 || b > 6) return false;
    int a = 0;
    for (std::size_t i = 0; i < 8; ++i)
        if (p[i] == 0 && p[(i + 1) % 8] == 1) ++a;
    if (a != 1) return false;
    // p[0]=P2(N) p[2]=P4(E) p[4]=P6(S) p[6]=P8(W)
    if (first_pass) return p[0] * p[2] * p[4] == 0 && p[2] * p[4] * p[6] == 0;
    return p[0] * p[2] * p[6] == 0 && p[0] * p[4] * p[6] == 0;
}

}  // namespace

BinaryRaster thin(const BinaryRaster& image) {
    BinaryRaster img = image;
    std::vector<PixelPoint> live = img.foreground();
    std::vector<PixelPoint> doomed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (bool first_pass : {true, false}) {
            doomed.clear();
            for (const auto& p : live)
                if (deletable(img, p.x, p.y, first_pass)) doomed.push_back(p);
            for (const auto& p : doomed) img.set(p, false);
            if (!doomed.empty()) {
                changed = true;
                std::erase_if(live, [&](const PixelPoint& p) { return !img.at(p); });
            }
        }
    }
    return img;
}

namespace {

template <typename IsMember, typename Visit>
void flood(PixelPoint seed, IsMember&& is_member, Visit&& visit) {
    std::deque<PixelPoint> queue{seed};
    visit(seed);
    while (!queue.empty()) {
        const PixelPoint c = queue.front();
        queue.pop_front();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                const PixelPoint n{c.x + dx, c.y + dy};
                if (is_member(n)) {
                    visit(n);
                    queue.push_back(n);
                }
            }
    }
}

}  // namespace

std::vector<Stroke> segment(const BinaryRaster& image) {
    std::vector<Stroke> strokes;
    BinaryRaster seen(image.width(), image.height());
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x) {
            if (!image.at(x, y) || seen.at(x, y)) continue;
            std::vector<PixelPoint> pixels;
            flood(
                {x, y}, [&](PixelPoint p) { return image.at(p) && !seen.at(p); },
                [&](PixelPoint p) {
                    seen.set(p);
                    pixels.push_back(p);
                });
            strokes.push_back(make_stroke(std::move(pixels)));
        }
    return strokes;
}

std::vector<std::vector<PixelPoint>> connected_groups(std::span<const PixelPoint> pixels) {
    std::set<PixelPoint> pending(pixels.begin(), pixels.end());
    std::vector<std::vector<PixelPoint>> groups;
    while (!pending.empty()) {
        std::vector<PixelPoint> group;
        const PixelPoint seed = *pending.begin();
        pending.erase(pending.begin());
        flood(
            seed, [&](PixelPoint p) { return pending.count(p) != 0; },
            [&](PixelPoint p) {
                pending.erase(p);
                group.push_back(p);
            });
        std::sort(group.begin(), group.end());
        groups.push_back(std::move(group));
    }
    return groups;
}

BinaryRaster translate(const BinaryRaster& image, int dx, int dy) {
    if (dx < 0 || dy < 0) throw PreconditionError("translate expects non-negative offsets");
    BinaryRaster out(image.width() + dx, image.height() + dy);
    for (const auto& p : image.foreground()) out.set(p.x + dx, p.y + dy);
    return out;
}

}  // namespace shapecode::raster
