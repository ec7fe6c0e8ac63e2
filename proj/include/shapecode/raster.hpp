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

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace shapecode {

/// Real-valued plane point. Same axes as PixelPoint (x right, y down).
struct Point2d {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2d&, const Point2d&) = default;
};

/// Integer pixel position; origin top-left, x grows right, y grows down.
struct PixelPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelPoint&, const PixelPoint&) = default;

    /// Row-major order: by y, then x.
    friend std::strong_ordering operator<=>(const PixelPoint& a, const PixelPoint& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }

    Point2d to_real() const { return {static_cast<double>(x), static_cast<double>(y)}; }
};

std::vector<Point2d> to_real(std::span<const PixelPoint> pixels);

}  // namespace shapecode

namespace shapecode::raster {

/// 8-bit grayscale image, row-major.
class GrayRaster {
public:
    GrayRaster(int width, int height, std::vector<std::uint8_t> samples);
    GrayRaster(int width, int height, std::uint8_t fill = 255);

    int width() const { return width_; }
    int height() const { return height_; }
    std::uint8_t at(int x, int y) const { return samples_[index(x, y)]; }
    void set(int x, int y, std::uint8_t v) { samples_[index(x, y)] = v; }
    std::span<const std::uint8_t> samples() const { return samples_; }

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<std::uint8_t> samples_;
};

/// Row-major foreground mask. A 0x0 raster is allowed and is simply empty.
class BinaryRaster {
public:
    BinaryRaster() = default;
    BinaryRaster(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }

    bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    /// Out-of-raster positions read as background.
    bool at(int x, int y) const { return contains(x, y) && bits_[index(x, y)] != 0; }
    bool at(PixelPoint p) const { return at(p.x, p.y); }
    void set(int x, int y, bool on = true) { bits_[index(x, y)] = on ? 1 : 0; }
    void set(PixelPoint p, bool on = true) { set(p.x, p.y, on); }

    std::size_t foreground_count() const;
    /// Foreground pixels in row-major order.
    std::vector<PixelPoint> foreground() const;

    friend bool operator==(const BinaryRaster&, const BinaryRaster&) = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// One 8-connected group of foreground pixels (a sub-word or a dot).
struct Stroke {
    std::vector<PixelPoint> pixels;  ///< row-major, no duplicates
    Point2d centroid;

    friend bool operator==(const Stroke&, const Stroke&) = default;
};

/// Sorts and de-duplicates `pixels` into row-major order and computes the centroid.
/// Throws PreconditionError when `pixels` is empty.
Stroke make_stroke(std::vector<PixelPoint> pixels);

/// Dark-on-light: a sample is foreground iff it is strictly below `threshold`.
BinaryRaster binarize(const GrayRaster& image, int threshold = 128);

/// Zhang-Suen skeleton, iterated to a fixpoint. Neighbours outside the raster
/// count as background.
BinaryRaster thin(const BinaryRaster& image);

/// 8-connected components, ordered by their first pixel in row-major scan.
std::vector<Stroke> segment(const BinaryRaster& image);

/// Arithmetic mean of the pixel coordinates.
Point2d centroid(std::span<const PixelPoint> pixels);

/// 8-connected components of an arbitrary pixel set (row-major within and across groups).
std::vector<std::vector<PixelPoint>> connected_groups(std::span<const PixelPoint> pixels);

/// Translated copy of `image` on a canvas enlarged by (dx, dy); dx, dy >= 0.
BinaryRaster translate(const BinaryRaster& image, int dx, int dy);

}  // namespace shapecode::raster
