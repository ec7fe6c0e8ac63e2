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

#include "shapecode/svg.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "shapecode/error.hpp"

namespace shapecode::svg {

namespace {

void polyline(std::ostream& out, const std::vector<Point2d>& pts, const char* colour) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"0.6\" points=\"";
    for (const auto& p : pts) out << p.x + 0.5 << ',' << p.y + 0.5 << ' ';
    out << "\"/>\n";
}

void draw(std::ostream& out, const encoder::CodedElement& el) {
    const Point2d c = el.code.anchor;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, encoder::PointCode>) {
                out << "<circle cx=\"" << s.x + 0.5 << "\" cy=\"" << s.y + 0.5
                    << "\" r=\"1.2\" fill=\"none\" stroke=\"green\" stroke-width=\"0.6\"/>\n";
            } else if constexpr (std::is_same_v<T, encoder::LineSegmentCode>) {
                const double a = geomfit::deg_to_rad(s.alpha);
                const double tx = std::sin(a) * s.length / 2.0, ty = -std::cos(a) * s.length / 2.0;
                polyline(out, {{c.x - tx, c.y - ty}, {c.x + tx, c.y + ty}}, "blue");
            } else {
                const geomfit::GeometricEllipse geo{s.x0, s.y0, s.a, s.b, s.phi};
                const double span = geomfit::wrap_degrees(s.gamma - s.beta);
                std::vector<Point2d> pts;
                const int steps = std::max(2, static_cast<int>(span / 5.0));
                for (int k = 0; k <= steps; ++k) {
                    // Arc angles are polar angles about the centre; convert to the parametric angle.
                    const double theta = geomfit::deg_to_rad(s.beta + span * k / steps);
                    const double t = std::atan2(s.a * std::sin(theta), s.b * std::cos(theta));
                    pts.push_back(geomfit::ellipse_point(geo, geomfit::rad_to_deg(t)));
                }
                polyline(out, pts, "red");
            }
        },
        el.code.shape);
    if (el.dirs[0] != encoder::Freeman::Null) {
        const double a = geomfit::deg_to_rad(45.0 * encoder::to_int(el.dirs[0]));
        polyline(out, {c, {c.x + 4.0 * std::cos(a), c.y - 4.0 * std::sin(a)}}, "orange");
    }
}

}  // namespace

void write_overlay(std::ostream& out, const raster::BinaryRaster& skeleton, const encoder::WordCode& word) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << skeleton.width() * 4 << "\" height=\""
        << skeleton.height() * 4 << "\" viewBox=\"0 0 " << skeleton.width() << ' ' << skeleton.height() << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& p : skeleton.foreground())
        out << "<rect x=\"" << p.x << "\" y=\"" << p.y << "\" width=\"1\" height=\"1\" fill=\"#bbb\"/>\n";
    for (const auto& sw : word.subwords)
        for (const auto& el : sw.code.elements) draw(out, el);
    out << "</svg>\n";
}

void write_overlay(const std::filesystem::path& path, const raster::BinaryRaster& skeleton,
                   const encoder::WordCode& word) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    write_overlay(out, skeleton, word);
}

}  // namespace shapecode::svg
