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

#include "shapecode/pnm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "shapecode/error.hpp"

namespace shapecode::pnm {

namespace {

void skip_space_and_comments(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

long read_header_int(std::istream& in, const char* what) {
    skip_space_and_comments(in);
    long v = 0;
    if (!(in >> v)) throw ParseError(std::string("malformed PNM header: bad ") + what);
    return v;
}

}  // namespace

Image read(std::istream& in) {
    char magic[2] = {0, 0};
    if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] < '1' || magic[1] > '5' || magic[1] == '3')
        throw ParseError("unsupported or missing PNM magic number");
    const char kind = magic[1];

    const long width = read_header_int(in, "width");
    const long height = read_header_int(in, "height");
    if (width < 1 || height < 1 || width > 1 << 16 || height > 1 << 16)
        throw ParseError("PNM dimensions out of range");
    long maxval = 1;
    if (kind == '2' || kind == '5') {
        maxval = read_header_int(in, "maxval");
        if (maxval < 1 || maxval > 65535) throw ParseError("PGM maxval out of range");
    }
    const int w = static_cast<int>(width);
    const int h = static_cast<int>(height);

    if (kind == '1') {
        raster::BinaryRaster img(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) {
                skip_space_and_comments(in);
                const int c = in.get();
                if (c != '0' && c != '1') throw ParseError("truncated or invalid P1 pixel data");
                if (c == '1') img.set(x, y);
            }
        return img;
    }
    if (kind == '4') {
        in.get();  // single whitespace after the header
        raster::BinaryRaster img(w, h);
        const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
        std::string row(row_bytes, '\0');
        for (int y = 0; y < h; ++y) {
            if (!in.read(row.data(), static_cast<std::streamsize>(row_bytes)))
                throw ParseError("truncated P4 pixel data");
            for (int x = 0; x < w; ++x) {
                const auto byte = static_cast<unsigned char>(row[static_cast<std::size_t>(x) / 8]);
                if (byte & (0x80u >> (x % 8))) img.set(x, y);
            }
        }
        return img;
    }

    std::vector<std::uint8_t> samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    const auto rescale = [maxval](long v) {
        return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
    };
    if (kind == '2') {
        for (auto& s : samples) {
            skip_space_and_comments(in);
            long v = 0;
            if (!(in >> v) || v < 0 || v > maxval) throw ParseError("truncated or invalid P2 pixel data");
            s = rescale(v);
        }
    } else {
        in.get();
        const bool wide = maxval > 255;
        for (auto& s : samples) {
            long v = 0;
            const int hi = in.get();
            if (hi == EOF) throw ParseError("truncated P5 pixel data");
            v = hi;
            if (wide) {
                const int lo = in.get();
                if (lo == EOF) throw ParseError("truncated P5 pixel data");
                v = (v << 8) | lo;
            }
            if (v > maxval) throw ParseError("P5 sample exceeds maxval");
            s = rescale(v);
        }
    }
    return raster::GrayRaster(w, h, std::move(samples));
}

Image read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open image " + path.string());
    return read(in);
}

raster::BinaryRaster read_binary(const std::filesystem::path& path, int threshold) {
    auto img = read(path);
    if (auto* bin = std::get_if<raster::BinaryRaster>(&img)) return std::move(*bin);
    return raster::binarize(std::get<raster::GrayRaster>(img), threshold);
}

void write_pbm(std::ostream& out, const raster::BinaryRaster& image, bool plain) {
    out << (plain ? "P1\n" : "P4\n") << image.width() << ' ' << image.height() << '\n';
    if (plain) {
        for (int y = 0; y < image.height(); ++y) {
            for (int x = 0; x < image.width(); ++x) out << (image.at(x, y) ? '1' : '0');
            out << '\n';
        }
        return;
    }
    const std::size_t row_bytes = (static_cast<std::size_t>(image.width()) + 7) / 8;
    for (int y = 0; y < image.height(); ++y) {
        std::string row(row_bytes, '\0');
        for (int x = 0; x < image.width(); ++x)
            if (image.at(x, y))
                row[static_cast<std::size_t>(x) / 8] = static_cast<char>(
                    static_cast<unsigned char>(row[static_cast<std::size_t>(x) / 8]) | (0x80u >> (x % 8)));
        out.write(row.data(), static_cast<std::streamsize>(row_bytes));
    }
}

void write_pbm(const std::filesystem::path& path, const raster::BinaryRaster& image, bool plain) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    write_pbm(out, image, plain);
}

void write_pgm(std::ostream& out, const raster::GrayRaster& image) {
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    const auto s = image.samples();
    out.write(reinterpret_cast<const char*>(s.data()), static_cast<std::streamsize>(s.size()));
}

}  // namespace shapecode::pnm
