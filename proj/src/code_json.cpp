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

#include "shapecode/code_json.hpp"

#include <string>

#include "shapecode/error.hpp"

namespace shapecode::io {

using nlohmann::json;

namespace {

std::vector<double> numbers(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw ParseError(std::string(what) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Point2d point_from(const json& j, const char* what) {
    const auto v = numbers(j, what);
    if (v.size() != 2) throw ParseError(std::string(what) + " must have two numbers");
    return {v[0], v[1]};
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    return j.at(key);
}

json dirs_to_json(const encoder::Directions& d) {
    return json::array({encoder::to_int(d[0]), encoder::to_int(d[1]), encoder::to_int(d[2])});
}

encoder::Directions dirs_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("dirs must be three integers");
    encoder::Directions d{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) throw ParseError("dirs must be three integers");
        d[i] = encoder::freeman_from_int(j[i].get<int>());
    }
    return d;
}

}  // namespace

json to_json(const encoder::Primitive& p) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, encoder::PointCode>)
                return json::array({s.x, s.y});
            else if constexpr (std::is_same_v<T, encoder::LineSegmentCode>)
                return json::array({s.p, s.alpha, s.length});
            else
                return json::array({s.x0, s.y0, s.a, s.b, s.phi, s.beta, s.gamma});
        },
        p);
}

json to_json(const encoder::CodedElement& e) {
    return {{"code", to_json(e.code.shape)},
            {"dirs", dirs_to_json(e.dirs)},
            {"anchor", json::array({e.code.anchor.x, e.code.anchor.y})}};
}

json to_json(const encoder::SubWordCode& c) {
    json out = json::array();
    for (const auto& e : c.elements) out.push_back(to_json(e));
    return out;
}

json to_json(const encoder::WordCode& w) {
    json out = json::array();
    for (const auto& sw : w.subwords)
        out.push_back({{"elements", to_json(sw.code)},
                       {"dirs", dirs_to_json(sw.dirs)},
                       {"centroid", json::array({sw.centroid.x, sw.centroid.y})}});
    return out;
}

encoder::Primitive primitive_from_json(const json& j) {
    const auto v = numbers(j, "code");
    switch (v.size()) {
        case 2:
            return encoder::PointCode{v[0], v[1]};
        case 3:
            return encoder::LineSegmentCode{v[0], v[1], v[2]};
        case 7:
            return encoder::EllipseArcCode{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
        default:
            throw ParseError("code must have 2, 3 or 7 numbers");
    }
}

encoder::CodedElement element_from_json(const json& j) {
    encoder::CodedElement e;
    e.code.shape = primitive_from_json(member(j, "code"));
    e.dirs = dirs_from(member(j, "dirs"));
    e.code.anchor = point_from(member(j, "anchor"), "anchor");
    return e;
}

encoder::SubWordCode subword_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("sub-word code must be an array");
    encoder::SubWordCode c;
    for (const auto& e : j) c.elements.push_back(element_from_json(e));
    return c;
}

encoder::WordCode word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word code must be an array");
    encoder::WordCode w;
    for (const auto& sw : j)
        w.subwords.push_back({subword_from_json(member(sw, "elements")), dirs_from(member(sw, "dirs")),
                              point_from(member(sw, "centroid"), "centroid")});
    return w;
}

}  // namespace shapecode::io
