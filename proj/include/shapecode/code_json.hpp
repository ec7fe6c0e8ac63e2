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

#include <json.hpp>

#include "shapecode/encoder.hpp"

/// JSON forms of codes. A primitive is a bare array: `[x, y]` for points,
/// `[p, alpha, l]` for lines and `[x0, y0, a, b, phi, beta, gamma]` for arcs.
/// An element is `{"code": primitive, "dirs": [F1, F2, F3], "anchor": [x, y]}`.
/// A word is an array of `{"elements": [...], "dirs": [...], "centroid": [x, y]}`.
namespace shapecode::io {

nlohmann::json to_json(const encoder::Primitive& p);
nlohmann::json to_json(const encoder::CodedElement& e);
nlohmann::json to_json(const encoder::SubWordCode& c);
nlohmann::json to_json(const encoder::WordCode& w);

/// Each parser throws ParseError on a shape mismatch.
encoder::Primitive primitive_from_json(const nlohmann::json& j);
encoder::CodedElement element_from_json(const nlohmann::json& j);
encoder::SubWordCode subword_from_json(const nlohmann::json& j);
encoder::WordCode word_from_json(const nlohmann::json& j);

}  // namespace shapecode::io
