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

#include <optional>
#include <span>
#include <vector>

#include "shapecode/encoder.hpp"

/// Tolerance relations between primitive codes, coded elements and element
/// sequences. Positions (p, centers, point coordinates) never take part in a
/// comparison, so every relation is translation invariant.
namespace shapecode::matcher {

using encoder::CodedElement;
using encoder::EllipseArcCode;
using encoder::Freeman;
using encoder::LineSegmentCode;
using encoder::PointCode;
using encoder::Primitive;
using encoder::SubWordCode;
using encoder::WordCode;

struct MatchTolerances {
    double length = 6.0;  ///< Δl, px
    double alpha = 8.0;   ///< Δα, degrees
    double axis_a = 6.0;  ///< Δa, px
    double axis_b = 6.0;  ///< Δb, px
    double phi = 5.0;     ///< Δφ, degrees
    double beta = 5.0;    ///< Δβ, degrees
    double gamma = 5.0;   ///< Δγ, degrees
    double point = 3.0;   ///< Δpt, px; kept for configuration symmetry, points compare by kind only

    /// Throws PreconditionError unless every field is strictly positive.
    void validate() const;

    friend bool operator==(const MatchTolerances&, const MatchTolerances&) = default;
};

/// Distance between two angles modulo `period` degrees, in [0, period / 2].
double angle_distance(double a, double b, double period);

bool line_equiv(const LineSegmentCode& i, const LineSegmentCode& j, const MatchTolerances& t);
bool line_subset(const LineSegmentCode& i, const LineSegmentCode& j, const MatchTolerances& t);
bool arc_equiv(const EllipseArcCode& i, const EllipseArcCode& j, const MatchTolerances& t);
bool arc_subset(const EllipseArcCode& i, const EllipseArcCode& j, const MatchTolerances& t);
bool point_equiv(const PointCode& i, const PointCode& j, const MatchTolerances& t);
bool point_subset(const PointCode& i, const PointCode& j, const MatchTolerances& t);

/// Kind dispatch; different kinds are never related.
bool primitive_equiv(const Primitive& i, const Primitive& j, const MatchTolerances& t);
bool primitive_subset(const Primitive& i, const Primitive& j, const MatchTolerances& t);
/// equiv or subset: the containment used when aligning sequences.
bool primitive_contained(const Primitive& i, const Primitive& j, const MatchTolerances& t);

/// Vector sum of the non-null codes; Null when all are null or the sum vanishes.
Freeman freeman_sum(std::span<const Freeman> dirs);

/// Equivalent primitives and identical directions.
bool element_equiv(const CodedElement& i, const CodedElement& j, const MatchTolerances& t);

/// Contained primitive; each direction of `i` equals that of `j` or is Null.
bool element_subset(const CodedElement& i, const CodedElement& j, const MatchTolerances& t);

/// Whether element `i` of `c` matches d[q + k] after a hop of k elements from
/// d[q]: the primitive is contained, each direction of c[i] is Null or equals
/// the freeman_sum of the same direction over d[q+1 .. q+k], and c[i-1] is
/// subset of or itself matched with d[q]. For i = 0 only the first two
/// conditions apply. Throws PreconditionError on out-of-range indices.
bool element_match(std::span<const CodedElement> c, std::size_t i, std::span<const CodedElement> d, std::size_t q,
                   std::size_t k, const MatchTolerances& t);

bool sequence_equiv(std::span<const CodedElement> c, std::span<const CodedElement> d, const MatchTolerances& t);

/// C is a subset of D when its elements can be placed on strictly increasing
/// positions r of D with c[0] subset of d[r0] and every later c[i] either
/// subset of d[ri] or matching it after the hop from d[r(i-1)]. An empty C is
/// a subset of anything.
bool sequence_subset(std::span<const CodedElement> c, std::span<const CodedElement> d, const MatchTolerances& t);

/// Lexicographically earliest alignment of C into D, if any.
std::optional<std::vector<std::size_t>> align(std::span<const CodedElement> c, std::span<const CodedElement> d,
                                              const MatchTolerances& t);

/// Earliest alignment for every feasible anchor position of c[0], in anchor order.
std::vector<std::vector<std::size_t>> alignments(std::span<const CodedElement> c, std::span<const CodedElement> d,
                                                 const MatchTolerances& t);

/// Sum of tolerance-normalized parameter differences over aligned pairs plus
/// one per element of D skipped inside the aligned span. Lower is closer.
double alignment_cost(std::span<const CodedElement> c, std::span<const CodedElement> d,
                      std::span<const std::size_t> aligned, const MatchTolerances& t);

struct MatchPosition {
    std::size_t subword = 0;
    std::size_t offset = 0;             ///< index of the element aligned with target[0]
    std::vector<std::size_t> aligned;   ///< element indices inside the sub-word

    friend bool operator==(const MatchPosition&, const MatchPosition&) = default;
};

/// Every (sub-word, anchor) at which `target` is a sequence subset of the
/// sub-word elements starting at that anchor. Empty targets match nowhere.
std::vector<MatchPosition> find_matches(const WordCode& word, const SubWordCode& target, const MatchTolerances& t);

}  // namespace shapecode::matcher
