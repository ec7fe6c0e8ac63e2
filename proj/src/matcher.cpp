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

#include "shapecode/matcher.hpp"

#include <array>
#include <cmath>

#include "shapecode/error.hpp"

namespace shapecode::matcher {

void MatchTolerances::validate() const {
    for (double v : {length, alpha, axis_a, axis_b, phi, beta, gamma, point})
        if (!(v > 0.0)) throw PreconditionError("match tolerances must be strictly positive");
}

double angle_distance(double a, double b, double period) {
    const double d = geomfit::wrap_degrees(a - b, period);
    return std::min(d, period - d);
}

bool line_equiv(const LineSegmentCode& i, const LineSegmentCode& j, const MatchTolerances& t) {
    return std::abs(i.length - j.length) < t.length && angle_distance(i.alpha, j.alpha, 180.0) < t.alpha;
}

bool line_subset(const LineSegmentCode& i, const LineSegmentCode& j, const MatchTolerances& t) {
    return i.length <= j.length && angle_distance(i.alpha, j.alpha, 180.0) < t.alpha;
}

namespace {

bool arc_shape_close(const EllipseArcCode& i, const EllipseArcCode& j, const MatchTolerances& t) {
    return std::abs(i.a - j.a) < t.axis_a && std::abs(i.b - j.b) < t.axis_b &&
           angle_distance(i.phi, j.phi, 180.0) < t.phi;
}

}  // namespace

bool arc_equiv(const EllipseArcCode& i, const EllipseArcCode& j, const MatchTolerances& t) {
    return arc_shape_close(i, j, t) && angle_distance(i.beta, j.beta, 360.0) < t.beta &&
           angle_distance(i.gamma, j.gamma, 360.0) < t.gamma;
}

bool arc_subset(const EllipseArcCode& i, const EllipseArcCode& j, const MatchTolerances& t) {
    if (!arc_shape_close(i, j, t)) return false;
    const double span_i = geomfit::wrap_degrees(i.gamma - i.beta);
    const double span_j = geomfit::wrap_degrees(j.gamma - j.beta);
    // Start of i relative to start of j, allowed to sit slightly before it.
    double s = geomfit::wrap_degrees(i.beta - j.beta);
    if (s > 360.0 - t.beta) s -= 360.0;
    return s > -t.beta && s + span_i < span_j + t.gamma;
}

bool point_equiv(const PointCode&, const PointCode&, const MatchTolerances&) { return true; }
bool point_subset(const PointCode&, const PointCode&, const MatchTolerances&) { return true; }

namespace {

template <typename Relation>
bool dispatch(const Primitive& i, const Primitive& j, Relation&& rel) {
    if (i.index() != j.index()) return false;
    return std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            return rel(a, std::get<T>(j));
        },
        i);
}

}  // namespace

bool primitive_equiv(const Primitive& i, const Primitive& j, const MatchTolerances& t) {
    return dispatch(i, j, [&](const auto& a, const auto& b) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, PointCode>)
            return point_equiv(a, b, t);
        else if constexpr (std::is_same_v<T, LineSegmentCode>)
            return line_equiv(a, b, t);
        else
            return arc_equiv(a, b, t);
    });
}

bool primitive_subset(const Primitive& i, const Primitive& j, const MatchTolerances& t) {
    return dispatch(i, j, [&](const auto& a, const auto& b) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, PointCode>)
            return point_subset(a, b, t);
        else if constexpr (std::is_same_v<T, LineSegmentCode>)
            return line_subset(a, b, t);
        else
            return arc_subset(a, b, t);
    });
}

bool primitive_contained(const Primitive& i, const Primitive& j, const MatchTolerances& t) {
    return primitive_equiv(i, j, t) || primitive_subset(i, j, t);
}

Freeman freeman_sum(std::span<const Freeman> dirs) {
    constexpr double r = 0.70710678118654752440;
    // Unit vectors with y pointing up (North = code 2).
    constexpr std::array<std::array<double, 2>, 8> kUnit = {{
        {1, 0}, {r, r}, {0, 1}, {-r, r}, {-1, 0}, {-r, -r}, {0, -1}, {r, -r},
    }};
    double sx = 0.0, sy = 0.0;
    for (Freeman f : dirs) {
        if (f == Freeman::Null) continue;
        const auto& u = kUnit[static_cast<std::size_t>(encoder::to_int(f))];
        sx += u[0];
        sy += u[1];
    }
    if (std::abs(sx) < 1e-9 && std::abs(sy) < 1e-9) return Freeman::Null;
    return encoder::freeman_direction({0.0, 0.0}, {sx, -sy});
}

bool element_equiv(const CodedElement& i, const CodedElement& j, const MatchTolerances& t) {
    return i.dirs == j.dirs && primitive_equiv(i.code.shape, j.code.shape, t);
}

bool element_subset(const CodedElement& i, const CodedElement& j, const MatchTolerances& t) {
    for (std::size_t k = 0; k < 3; ++k)
        if (i.dirs[k] != Freeman::Null && i.dirs[k] != j.dirs[k]) return false;
    return primitive_contained(i.code.shape, j.code.shape, t);
}

namespace {

/// Primitive and direction part of element_match, without the predecessor.
bool hop_match(const CodedElement& ci, std::span<const CodedElement> d, std::size_t q, std::size_t k,
               const MatchTolerances& t) {
    if (!primitive_contained(ci.code.shape, d[q + k].code.shape, t)) return false;
    std::vector<Freeman> run(k);
    for (std::size_t j = 0; j < 3; ++j) {
        if (ci.dirs[j] == Freeman::Null) continue;
        for (std::size_t h = 0; h < k; ++h) run[h] = d[q + 1 + h].dirs[j];
        if (ci.dirs[j] != freeman_sum(run)) return false;
    }
    return true;
}

/// Whether c[i] may sit on d[r] when c[i-1] sits on d[q].
bool step_ok(std::span<const CodedElement> c, std::size_t i, std::span<const CodedElement> d, std::size_t q,
             std::size_t r, const MatchTolerances& t) {
    return element_subset(c[i], d[r], t) || hop_match(c[i], d, q, r - q, t);
}

struct Feasibility {
    // tail[i][r]: c[i..] can be placed with c[i] on d[r], given c[i] itself fits there.
    std::vector<std::vector<char>> tail;
};

Feasibility feasibility(std::span<const CodedElement> c, std::span<const CodedElement> d, const MatchTolerances& t) {
    const std::size_t n = c.size(), m = d.size();
    Feasibility f;
    f.tail.assign(n, std::vector<char>(m, 0));
    for (std::size_t r = 0; r < m; ++r) f.tail[n - 1][r] = 1;
    for (std::size_t i = n - 1; i-- > 0;)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = r + 1; s < m && !f.tail[i][r]; ++s)
                if (f.tail[i + 1][s] && step_ok(c, i + 1, d, r, s, t)) f.tail[i][r] = 1;
    return f;
}

std::vector<std::size_t> complete_from(std::span<const CodedElement> c, std::span<const CodedElement> d,
                                       std::size_t anchor, const Feasibility& f, const MatchTolerances& t) {
    std::vector<std::size_t> out{anchor};
    for (std::size_t i = 1; i < c.size(); ++i) {
        const std::size_t q = out.back();
        for (std::size_t s = q + 1; s < d.size(); ++s)
            if (f.tail[i][s] && step_ok(c, i, d, q, s, t)) {
                out.push_back(s);
                break;
            }
    }
    return out;
}

}  // namespace

bool element_match(std::span<const CodedElement> c, std::size_t i, std::span<const CodedElement> d, std::size_t q,
                   std::size_t k, const MatchTolerances& t) {
    if (i >= c.size() || k < 1 || q + k >= d.size()) throw PreconditionError("element_match index out of range");
    if (!hop_match(c[i], d, q, k, t)) return false;
    if (i == 0) return true;
    if (element_subset(c[i - 1], d[q], t)) return true;
    for (std::size_t p = 0; p < q; ++p)
        if (element_match(c, i - 1, d, p, q - p, t)) return true;
    return false;
}

bool sequence_equiv(std::span<const CodedElement> c, std::span<const CodedElement> d, const MatchTolerances& t) {
    if (c.size() != d.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!element_equiv(c[i], d[i], t)) return false;
    return true;
}

std::vector<std::vector<std::size_t>> alignments(std::span<const CodedElement> c, std::span<const CodedElement> d,
                                                 const MatchTolerances& t) {
    std::vector<std::vector<std::size_t>> out;
    if (c.empty() || c.size() > d.size()) return out;
    const auto f = feasibility(c, d, t);
    for (std::size_t r = 0; r < d.size(); ++r)
        if (f.tail[0][r] && element_subset(c[0], d[r], t)) out.push_back(complete_from(c, d, r, f, t));
    return out;
}

std::optional<std::vector<std::size_t>> align(std::span<const CodedElement> c, std::span<const CodedElement> d,
                                              const MatchTolerances& t) {
    if (c.empty()) return std::vector<std::size_t>{};
    if (c.size() > d.size()) return std::nullopt;
    const auto f = feasibility(c, d, t);
    for (std::size_t r = 0; r < d.size(); ++r)
        if (f.tail[0][r] && element_subset(c[0], d[r], t)) return complete_from(c, d, r, f, t);
    return std::nullopt;
}

bool sequence_subset(std::span<const CodedElement> c, std::span<const CodedElement> d, const MatchTolerances& t) {
    return align(c, d, t).has_value();
}

namespace {

double primitive_cost(const Primitive& i, const Primitive& j, const MatchTolerances& t) {
    if (i.index() != j.index()) return 0.0;
    return std::visit(
        [&](const auto& a) -> double {
            using T = std::decay_t<decltype(a)>;
            const auto& b = std::get<T>(j);
            if constexpr (std::is_same_v<T, PointCode>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, LineSegmentCode>) {
                return std::abs(a.length - b.length) / t.length + angle_distance(a.alpha, b.alpha, 180.0) / t.alpha;
            } else {
                return std::abs(a.a - b.a) / t.axis_a + std::abs(a.b - b.b) / t.axis_b +
                       angle_distance(a.phi, b.phi, 180.0) / t.phi + angle_distance(a.beta, b.beta, 360.0) / t.beta +
                       angle_distance(a.gamma, b.gamma, 360.0) / t.gamma;
            }
        },
        i);
}

}  // namespace

double alignment_cost(std::span<const CodedElement> c, std::span<const CodedElement> d,
                      std::span<const std::size_t> aligned, const MatchTolerances& t) {
    if (aligned.size() != c.size()) throw PreconditionError("alignment length differs from the pattern");
    if (aligned.empty()) return 0.0;
    double cost = static_cast<double>(aligned.back() - aligned.front() + 1 - aligned.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (aligned[i] >= d.size()) throw PreconditionError("alignment index out of range");
        cost += primitive_cost(c[i].code.shape, d[aligned[i]].code.shape, t);
    }
    return cost;
}

std::vector<MatchPosition> find_matches(const WordCode& word, const SubWordCode& target, const MatchTolerances& t) {
    std::vector<MatchPosition> out;
    if (target.elements.empty()) return out;
    for (std::size_t s = 0; s < word.subwords.size(); ++s)
        for (auto& a : alignments(target.elements, word.subwords[s].code.elements, t)) {
            const std::size_t anchor = a.front();
            out.push_back({s, anchor, std::move(a)});
        }
    return out;
}

}  // namespace shapecode::matcher
