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

#include "shapecode/geomfit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "shapecode/error.hpp"

namespace shapecode::geomfit {

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

double wrap_degrees(double deg, double period) {
    double r = std::fmod(deg, period);
    if (r < 0.0) r += period;
    // fmod of a tiny negative value can round up to exactly `period`
    if (r >= period) r -= period;
    return r;
}

namespace {

struct Moments {
    double mean_x = 0.0, mean_y = 0.0;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
};

Moments central_moments(std::span<const Point2d> pts) {
    Moments m;
    for (const auto& p : pts) {
        m.mean_x += p.x;
        m.mean_y += p.y;
    }
    const auto n = static_cast<double>(pts.size());
    m.mean_x /= n;
    m.mean_y /= n;
    for (const auto& p : pts) {
        const double dx = p.x - m.mean_x;
        const double dy = p.y - m.mean_y;
        m.sxx += dx * dx;
        m.syy += dy * dy;
        m.sxy += dx * dy;
    }
    return m;
}

std::size_t distinct_count(std::span<const Point2d> pts, std::size_t stop_at) {
    std::set<std::pair<double, double>> seen;
    for (const auto& p : pts) {
        seen.emplace(p.x, p.y);
        if (seen.size() >= stop_at) break;
    }
    return seen.size();
}

// Orthogonal residual about the centroid; independent of p.
double centered_residual(const Moments& m, double alpha_rad) {
    const double c = std::cos(alpha_rad);
    const double s = std::sin(alpha_rad);
    return c * c * m.sxx + 2.0 * c * s * m.sxy + s * s * m.syy;
}

}  // namespace

PolarLine fit_line(std::span<const Point2d> points) {
    if (distinct_count(points, 2) < 2) throw DegenerateInput("line fit needs at least two distinct points");
    const Moments m = central_moments(points);

    // tan 2α = -2 Σ(ȳ-y)(x̄-x) / Σ[(ȳ-y)² - (x̄-x)²]
    const double base = 0.5 * std::atan2(-2.0 * m.sxy, m.syy - m.sxx);
    const double other = base + kPi / 2.0;
    double alpha = base;
    if (centered_residual(m, other) < centered_residual(m, base)) alpha = other;

    double p = m.mean_x * std::cos(alpha) + m.mean_y * std::sin(alpha);
    const double scale = std::max({1.0, std::abs(m.mean_x), std::abs(m.mean_y)});
    double alpha_deg = rad_to_deg(alpha);
    if (std::abs(p) <= 1e-12 * scale) {
        // Through the origin both normals are valid; keep the one in [0, 180).
        p = 0.0;
        alpha_deg = wrap_degrees(alpha_deg, 180.0);
    } else if (p < 0.0) {
        p = -p;
        alpha_deg += 180.0;
    }
    return {p, wrap_degrees(alpha_deg)};
}

PolarLine fit_line(std::span<const PixelPoint> pixels) {
    const auto pts = to_real(pixels);
    return fit_line(pts);
}

double point_line_distance(Point2d pt, const PolarLine& line) {
    const double a = deg_to_rad(line.alpha);
    return std::abs(pt.x * std::cos(a) + pt.y * std::sin(a) - line.p);
}

double point_line_distance(PixelPoint pt, const PolarLine& line) { return point_line_distance(pt.to_real(), line); }

double line_residual(std::span<const Point2d> points, const PolarLine& line) {
    double sum = 0.0;
    for (const auto& p : points) {
        const double d = point_line_distance(p, line);
        sum += d * d;
    }
    return sum;
}

SegmentExtent segment_extent(std::span<const PixelPoint> pixels, const PolarLine& line) {
    if (pixels.empty()) throw PreconditionError("segment extent of an empty pixel set");
    const double a = deg_to_rad(line.alpha);
    const double tx = std::sin(a);
    const double ty = -std::cos(a);
    // Project relative to the first pixel so the span is translation-exact.
    const PixelPoint origin = pixels.front();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    PixelPoint lo_px{}, hi_px{};
    for (const auto& p : pixels) {
        const double s = (p.x - origin.x) * tx + (p.y - origin.y) * ty;
        if (s < lo || (s == lo && p < lo_px)) {
            lo = s;
            lo_px = p;
        }
        if (s > hi || (s == hi && p < hi_px)) {
            hi = s;
            hi_px = p;
        }
    }
    return {hi - lo, lo_px, hi_px};
}

EllipseCoefficients fit_ellipse(std::span<const Point2d> points) {
    if (distinct_count(points, 5) < 5) throw DegenerateInput("ellipse fit needs at least five distinct points");
    const Moments m = central_moments(points);
    {
        // Collinear point sets have a rank-deficient scatter matrix.
        const double tr = m.sxx + m.syy;
        const double det = m.sxx * m.syy - m.sxy * m.sxy;
        const double lambda_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
        if (!(tr > 0.0) || lambda_min <= 1e-10 * tr) throw DegenerateInput("ellipse fit on collinear points");
    }

    // Fit in centered, unit-RMS coordinates; the constrained algebraic fit is
    // similarity invariant, so only conditioning changes.
    const double n = static_cast<double>(points.size());
    const double scale = std::sqrt((m.sxx + m.syy) / (2.0 * n));

    Eigen::MatrixXd d1(points.size(), 3);
    Eigen::MatrixXd d2(points.size(), 3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x = (points[i].x - m.mean_x) / scale;
        const double y = (points[i].y - m.mean_y) / scale;
        const auto row = static_cast<Eigen::Index>(i);
        d1.row(row) << x * x, x * y, y * y;
        d2.row(row) << x, y, 1.0;
    }
    const Eigen::Matrix3d s1 = d1.transpose() * d1;
    const Eigen::Matrix3d s2 = d1.transpose() * d2;
    const Eigen::Matrix3d s3 = d2.transpose() * d2;

    const Eigen::FullPivLU<Eigen::Matrix3d> s3_lu(s3);
    if (!s3_lu.isInvertible()) throw DegenerateInput("ellipse fit: singular linear scatter matrix");
    const Eigen::Matrix3d t = -s3_lu.solve(s2.transpose());  // a2 = T a1
    const Eigen::Matrix3d reduced = s1 + s2 * t;

    Eigen::Matrix3d c1_inv;
    c1_inv << 0.0, 0.0, 0.5,
              0.0, -1.0, 0.0,
              0.5, 0.0, 0.0;
    const Eigen::Matrix3d mmat = c1_inv * reduced;

    const Eigen::EigenSolver<Eigen::Matrix3d> solver(mmat);
    if (solver.info() != Eigen::Success) throw NumericalFailure("ellipse fit: eigen-decomposition failed");

    // Eigenvalues share the sign of a1' C1 a1 because the reduced scatter is
    // positive semidefinite, so selecting on a positive constraint picks the
    // non-negative branch and still admits lambda = 0 for exact data.
    const auto values = solver.eigenvalues();
    const auto vectors = solver.eigenvectors();
    double best_lambda = std::numeric_limits<double>::infinity();
    Eigen::Vector3d best = Eigen::Vector3d::Zero();
    double max_abs = 0.0;
    for (Eigen::Index k = 0; k < 3; ++k) max_abs = std::max(max_abs, std::abs(values[k]));
    for (Eigen::Index k = 0; k < 3; ++k) {
        if (std::abs(values[k].imag()) > 1e-9 * std::max(1.0, max_abs)) continue;
        const Eigen::Vector3d v = vectors.col(k).real();
        const double cond = 4.0 * v[0] * v[2] - v[1] * v[1];
        if (!(cond > 0.0)) continue;
        if (values[k].real() < best_lambda) {
            best_lambda = values[k].real();
            best = v / std::sqrt(cond);
        }
    }
    if (!std::isfinite(best_lambda)) throw NumericalFailure("ellipse fit: no eigenvector satisfies 4ac - b^2 > 0");
    const Eigen::Vector3d lin = t * best;

    // Back to pixel coordinates: x' = (x - mx) / s.
    const double A = best[0], B = best[1], C = best[2], D = lin[0], E = lin[1], F = lin[2];
    const double s2inv = 1.0 / (scale * scale);
    const double mx = m.mean_x, my = m.mean_y;
    EllipseCoefficients out;
    out.a = A * s2inv;
    out.b = B * s2inv;
    out.c = C * s2inv;
    out.d = (-2.0 * A * mx - B * my) * s2inv + D / scale;
    out.e = (-2.0 * C * my - B * mx) * s2inv + E / scale;
    out.f = (A * mx * mx + B * mx * my + C * my * my) * s2inv - (D * mx + E * my) / scale + F;

    double k = 1.0 / std::sqrt(out.constraint());
    if (out.a + out.c < 0.0) k = -k;
    out.a *= k;
    out.b *= k;
    out.c *= k;
    out.d *= k;
    out.e *= k;
    out.f *= k;
    return out;
}

EllipseCoefficients fit_ellipse(std::span<const PixelPoint> pixels) {
    const auto pts = to_real(pixels);
    return fit_ellipse(pts);
}

double algebraic_residual(std::span<const Point2d> points, const EllipseCoefficients& conic) {
    double sum = 0.0;
    for (const auto& p : points) {
        const double f = conic.evaluate(p);
        sum += f * f;
    }
    return sum;
}

double sampson_distance(Point2d pt, const EllipseCoefficients& q) {
    const double gx = 2.0 * q.a * pt.x + q.b * pt.y + q.d;
    const double gy = q.b * pt.x + 2.0 * q.c * pt.y + q.e;
    const double g = std::hypot(gx, gy);
    const double f = std::abs(q.evaluate(pt));
    if (g == 0.0) return f == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return f / g;
}

GeometricEllipse conic_to_geometric(const EllipseCoefficients& conic) {
    EllipseCoefficients q = conic;
    const double det = q.constraint();
    if (!(det > 0.0)) throw PreconditionError("conic is not an ellipse (b^2 - 4ac >= 0)");
    if (q.a + q.c < 0.0) {
        q.a = -q.a;
        q.b = -q.b;
        q.c = -q.c;
        q.d = -q.d;
        q.e = -q.e;
        q.f = -q.f;
    }
    GeometricEllipse g;
    g.x0 = (q.b * q.e - 2.0 * q.c * q.d) / det;
    g.y0 = (q.b * q.d - 2.0 * q.a * q.e) / det;
    const double f0 = q.f + 0.5 * (q.d * g.x0 + q.e * g.y0);

    // Quadratic form [[a, h], [h, c]].
    const double h = 0.5 * q.b;
    const double mean = 0.5 * (q.a + q.c);
    const double rad = std::hypot(0.5 * (q.a - q.c), h);
    const double lambda_small = mean - rad;
    const double lambda_large = mean + rad;
    if (!(lambda_small > 0.0) || !(f0 < 0.0)) throw PreconditionError("conic describes an imaginary or point ellipse");

    g.a = std::sqrt(-f0 / lambda_small);
    g.b = std::sqrt(-f0 / lambda_large);

    // Major axis is the eigenvector of the smaller eigenvalue.
    double vx = 1.0, vy = 0.0;
    if (rad > 1e-15 * std::max(1.0, std::abs(mean))) {
        // Two algebraically equivalent forms; take the better-conditioned one.
        const double ax = lambda_small - q.c, ay = h;
        const double bx = h, by = lambda_small - q.a;
        if (std::hypot(ax, ay) >= std::hypot(bx, by)) {
            vx = ax;
            vy = ay;
        } else {
            vx = bx;
            vy = by;
        }
    }
    g.phi = wrap_degrees(rad_to_deg(std::atan2(vy, vx)), 180.0);
    return g;
}

EllipseCoefficients geometric_to_conic(const GeometricEllipse& geo) {
    const double t = deg_to_rad(geo.phi);
    const double c = std::cos(t), s = std::sin(t);
    const double ia = 1.0 / (geo.a * geo.a);
    const double ib = 1.0 / (geo.b * geo.b);
    EllipseCoefficients q;
    q.a = c * c * ia + s * s * ib;
    q.b = 2.0 * c * s * (ia - ib);
    q.c = s * s * ia + c * c * ib;
    q.d = -2.0 * q.a * geo.x0 - q.b * geo.y0;
    q.e = -q.b * geo.x0 - 2.0 * q.c * geo.y0;
    q.f = q.a * geo.x0 * geo.x0 + q.b * geo.x0 * geo.y0 + q.c * geo.y0 * geo.y0 - 1.0;
    const double k = 1.0 / std::sqrt(q.constraint());
    q.a *= k;
    q.b *= k;
    q.c *= k;
    q.d *= k;
    q.e *= k;
    q.f *= k;
    return q;
}

Point2d ellipse_point(const GeometricEllipse& geo, double t_deg) {
    const double t = deg_to_rad(t_deg);
    const double r = deg_to_rad(geo.phi);
    const double u = geo.a * std::cos(t);
    const double v = geo.b * std::sin(t);
    return {geo.x0 + u * std::cos(r) - v * std::sin(r), geo.y0 + u * std::sin(r) + v * std::cos(r)};
}

ArcAngles arc_angles(const GeometricEllipse& geo, Point2d start, Point2d end) {
    if (start == end) throw PreconditionError("arc start and end coincide");
    const auto angle_of = [&](Point2d p) {
        const double dx = p.x - geo.x0;
        const double dy = p.y - geo.y0;
        if (dx == 0.0 && dy == 0.0) throw PreconditionError("arc endpoint coincides with the ellipse center");
        return rad_to_deg(std::atan2(dy, dx));
    };
    return {wrap_degrees(angle_of(start) - geo.phi), wrap_degrees(angle_of(end) - geo.phi)};
}

}  // namespace shapecode::geomfit
