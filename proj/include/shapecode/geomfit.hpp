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

#include <span>

#include "shapecode/raster.hpp"

/// Closed-form line and ellipse regression over pixel sets.
///
/// Angles are in degrees. Line normals and ellipse angles are measured with
/// atan2(y, x) on raw pixel coordinates, i.e. "anticlockwise" in the
/// mathematical sense of the (x, y) axes. Trigonometry is done in radians.
namespace shapecode::geomfit {

inline constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg);
double rad_to_deg(double rad);
/// Maps `deg` into [0, period).
double wrap_degrees(double deg, double period = 360.0);

/// Line in normal form: x cos(alpha) + y sin(alpha) = p, with p >= 0.
struct PolarLine {
    double p = 0.0;
    double alpha = 0.0;  ///< degrees in [0, 360)

    friend bool operator==(const PolarLine&, const PolarLine&) = default;
};

/// Code of a fitted line segment: (p, alpha, l).
struct LineSegmentCode {
    double p = 0.0;
    double alpha = 0.0;
    double length = 0.0;

    friend bool operator==(const LineSegmentCode&, const LineSegmentCode&) = default;
};

/// Conic a x^2 + b xy + c y^2 + d x + e y + f = 0.
struct EllipseCoefficients {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;

    double evaluate(double x, double y) const { return a * x * x + b * x * y + c * y * y + d * x + e * y + f; }
    double evaluate(Point2d pt) const { return evaluate(pt.x, pt.y); }
    /// 4ac - b^2; positive for ellipses, 1 for fitted output.
    double constraint() const { return 4.0 * a * c - b * b; }

    friend bool operator==(const EllipseCoefficients&, const EllipseCoefficients&) = default;
};

/// Center, semi-axes (a >= b > 0) and major-axis rotation phi in [0, 180).
struct GeometricEllipse {
    double x0 = 0.0, y0 = 0.0;
    double a = 0.0, b = 0.0;
    double phi = 0.0;

    friend bool operator==(const GeometricEllipse&, const GeometricEllipse&) = default;
};

/// Arc code (x0, y0, a, b, phi, beta, gamma); the arc runs anticlockwise from
/// beta to gamma, both measured from the major axis.
struct EllipseArcCode {
    double x0 = 0.0, y0 = 0.0;
    double a = 0.0, b = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    friend bool operator==(const EllipseArcCode&, const EllipseArcCode&) = default;
};

struct ArcAngles {
    double beta = 0.0;
    double gamma = 0.0;
};

struct SegmentExtent {
    double length = 0.0;
    PixelPoint start;
    PixelPoint end;
};

/// Orthogonal least-squares line. Of the two stationary directions of
/// tan 2α the one with the smaller residual is kept. Throws DegenerateInput
/// for fewer than two distinct points.
PolarLine fit_line(std::span<const Point2d> points);
PolarLine fit_line(std::span<const PixelPoint> pixels);

/// Sum of squared orthogonal distances.
double line_residual(std::span<const Point2d> points, const PolarLine& line);

double point_line_distance(Point2d pt, const PolarLine& line);
double point_line_distance(PixelPoint pt, const PolarLine& line);

/// Projects pixels on the line direction (sin α, -cos α). Length is the
/// projection span; start/end attain min/max, ties going to the earlier
/// pixel in row-major order.
SegmentExtent segment_extent(std::span<const PixelPoint> pixels, const PolarLine& line);

/// Direct least-squares ellipse fit (Halir-Flusser reduction of the
/// Fitzgibbon problem). The result satisfies 4ac - b^2 = 1.
/// Throws DegenerateInput for fewer than five distinct or collinear points
/// and NumericalFailure when no eigenvector satisfies the ellipse constraint.
EllipseCoefficients fit_ellipse(std::span<const Point2d> points);
EllipseCoefficients fit_ellipse(std::span<const PixelPoint> pixels);

/// Sum of squared algebraic distances F(x, y)^2.
double algebraic_residual(std::span<const Point2d> points, const EllipseCoefficients& conic);

/// First-order geometric distance |F| / |grad F| of one point.
double sampson_distance(Point2d pt, const EllipseCoefficients& conic);

/// Throws PreconditionError unless b^2 - 4ac < 0 and the ellipse is real.
GeometricEllipse conic_to_geometric(const EllipseCoefficients& conic);

/// Inverse of conic_to_geometric, normalized to 4ac - b^2 = 1.
EllipseCoefficients geometric_to_conic(const GeometricEllipse& geo);

/// Point of `geo` at parametric angle t (degrees, measured from the major axis).
Point2d ellipse_point(const GeometricEllipse& geo, double t_deg);

/// beta = beta' - phi, gamma = gamma' - phi, both wrapped into [0, 360).
/// Throws PreconditionError when start equals end or either equals the center.
ArcAngles arc_angles(const GeometricEllipse& geo, Point2d start, Point2d end);

}  // namespace shapecode::geomfit
