#pragma once

#include <utility>
#include <vector>

#include "trisectrix/geom.hpp"

// The trisectrix  x^2 (3 - y) = (y - 2)^2 (y + 1).
//
// The compass draws only part of the algebraic curve. That part is
// parametrized by t in (0, pi/2]:
//
//     D(t) = (cos 3t, sin 3t) / sin t
//
// so the traced point sits at polar angle 3t and distance csc t, and
// y = 3 - 4 sin^2 t. The reflection x -> -x of the trace is the rest of
// the algebraic curve (the mirror branch). The two branches cross at the
// node (0, 2), t = pi/6; y = 3 is a horizontal asymptote as t -> 0.
namespace trisectrix::curve {

using geom::Point;

/// Largest admissible angle (270 degrees); a tiny excess from degree
/// conversion is tolerated.
inline constexpr double kMaxAngle = 1.5 * geom::kPi;
inline constexpr double kAngleSlack = 1e-12;

/// Trace parameter; one third of the polar angle of the traced point.
class TraceParam {
public:
    /// Throws OutOfDomain unless 0 < t <= pi/2.
    explicit TraceParam(double t);

    double value() const { return t_; }

private:
    double t_;
};

struct CurveIntersection {
    Point point;
    double r = 0.0;  // distance from O along the query ray
    bool on_trace = false;
    int multiplicity = 1;
};

struct TraceSample {
    double t = 0.0;
    Point point;
};

/// Residual scale used by all membership tolerances: F grows like |x|^3.
inline double residual_scale(Point p) {
    const double ax = std::abs(p.x);
    return 1.0 + ax * ax * ax;
}

/// F(x, y) = x^2 (3 - y) - (y - 2)^2 (y + 1). Even in x.
double implicit_value(Point p);

/// (dF/dx, dF/dy).
std::pair<double, double> implicit_gradient(Point p);

/// a = sqrt((3 - y)(y + 1)), the horizontal offset from D to the pencil
/// on y = 1. Throws OutOfDomain outside [-1, 3].
double half_chord(double y);

Point trace_point(TraceParam t);

/// Trace parameter recovered from the height of a curve point. Requires
/// -1 <= y <= 3 (small excursions from rounding are clamped).
double trace_param_from_height(double y);

/// True when p is on the algebraic curve (|F| <= tol * scale) and its polar
/// angle matches the traced branch at that height. Points with y >= 3 are
/// never on the trace. Throws OutOfDomain for y < -1.
bool on_trace(Point p, double tol);

/// n >= 2 uniformly spaced samples, both endpoints included.
/// Throws BadRange unless t_min < t_max and n >= 2. Samples are evaluated
/// in parallel; the result is identical to sample_trace_serial.
std::vector<TraceSample> sample_trace(TraceParam t_min, TraceParam t_max, int n);
std::vector<TraceSample> sample_trace_serial(TraceParam t_min, TraceParam t_max, int n);

/// Coefficients (c3, c2, c1, c0) of F(r cos phi, r sin phi) as a cubic in r.
struct RayCubic {
    double c3, c2, c1, c0;
};
RayCubic ray_cubic(double phi);

/// All curve points on the ray from O at angle phi with r > 0 and
/// -1 <= y < 3, ascending in r and classified by branch. Exactly one
/// result is on the trace.
/// Throws OutOfRange unless 0 < phi <= 3pi/2.
std::vector<CurveIntersection> intersect_ray(double phi);

/// The on-trace intersection with the ray at angle phi.
Point pick_trisection_point(double phi);

}  // namespace trisectrix::curve
