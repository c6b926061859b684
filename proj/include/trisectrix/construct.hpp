#pragma once

#include <string_view>
#include <vector>

#include "trisectrix/certificate.hpp"
#include "trisectrix/geom.hpp"

namespace trisectrix::construct {

using geom::Point;
using geom::Ray;

enum class Method { Curve, Scudder };

std::string_view method_name(Method m);

struct TrisectionResult {
    double phi = 0.0;
    Method method = Method::Curve;
    Ray ray1;  // claimed phi/3
    Ray ray2;  // claimed 2phi/3
    Point C;
    Point D;
    Point E;
    double residual_rad = 0.0;  // |ray1 - phi/3|
    double unit = 1.0;          // straightedge width the construction was drawn with
    int iterations = 0;         // root-finder iterations (Scudder only)
};

/// Which of the two points where the radius-2 circle about D meets y = 1
/// becomes C.
enum class CirclePick { Rightmost, Leftmost };

/// Curve method: D on the traced branch along OB, C the right-most point of
/// the radius-2 circle about D on the line y = 1, OC the first trisector and
/// the bisector of COD the second. `unit` rescales every construction
/// length (straightedge width 1 -> unit).
/// Throws OutOfRange unless 0 < phi <= 3pi/2.
TrisectionResult trisect_via_curve(double phi, double unit = 1.0);

/// Runs the circle/bisection steps of the curve method from a given D.
/// Exposed so that rejected curve roots and the left-hand circle point can
/// be pushed through the same pipeline and shown to fail.
/// Throws EmptyIntersection when the circle misses y = unit.
TrisectionResult complete_curve_construction(double phi, Point D, double unit = 1.0,
                                             CirclePick pick = CirclePick::Rightmost);

/// Scudder method: places the square numerically; OC and the inside edge OE
/// are the trisectors.
/// Throws OutOfRange unless 0 < phi <= 3pi/2; BracketFailure propagates.
TrisectionResult trisect_via_scudder(double phi);

TrisectionResult trisect(double phi, Method method);

/// Congruence residuals for a finished construction: both ray errors, equal
/// sectors, D on OB, C on y = unit, |CD| = 2, |CF| = 1, |OC| = |OD| and
/// OE perpendicular to CD. Lengths are measured in units.
Certificate verify_trisection(const TrisectionResult& res, double tol);

struct MethodStats {
    Method method = Method::Curve;
    double max_error_rad = 0.0;
    double mean_error_rad = 0.0;
    double argmax_deg = 0.0;
    int max_iterations = 0;
    int samples = 0;
    std::vector<double> failures;  // degrees
};

struct SweepReport {
    double phi_min_deg = 0.0;
    double phi_max_deg = 0.0;
    double step_deg = 0.0;
    double tolerance = 0.0;
    std::vector<MethodStats> methods;
};

/// The angle grid phi_min, phi_min + step, ... <= phi_max (degrees).
/// Throws BadRange unless 0 < phi_min <= phi_max < 270 and step > 0.
std::vector<double> sweep_grid(double phi_min_deg, double phi_max_deg, double step_deg);

/// Trisects and verifies every grid angle with each method. Grid points run
/// in parallel; aggregation is in grid order, so the report equals
/// sweep_verify_serial's exactly.
SweepReport sweep_verify(double phi_min_deg, double phi_max_deg, double step_deg,
                         const std::vector<Method>& methods, double tol = 1e-9);
SweepReport sweep_verify_serial(double phi_min_deg, double phi_max_deg, double step_deg,
                                const std::vector<Method>& methods, double tol = 1e-9);

inline double deg_to_rad(double deg) { return deg * (geom::kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / geom::kPi); }

}  // namespace trisectrix::construct
