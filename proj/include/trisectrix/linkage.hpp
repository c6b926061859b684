#pragma once

#include <vector>

#include "trisectrix/certificate.hpp"
#include "trisectrix/geom.hpp"

// Kinematics of the T-compass. The ring sits at O and can rotate; the leg
// of the T passes through it at angle u and slides so that its midpoint E
// is at distance s from O. The two-unit top CD is perpendicular to the leg
// with E at its middle. Pencil C rides the straightedge line y = 1, which
// fixes s; pencil D draws the curve.
//
// None of this module uses the curve's closed forms, so it can serve as an
// independent check of them.
namespace trisectrix::linkage {

using geom::Point;

struct LinkageState {
    double u = 0.0;  // leg angle
    double s = 0.0;  // slide |OE|
    Point C;         // pencil on y = 1
    Point D;         // tracing pencil
    Point E;         // midpoint of CD, on the leg
};

struct PlacementSolution {
    LinkageState state;
    double phi = 0.0;       // angle being trisected
    double residual = 0.0;  // |polar angle of D - phi|
    int iterations = 0;
};

/// Throws OutOfRange unless 0 < u < pi.
LinkageState state_from_leg_angle(double u);

/// Evenly spaced states over [u_min, u_max], endpoints included. Evaluated
/// in parallel; trace_curve_serial is the reference.
/// Throws BadRange unless 0 < u_min < u_max < pi and steps >= 2.
std::vector<LinkageState> trace_curve(double u_min, double u_max, int steps);
std::vector<LinkageState> trace_curve_serial(double u_min, double u_max, int steps);

/// Counterclockwise polar angle of the tracing pencil, in [0, 2pi). It rises
/// continuously from 0 to 3pi/2 as u runs over (0, pi].
double tracing_angle(double u);

/// Solves for the leg angle that puts D on the ray at angle phi (the
/// two-unit mark on OB), with C on y = 1 and the leg through O. phi = 3pi/2
/// resolves to the closure state u = pi, where E reaches O.
/// Throws OutOfRange unless 0 < phi <= 3pi/2; BracketFailure if the
/// bracketed search cannot converge.
PlacementSolution scudder_place(double phi);

/// Residuals of the congruence of right triangles COF, COE and DOE, with F
/// the foot of C on OA.
Certificate verify_placement(const PlacementSolution& sol, double tol);

}  // namespace trisectrix::linkage
