#include "trisectrix/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trisectrix/curve.hpp"
#include "trisectrix/root_find.hpp"

namespace trisectrix::linkage {

namespace {

constexpr double kBracketEps = 1e-9;
constexpr int kMaxIterations = 200;
constexpr double kResidualTarget = 1e-13;

// Valid for u in (0, pi]; u = pi is the closure state with E at O.
LinkageState state_unchecked(double u) {
    const double half = 0.5 * u;
    // C.y = s sin u - cos u = 1  =>  s = (1 + cos u) / sin u = cot(u/2)
    const double s = std::cos(half) / std::sin(half);
    const Point leg = geom::unit_vector(u);
    const Point across{std::sin(u), -std::cos(u)};
    const Point e = s * leg;
    return {u, s, e + across, e - across, e};
}

void check_range(double u_min, double u_max, int steps) {
    if (!(u_min > 0.0) || !(u_min < u_max) || !(u_max < geom::kPi) || steps < 2) {
        throw Error(Errc::BadRange, "need 0 < u_min < u_max < pi and steps >= 2");
    }
}

double grid_value(double lo, double hi, int n, int i) {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

LinkageState state_from_leg_angle(double u) {
    if (!(u > 0.0) || !(u < geom::kPi)) {
        throw Error(Errc::OutOfRange, "leg angle must lie in (0, pi), got " + std::to_string(u));
    }
    return state_unchecked(u);
}

std::vector<LinkageState> trace_curve_serial(double u_min, double u_max, int steps) {
    check_range(u_min, u_max, steps);
    std::vector<LinkageState> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = state_unchecked(grid_value(u_min, u_max, steps, i));
    }
    return out;
}

std::vector<LinkageState> trace_curve(double u_min, double u_max, int steps) {
    check_range(u_min, u_max, steps);
    std::vector<LinkageState> out(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = state_unchecked(grid_value(u_min, u_max, steps, i));
    }
    return out;
}

double tracing_angle(double u) { return geom::wrap_two_pi(geom::polar_angle(state_unchecked(u).D)); }

PlacementSolution scudder_place(double phi) {
    if (!(phi > 0.0) || !(phi <= curve::kMaxAngle + curve::kAngleSlack)) {
        throw Error(Errc::OutOfRange, "angle must lie in (0, 3pi/2], got " + std::to_string(phi));
    }
    const auto residual = [phi](double u) { return tracing_angle(u) - phi; };

    double lo = kBracketEps;
    double hi = geom::kPi - kBracketEps;
    // The open bracket stops 1.5e-9 rad short of 3pi/2; close it at u = pi.
    if (residual(hi) < 0.0) {
        const double at_closure = residual(geom::kPi);
        if (at_closure < 0.0 && at_closure >= -curve::kAngleSlack) {
            return {state_unchecked(geom::kPi), phi, -at_closure, 0};
        }
        hi = geom::kPi;
    }

    const RootResult root =
        find_root_bracketed(residual, lo, hi, 0.0, kResidualTarget, kMaxIterations);
    if (!root.converged) {
        throw Error(Errc::BracketFailure,
                    "placement search failed for angle " + std::to_string(phi));
    }
    return {state_unchecked(root.x), phi, std::abs(root.fx), root.iterations};
}

Certificate verify_placement(const PlacementSolution& sol, double tol) {
    Certificate cert(tol);
    const LinkageState& st = sol.state;
    const Point o{0.0, 0.0};
    const Point f = geom::foot_of_perpendicular(st.C, geom::Line::x_axis());
    const Point cd = st.D - st.C;

    cert.add("cd_length", std::abs(geom::norm(cd) - 2.0));
    cert.add("c_on_line", std::abs(st.C.y - 1.0));
    cert.add("cf_length", std::abs(geom::distance(st.C, f) - 1.0));
    cert.add("oc_eq_od", std::abs(geom::distance(o, st.C) - geom::distance(o, st.D)));
    const double oe = geom::norm(st.E);
    cert.add("oe_perp_cd", oe > 0.0 ? std::abs(geom::dot(st.E, cd)) / (oe * geom::norm(cd)) : 0.0);

    // Sectors OA->OC, OC->OE, OE->OD. At closure E sits on O; the leg
    // direction then stands in for OE.
    const double a_c = geom::polar_angle(st.C);
    const double a_e = oe > 0.0 ? geom::polar_angle(st.E) : st.u;
    const double a_d = geom::polar_angle(st.D);
    const double s1 = geom::ccw_sweep(0.0, a_c);
    const double s2 = geom::ccw_sweep(a_c, a_e);
    const double s3 = geom::ccw_sweep(a_e, a_d);
    cert.add("equal_sectors", std::max({s1, s2, s3}) - std::min({s1, s2, s3}));
    cert.add("d_on_ray", std::abs(geom::angle_diff(a_d, sol.phi)));
    return cert;
}

}  // namespace trisectrix::linkage
