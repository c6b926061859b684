#include "trisectrix/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

namespace trisectrix::construct {

namespace {

const Point kOrigin{0.0, 0.0};

void check_angle(double phi) {
    if (!(phi > 0.0) || !(phi <= curve::kMaxAngle + curve::kAngleSlack)) {
        throw Error(Errc::OutOfRange, "angle must lie in (0, 270] degrees, got " +
                                          std::to_string(rad_to_deg(phi)));
    }
}

struct Outcome {
    double error = 0.0;
    bool failed = false;
    int iterations = 0;
};

Outcome evaluate(double phi_deg, Method method, double tol) {
    try {
        const TrisectionResult res = trisect(deg_to_rad(phi_deg), method);
        const Certificate cert = verify_trisection(res, tol);
        const double err = std::max(cert.residual("ray1_error"), cert.residual("ray2_error"));
        return {err, !cert.pass(), res.iterations};
    } catch (const Error&) {
        return {std::numeric_limits<double>::infinity(), true, 0};
    }
}

MethodStats aggregate(Method method, const std::vector<double>& grid,
                      const std::vector<Outcome>& outcomes) {
    MethodStats st;
    st.method = method;
    st.samples = static_cast<int>(grid.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Outcome& o = outcomes[i];
        sum += o.error;
        if (o.error > st.max_error_rad || i == 0) {
            st.max_error_rad = o.error;
            st.argmax_deg = grid[i];
        }
        st.max_iterations = std::max(st.max_iterations, o.iterations);
        if (o.failed) st.failures.push_back(grid[i]);
    }
    st.mean_error_rad = grid.empty() ? 0.0 : sum / static_cast<double>(grid.size());
    return st;
}

SweepReport make_report(double lo, double hi, double step, double tol) {
    SweepReport rep;
    rep.phi_min_deg = lo;
    rep.phi_max_deg = hi;
    rep.step_deg = step;
    rep.tolerance = tol;
    return rep;
}

}  // namespace

std::string_view method_name(Method m) { return m == Method::Curve ? "curve" : "scudder"; }

TrisectionResult complete_curve_construction(double phi, Point D, double unit, CirclePick pick) {
    const auto hits =
        geom::intersect_circle_line(geom::Circle(D, 2.0 * unit), geom::Line::horizontal(unit));
    if (hits.empty()) {
        throw Error(Errc::EmptyIntersection, "circle about D misses the offset line");
    }
    // hits are sorted by x
    const Point C = pick == CirclePick::Rightmost ? hits.back() : hits.front();

    TrisectionResult res;
    res.phi = phi;
    res.method = Method::Curve;
    res.C = C;
    res.D = D;
    res.E = geom::midpoint(C, D);
    res.unit = unit;
    res.ray1 = Ray(kOrigin, geom::polar_angle(C));
    res.ray2 = geom::bisect_angle(res.ray1, Ray(kOrigin, geom::polar_angle(D)));
    res.residual_rad = std::abs(geom::angle_diff(res.ray1.angle(), phi / 3.0));
    return res;
}

TrisectionResult trisect_via_curve(double phi, double unit) {
    check_angle(phi);
    if (!(unit > 0.0) || !std::isfinite(unit)) {
        throw Error(Errc::OutOfDomain, "unit width must be positive");
    }
    return complete_curve_construction(phi, unit * curve::pick_trisection_point(phi), unit);
}

TrisectionResult trisect_via_scudder(double phi) {
    check_angle(phi);
    const linkage::PlacementSolution sol = linkage::scudder_place(phi);
    const linkage::LinkageState& st = sol.state;

    TrisectionResult res;
    res.phi = phi;
    res.method = Method::Scudder;
    res.C = st.C;
    res.D = st.D;
    res.E = st.E;
    res.ray1 = Ray(kOrigin, geom::polar_angle(st.C));
    // The inside edge lies along the leg.
    res.ray2 = Ray(kOrigin, st.u);
    res.residual_rad = std::abs(geom::angle_diff(res.ray1.angle(), phi / 3.0));
    res.iterations = sol.iterations;
    return res;
}

TrisectionResult trisect(double phi, Method method) {
    return method == Method::Curve ? trisect_via_curve(phi) : trisect_via_scudder(phi);
}

Certificate verify_trisection(const TrisectionResult& res, double tol) {
    Certificate cert(tol);
    const double phi = res.phi;
    const double a1 = res.ray1.angle();
    const double a2 = res.ray2.angle();
    const double unit = res.unit;

    cert.add("ray1_error", std::abs(geom::angle_diff(a1, phi / 3.0)));
    cert.add("ray2_error", std::abs(geom::angle_diff(a2, 2.0 * phi / 3.0)));

    const double s1 = geom::angle_diff(a1, 0.0);
    const double s2 = geom::angle_diff(a2, a1);
    const double s3 = geom::angle_diff(phi, a2);
    cert.add("equal_sectors", std::max({s1, s2, s3}) - std::min({s1, s2, s3}));

    cert.add("d_on_ray", std::abs(geom::angle_diff(geom::polar_angle(res.D), phi)));
    cert.add("c_on_line", std::abs(res.C.y - unit) / unit);

    const Point cd = res.D - res.C;
    cert.add("cd_length", std::abs(geom::norm(cd) - 2.0 * unit) / unit);
    const Point f = geom::foot_of_perpendicular(res.C, geom::Line::x_axis());
    cert.add("cf_length", std::abs(geom::distance(res.C, f) - unit) / unit);
    cert.add("oc_eq_od", std::abs(geom::norm(res.C) - geom::norm(res.D)) / unit);

    const double oe = geom::norm(res.E);
    cert.add("oe_perp_cd",
             oe > 0.0 ? std::abs(geom::dot(res.E, cd)) / (oe * geom::norm(cd)) : 0.0);
    return cert;
}

std::vector<double> sweep_grid(double phi_min_deg, double phi_max_deg, double step_deg) {
    if (!(phi_min_deg > 0.0) || !(phi_min_deg <= phi_max_deg) || !(phi_max_deg < 270.0) ||
        !(step_deg > 0.0)) {
        throw Error(Errc::BadRange, "need 0 < from <= to < 270 and step > 0");
    }
    const auto n = static_cast<std::size_t>(std::floor((phi_max_deg - phi_min_deg) / step_deg + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = phi_min_deg + static_cast<double>(i) * step_deg;
    return grid;
}

SweepReport sweep_verify_serial(double phi_min_deg, double phi_max_deg, double step_deg,
                                const std::vector<Method>& methods, double tol) {
    const std::vector<double> grid = sweep_grid(phi_min_deg, phi_max_deg, step_deg);
    SweepReport rep = make_report(phi_min_deg, phi_max_deg, step_deg, tol);
    for (Method m : methods) {
        std::vector<Outcome> outcomes(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) outcomes[i] = evaluate(grid[i], m, tol);
        rep.methods.push_back(aggregate(m, grid, outcomes));
    }
    return rep;
}

SweepReport sweep_verify(double phi_min_deg, double phi_max_deg, double step_deg,
                         const std::vector<Method>& methods, double tol) {
    const std::vector<double> grid = sweep_grid(phi_min_deg, phi_max_deg, step_deg);
    SweepReport rep = make_report(phi_min_deg, phi_max_deg, step_deg, tol);
    const auto n = static_cast<long>(grid.size());
    for (Method m : methods) {
        std::vector<Outcome> outcomes(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i) {
            outcomes[static_cast<std::size_t>(i)] = evaluate(grid[static_cast<std::size_t>(i)], m, tol);
        }
        rep.methods.push_back(aggregate(m, grid, outcomes));
    }
    return rep;
}

}  // namespace trisectrix::construct
