#include "trisectrix/curve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trisectrix/cubic.hpp"

namespace trisectrix::curve {

namespace {

constexpr double kClassifyTol = 1e-9;
// Within ~1e-7 rad of the node the trace and mirror roots coalesce and the
// strict test can reject both; the best match is accepted up to this bound.
constexpr double kNodeFallbackTol = 1e-6;
constexpr double kHeightSlack = 1e-12;

void check_range(double t_min, double t_max, int n) {
    if (!(t_min < t_max) || n < 2) {
        throw Error(Errc::BadRange, "need t_min < t_max and at least two samples");
    }
}

double grid_value(double lo, double hi, int n, int i) {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Angular mismatch between p and the traced point at the same height.
double branch_mismatch(Point p) {
    const double t = trace_param_from_height(p.y);
    return std::abs(geom::angle_diff(geom::polar_angle(p), 3.0 * t));
}

}  // namespace

TraceParam::TraceParam(double t) : t_(t) {
    if (!(t > 0.0) || !(t <= 0.5 * geom::kPi)) {
        throw Error(Errc::OutOfDomain, "trace parameter must lie in (0, pi/2], got " + std::to_string(t));
    }
}

double implicit_value(Point p) {
    const double x2 = p.x * p.x;
    const double ym2 = p.y - 2.0;
    return x2 * (3.0 - p.y) - ym2 * ym2 * (p.y + 1.0);
}

std::pair<double, double> implicit_gradient(Point p) {
    const double ym2 = p.y - 2.0;
    return {2.0 * p.x * (3.0 - p.y), -p.x * p.x - 2.0 * ym2 * (p.y + 1.0) - ym2 * ym2};
}

double half_chord(double y) {
    if (!(y >= -1.0 && y <= 3.0)) {
        throw Error(Errc::OutOfDomain, "half chord needs -1 <= y <= 3, got " + std::to_string(y));
    }
    return std::sqrt((3.0 - y) * (y + 1.0));
}

Point trace_point(TraceParam param) {
    const double t = param.value();
    const double st = std::sin(t);
    return {std::cos(3.0 * t) / st, std::sin(3.0 * t) / st};
}

double trace_param_from_height(double y) {
    // sin t = sqrt(3 - y) / 2 and cos t = sqrt(y + 1) / 2; atan2 keeps full
    // accuracy at both ends of (0, pi/2].
    const double hi = std::max(3.0 - y, 0.0);
    const double lo = std::max(y + 1.0, 0.0);
    return std::atan2(std::sqrt(hi), std::sqrt(lo));
}

bool on_trace(Point p, double tol) {
    if (!(tol > 0.0)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    if (p.y < -1.0 - kHeightSlack) {
        throw Error(Errc::OutOfDomain, "no curve point below y = -1");
    }
    if (p.y >= 3.0) return false;
    if (std::abs(implicit_value(p)) > tol * residual_scale(p)) return false;
    if (p.x == 0.0 && p.y == 0.0) return false;
    return branch_mismatch(p) <= tol;
}

std::vector<TraceSample> sample_trace_serial(TraceParam t_min, TraceParam t_max, int n) {
    check_range(t_min.value(), t_max.value(), n);
    std::vector<TraceSample> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = grid_value(t_min.value(), t_max.value(), n, i);
        out[static_cast<std::size_t>(i)] = {t, trace_point(TraceParam(t))};
    }
    return out;
}

std::vector<TraceSample> sample_trace(TraceParam t_min, TraceParam t_max, int n) {
    check_range(t_min.value(), t_max.value(), n);
    std::vector<TraceSample> out(static_cast<std::size_t>(n));
    const double lo = t_min.value();
    const double hi = t_max.value();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double t = grid_value(lo, hi, n, i);
        out[static_cast<std::size_t>(i)] = {t, trace_point(TraceParam(t))};
    }
    return out;
}

RayCubic ray_cubic(double phi) {
    // F(r cos phi, r sin phi) = -sin(phi) r^3 + 3 r^2 - 4
    return {-std::sin(phi), 3.0, 0.0, -4.0};
}

std::vector<CurveIntersection> intersect_ray(double phi) {
    if (!(phi > 0.0) || !(phi <= kMaxAngle + kAngleSlack)) {
        throw Error(Errc::OutOfRange, "ray angle must lie in (0, 3pi/2], got " + std::to_string(phi));
    }
    const RayCubic k = ray_cubic(phi);
    const std::vector<double> roots = geom::solve_cubic(k.c3, k.c2, k.c1, k.c0);
    const geom::Point dir = geom::unit_vector(phi);

    std::vector<CurveIntersection> hits;
    for (double r : roots) {
        if (!(r > 0.0)) continue;
        if (!hits.empty() && hits.back().r == r) {
            ++hits.back().multiplicity;
            continue;
        }
        Point p = r * dir;
        if (p.y < -1.0 - kHeightSlack || p.y >= 3.0) continue;
        hits.push_back({p, r, false, 1});
    }

    int traced = 0;
    for (auto& h : hits) {
        h.on_trace = on_trace(h.point, kClassifyTol);
        traced += h.on_trace ? 1 : 0;
    }
    if (traced == 0 && !hits.empty()) {
        auto best = std::min_element(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
            return branch_mismatch(a.point) < branch_mismatch(b.point);
        });
        if (branch_mismatch(best->point) <= kNodeFallbackTol) {
            best->on_trace = true;
            traced = 1;
        }
    }
    if (traced != 1) {
        throw Error(Errc::NoTraceRoot,
                    std::to_string(traced) + " traced roots on ray at " + std::to_string(phi));
    }
    return hits;
}

Point pick_trisection_point(double phi) {
    for (const auto& h : intersect_ray(phi)) {
        if (h.on_trace) return h.point;
    }
    throw Error(Errc::NoTraceRoot, "no traced root");  // unreachable: intersect_ray checks
}

}  // namespace trisectrix::curve
