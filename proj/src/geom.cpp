#include "trisectrix/geom.hpp"

#include <algorithm>

namespace trisectrix {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::ParallelLines: return "ParallelLines";
        case Errc::OriginHasNoAngle: return "OriginHasNoAngle";
        case Errc::DistinctOrigins: return "DistinctOrigins";
        case Errc::AllCoefficientsZero: return "AllCoefficientsZero";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::BadRange: return "BadRange";
        case Errc::NoTraceRoot: return "NoTraceRoot";
        case Errc::BracketFailure: return "BracketFailure";
        case Errc::EmptyIntersection: return "EmptyIntersection";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace trisectrix

namespace trisectrix::geom {

namespace {
constexpr double kParallelTol = 1e-12;
constexpr double kTangencyTol = 1e-12;
constexpr double kSameOriginTol = 1e-12;
}  // namespace

double normalize_angle(double angle) {
    double a = std::remainder(angle, kTwoPi);  // [-pi, pi]
    if (a <= -kPi) a += kTwoPi;
    return a;
}

double wrap_two_pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a -= kTwoPi;
    return a;
}

double ccw_sweep(double from, double to) { return wrap_two_pi(to - from); }

Line::Line(double a, double b, double c) {
    const double n = std::hypot(a, b);
    if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
        throw Error(Errc::OutOfDomain, "line normal must be finite and nonzero");
    }
    a_ = a / n;
    b_ = b / n;
    c_ = c / n;
}

Line Line::through(Point p, Point q) {
    const Point d = q - p;
    // normal (-dy, dx)
    return Line(-d.y, d.x, -d.y * p.x + d.x * p.y);
}

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius) || !center.is_finite()) {
        throw Error(Errc::OutOfDomain, "circle radius must be finite and positive");
    }
}

Point intersect_lines(const Line& l1, const Line& l2) {
    const double det = l1.a() * l2.b() - l1.b() * l2.a();
    if (std::abs(det) < kParallelTol) {
        throw Error(Errc::ParallelLines, "lines do not intersect");
    }
    return {(l1.c() * l2.b() - l1.b() * l2.c()) / det,
            (l1.a() * l2.c() - l1.c() * l2.a()) / det};
}

std::vector<Point> intersect_circle_line(const Circle& c, const Line& l) {
    const double d = l.signed_distance(c.center());
    const double r2 = c.radius() * c.radius();
    const double h2 = r2 - d * d;
    const Point foot = c.center() - d * l.normal();

    if (std::abs(h2) <= kTangencyTol * r2) return {foot};
    if (h2 < 0.0) return {};

    const double h = std::sqrt(h2);
    Point p = foot + h * l.direction();
    Point q = foot - h * l.direction();
    if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
    return {p, q};
}

double polar_angle(Point p) {
    if (p.x == 0.0 && p.y == 0.0) {
        throw Error(Errc::OriginHasNoAngle, "polar angle of the origin is undefined");
    }
    // atan2 may return -pi for (-x, -0.0)
    return normalize_angle(std::atan2(p.y, p.x));
}

Point foot_of_perpendicular(Point p, const Line& l) {
    return p - l.signed_distance(p) * l.normal();
}

Ray bisect_angle(const Ray& r1, const Ray& r2) {
    if (distance(r1.origin(), r2.origin()) > kSameOriginTol) {
        throw Error(Errc::DistinctOrigins, "rays must share an origin");
    }
    return Ray(r1.origin(), r1.angle() + 0.5 * ccw_sweep(r1.angle(), r2.angle()));
}

}  // namespace trisectrix::geom
