#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "trisectrix/error.hpp"

// Plane-geometry kernel. Lengths are in units of the straightedge width,
// with O at the origin and OA along +x. All angles are radians.
namespace trisectrix::geom {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double k, Point p) { return {k * p.x, k * p.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline Point unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Maps any angle into (-pi, pi].
double normalize_angle(double angle);

/// Maps any angle into [0, 2pi).
double wrap_two_pi(double angle);

/// Counterclockwise sweep from `from` to `to`, in [0, 2pi).
double ccw_sweep(double from, double to);

/// Smallest signed difference a - b, in (-pi, pi].
inline double angle_diff(double a, double b) { return normalize_angle(a - b); }

class Ray {
public:
    Ray() = default;
    Ray(Point origin, double angle) : origin_(origin), angle_(normalize_angle(angle)) {}

    Point origin() const { return origin_; }
    double angle() const { return angle_; }
    Point direction() const { return unit_vector(angle_); }

private:
    Point origin_{};
    double angle_ = 0.0;
};

/// Point at distance d along r.
inline Point ray_point(const Ray& r, double d) { return r.origin() + d * r.direction(); }

/// a*x + b*y = c with (a, b) a unit normal.
class Line {
public:
    /// Throws OutOfDomain when (a, b) is the zero vector.
    Line(double a, double b, double c);

    static Line horizontal(double y) { return Line(0.0, 1.0, y); }
    static Line vertical(double x) { return Line(1.0, 0.0, x); }
    static Line through(Point p, Point q);
    static Line x_axis() { return horizontal(0.0); }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    Point normal() const { return {a_, b_}; }
    Point direction() const { return {-b_, a_}; }

    /// Signed distance of p from the line along the normal.
    double signed_distance(Point p) const { return a_ * p.x + b_ * p.y - c_; }

private:
    double a_;
    double b_;
    double c_;
};

class Circle {
public:
    /// Throws OutOfDomain unless radius is finite and positive.
    Circle(Point center, double radius);

    Point center() const { return center_; }
    double radius() const { return radius_; }

private:
    Point center_;
    double radius_;
};

Point intersect_lines(const Line& l1, const Line& l2);

/// 0, 1 or 2 points, sorted by ascending x then ascending y. A discriminant
/// within 1e-12 * radius^2 of zero is reported as a single tangent point.
std::vector<Point> intersect_circle_line(const Circle& c, const Line& l);

/// atan2 convention, result in (-pi, pi]. Throws OriginHasNoAngle at (0, 0).
double polar_angle(Point p);

Point foot_of_perpendicular(Point p, const Line& l);

/// Bisects the counterclockwise sweep from r1 to r2.
Ray bisect_angle(const Ray& r1, const Ray& r2);

}  // namespace trisectrix::geom
