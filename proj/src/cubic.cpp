#include "trisectrix/cubic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "trisectrix/error.hpp"

namespace trisectrix::geom {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Quadratic discriminants within this fraction of the coefficient scale
// are treated as a double root.
constexpr double kDoubleRootTol = 64.0 * kEps;
constexpr int kMaxPolish = 8;

struct Cubic {
    double c3, c2, c1, c0;

    double value(double r) const { return ((c3 * r + c2) * r + c1) * r + c0; }
    double slope(double r) const { return (3.0 * c3 * r + 2.0 * c2) * r + c1; }
};

// Newton steps while the residual keeps shrinking.
double polish(const Cubic& p, double r) {
    double f = p.value(r);
    for (int i = 0; i < kMaxPolish && f != 0.0; ++i) {
        const double df = p.slope(r);
        if (df == 0.0 || !std::isfinite(df)) break;
        const double next = r - f / df;
        const double fn = p.value(next);
        if (!(std::abs(fn) < std::abs(f))) break;
        r = next;
        f = fn;
    }
    return r;
}

std::vector<double> solve_linear(double b, double c) {
    if (b == 0.0) return {};
    return {-c / b};
}

// x^2 - s*x + p = 0 from sum and product.
std::vector<double> roots_from_sum_product(double s, double p) {
    const double disc = s * s - 4.0 * p;
    const double scale = std::max(s * s, 4.0 * std::abs(p));
    if (std::abs(disc) <= kDoubleRootTol * scale) return {0.5 * s, 0.5 * s};
    if (disc < 0.0) return {};
    const double q = 0.5 * (s + std::copysign(std::sqrt(disc), s));
    if (q == 0.0) return {0.0, 0.0};
    return {q, p / q};
}

std::vector<double> solve_quadratic(double a, double b, double c) {
    if (a == 0.0) return solve_linear(b, c);
    return roots_from_sum_product(-b / a, c / a);
}

// One simple real root of the monic cubic r^3 + a r^2 + b r + c.
double anchor_root(double a, double b, double c) {
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double half_q = 0.5 * q;
    const double third_p = p / 3.0;
    const double disc = half_q * half_q + third_p * third_p * third_p;

    if (disc < 0.0) {
        // Three distinct real roots; keep the one farthest from the others.
        const double m = 2.0 * std::sqrt(-third_p);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        std::array<double, 3> t{};
        for (int k = 0; k < 3; ++k) {
            t[k] = m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) - shift;
        }
        std::sort(t.begin(), t.end());
        return (t[1] - t[0] >= t[2] - t[1]) ? t[0] : t[2];
    }

    // Cardano, written to avoid cancellation between the two cube roots.
    // At disc == 0 this yields the simple root of the double-root case.
    const double big = -std::copysign(std::cbrt(std::abs(half_q) + std::sqrt(disc)), q);
    const double small = big != 0.0 ? -third_p / big : 0.0;
    return big + small - shift;
}

}  // namespace

double eval_cubic(double c3, double c2, double c1, double c0, double r) {
    return Cubic{c3, c2, c1, c0}.value(r);
}

std::vector<double> solve_cubic(double c3, double c2, double c1, double c0) {
    if (c3 == 0.0 && c2 == 0.0 && c1 == 0.0 && c0 == 0.0) {
        throw Error(Errc::AllCoefficientsZero, "polynomial is identically zero");
    }
    const Cubic poly{c3, c2, c1, c0};
    std::vector<double> roots;

    if (c3 == 0.0) {
        roots = solve_quadratic(c2, c1, c0);
    } else {
        const double a = c2 / c3;
        const double b = c1 / c3;
        const double c = c0 / c3;

        const double r1 = polish(poly, anchor_root(a, b, c));
        roots.push_back(r1);

        // Remaining pair: product from r1*r2*r3 = -c; the sum from whichever
        // Vieta relation carries the smaller rounding error.
        double sum = -a - r1;
        double prod = 0.0;
        if (r1 != 0.0) {
            prod = -c / r1;
            const double err_from_a = std::abs(a) + std::abs(r1);
            const double err_from_b = (std::abs(b) + std::abs(prod)) / std::abs(r1);
            if (err_from_b < err_from_a) sum = (b - prod) / r1;
        } else {
            prod = b;
        }
        for (double r : roots_from_sum_product(sum, prod)) roots.push_back(r);
    }

    // The anchor is already polished. A collapsed double root is left alone:
    // Newton converges only linearly there and would split it unevenly.
    const std::size_t first = (c3 == 0.0) ? 0 : 1;
    const bool paired = roots.size() == first + 2 && roots[first] == roots[first + 1];
    if (!paired) {
        for (std::size_t i = first; i < roots.size(); ++i) roots[i] = polish(poly, roots[i]);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace trisectrix::geom
