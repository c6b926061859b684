#include <gtest/gtest.h>

#include <cmath>

#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

namespace trisectrix::linkage {
namespace {

using geom::kPi;

const double kSqrt3 = std::sqrt(3.0);

void ExpectPointNear(Point actual, Point expected, double tol) {
    EXPECT_NEAR(actual.x, expected.x, tol);
    EXPECT_NEAR(actual.y, expected.y, tol);
}

void ExpectStateInvariants(const LinkageState& st, double tol) {
    EXPECT_NEAR(geom::distance(st.C, st.D), 2.0, tol);
    ExpectPointNear(geom::midpoint(st.C, st.D), st.E, tol * std::max(1.0, st.s));
    EXPECT_NEAR(geom::dot(st.E, st.D - st.C), 0.0, tol * std::max(1.0, st.s));
    EXPECT_NEAR(st.C.y, 1.0, tol);
}

TEST(StateFromLegAngleTest, SixtyDegrees) {
    const LinkageState st = state_from_leg_angle(kPi / 3.0);
    EXPECT_NEAR(st.s, kSqrt3, 1e-15);
    ExpectPointNear(st.E, {kSqrt3 / 2.0, 1.5}, 1e-15);
    ExpectPointNear(st.C, {kSqrt3, 1.0}, 1e-15);
    ExpectPointNear(st.D, {0.0, 2.0}, 1e-15);
    ExpectStateInvariants(st, 1e-12);
}

TEST(StateFromLegAngleTest, RightAngle) {
    const LinkageState st = state_from_leg_angle(kPi / 2.0);
    EXPECT_NEAR(st.s, 1.0, 1e-15);
    ExpectPointNear(st.E, {0.0, 1.0}, 1e-15);
    ExpectPointNear(st.C, {1.0, 1.0}, 1e-15);
    ExpectPointNear(st.D, {-1.0, 1.0}, 1e-15);
    EXPECT_TRUE(curve::on_trace(st.D, 1e-9));
}

TEST(StateFromLegAngleTest, NearClosure) {
    const LinkageState st = state_from_leg_angle(kPi - 1e-6);
    EXPECT_GT(st.s, 0.0);
    EXPECT_LE(geom::distance(st.D, {0.0, -1.0}), 1e-5);
}

TEST(StateFromLegAngleTest, OutOfRange) {
    for (double u : {0.0, kPi, -0.1, 4.0}) {
        try {
            state_from_leg_angle(u);
            FAIL() << u;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::OutOfRange);
        }
    }
}

TEST(StateFromLegAngleTest, SlideClosedFormAndHypotenuses) {
    for (int i = 1; i < 1000; ++i) {
        const double u = kPi * i / 1000.0;
        const LinkageState st = state_from_leg_angle(u);
        EXPECT_NEAR(st.s * std::sin(u) - std::cos(u), 1.0, 1e-12);
        const double csc_half = 1.0 / std::sin(u / 2.0);
        EXPECT_NEAR(geom::norm(st.C), csc_half, 1e-9);
        EXPECT_NEAR(geom::norm(st.D), csc_half, 1e-9);
    }
}

TEST(StateFromLegAngleTest, PencilTracesTheCurve) {
    // The leg angle is twice the trace parameter.
    for (int i = 0; i < 1000; ++i) {
        const double u = 0.01 + (kPi - 0.02) * i / 999.0;
        const LinkageState st = state_from_leg_angle(u);
        const Point expected = curve::trace_point(curve::TraceParam(u / 2.0));
        EXPECT_LE(geom::distance(st.D, expected), 1e-9) << u;
    }
}

TEST(TraceCurveTest, Examples) {
    try {
        trace_curve(kPi / 3.0, kPi / 3.0, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BadRange);
    }
    const auto states = trace_curve(kPi / 6.0, kPi / 2.0, 3);
    ASSERT_EQ(states.size(), 3u);
    ExpectPointNear(states[1].D, {0.0, 2.0}, 1e-15);
    EXPECT_EQ(states[2].u, kPi / 2.0);
}

TEST(TraceCurveTest, EveryStateValid) {
    for (const auto& st : trace_curve(0.01, 3.13, 1000)) {
        ExpectStateInvariants(st, 1e-12);
        EXPECT_TRUE(curve::on_trace(st.D, 1e-9)) << st.u;
    }
}

TEST(TracingAngleTest, StrictlyIncreasingOnGrid) {
    // Bracketing in scudder_place assumes this.
    double prev = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double u = 1e-9 + (kPi - 2e-9) * i / 10000.0;
        const double a = tracing_angle(u);
        EXPECT_GT(a, prev) << u;
        EXPECT_NEAR(a, 1.5 * u, 1e-12);
        prev = a;
    }
    EXPECT_NEAR(tracing_angle(kPi), 1.5 * kPi, 1e-15);
}

TEST(ScudderPlaceTest, RightAngle) {
    const PlacementSolution sol = scudder_place(kPi / 2.0);
    EXPECT_NEAR(sol.state.u, kPi / 3.0, 1e-12);
    ExpectPointNear(sol.state.C, {kSqrt3, 1.0}, 1e-12);
    ExpectPointNear(sol.state.D, {0.0, 2.0}, 1e-12);
    EXPECT_LE(sol.residual, 1e-10);
    EXPECT_NEAR(geom::polar_angle(sol.state.C), kPi / 6.0, 1e-12);
}

TEST(ScudderPlaceTest, StraightAngleAgreesWithCurve) {
    const PlacementSolution sol = scudder_place(kPi);
    EXPECT_NEAR(sol.state.u, 2.0 * kPi / 3.0, 1e-12);
    ExpectPointNear(sol.state.D, {-2.0 / kSqrt3, 0.0}, 1e-12);
    ExpectPointNear(sol.state.C, {1.0 / kSqrt3, 1.0}, 1e-12);
    ExpectPointNear(sol.state.D, curve::pick_trisection_point(kPi), 1e-12);
}

TEST(ScudderPlaceTest, ClosureAngle) {
    const PlacementSolution sol = scudder_place(1.5 * kPi);
    ExpectPointNear(sol.state.D, {0.0, -1.0}, 1e-12);
    ExpectPointNear(sol.state.C, {0.0, 1.0}, 1e-12);
    EXPECT_LE(sol.residual, 1e-10);
}

TEST(ScudderPlaceTest, OutOfRange) {
    for (double phi : {0.0, -1.0, 1.5 * kPi + 1e-6}) {
        try {
            scudder_place(phi);
            FAIL() << phi;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::OutOfRange);
        }
    }
}

TEST(ScudderPlaceTest, InvertsTracingAngle) {
    for (int deg = 1; deg <= 269; ++deg) {
        const double phi = deg * kPi / 180.0;
        const PlacementSolution sol = scudder_place(phi);
        EXPECT_LE(std::abs(geom::angle_diff(geom::polar_angle(sol.state.D), phi)), 1e-9);
        EXPECT_LE(sol.residual, 1e-10);
        EXPECT_LE(sol.iterations, 200);
    }
}

TEST(VerifyPlacementTest, DetectsSidewaysShift) {
    PlacementSolution sol = scudder_place(kPi);
    sol.state.D = sol.state.D + Point{0.0, 1e-3};
    const auto cert = verify_placement(sol, 1e-9);
    EXPECT_FALSE(cert.passes("cd_length"));
    EXPECT_FALSE(cert.passes("equal_sectors"));
    EXPECT_FALSE(cert.passes("d_on_ray"));
}

TEST(VerifyPlacementTest, Passes) {
    const auto cert = verify_placement(scudder_place(kPi / 2.0), 1e-9);
    EXPECT_TRUE(cert.pass());
    const auto st = scudder_place(kPi / 2.0).state;
    EXPECT_NEAR(geom::polar_angle(st.C), kPi / 6.0, 1e-12);
    EXPECT_NEAR(geom::polar_angle(st.E) - geom::polar_angle(st.C), kPi / 6.0, 1e-12);
    EXPECT_TRUE(verify_placement(scudder_place(kPi), 1e-9).pass());
    EXPECT_TRUE(verify_placement(scudder_place(1.5 * kPi), 1e-9).pass());
}

TEST(VerifyPlacementTest, DetectsPerturbedPencil) {
    PlacementSolution sol = scudder_place(kPi / 2.0);
    sol.state.D = sol.state.D + Point{0.0, 1e-3};
    const auto cert = verify_placement(sol, 1e-9);
    EXPECT_FALSE(cert.pass());
    EXPECT_FALSE(cert.passes("cd_length"));
    // The shift is radial for this angle, so the sector residuals are
    // reported but stay small.
    EXPECT_EQ(cert.residuals().count("equal_sectors"), 1u);
    EXPECT_EQ(cert.residuals().count("d_on_ray"), 1u);
    EXPECT_FALSE(cert.passes("oc_eq_od"));
    EXPECT_TRUE(cert.passes("c_on_line"));
}

}  // namespace
}  // namespace trisectrix::linkage
