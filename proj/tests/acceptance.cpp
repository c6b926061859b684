// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trisectrix/construct.hpp"
#include "trisectrix/cubic.hpp"
#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

#ifndef TRISECTRIX_CLI_PATH
#error "TRISECTRIX_CLI_PATH must point at the CLI binary"
#endif

namespace {

using namespace trisectrix;
using geom::kPi;
using geom::Point;

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double deg(int d) { return d * kPi / 180.0; }

Outcome sweep_criterion(construct::Method m, double tol) {
    Outcome o;
    const auto rep = construct::sweep_verify(1.0, 269.0, 1.0, {m}, 1e-9);
    const auto& s = rep.methods.at(0);
    o.check(s.samples == 269, "samples " + std::to_string(s.samples));
    o.check(s.max_error_rad <= tol, "max error " + sci(s.max_error_rad));
    o.check(s.failures.empty(), std::to_string(s.failures.size()) + " failures");
    if (m == construct::Method::Scudder) {
        o.check(s.max_iterations <= 200, "iterations " + std::to_string(s.max_iterations));
    }
    o.detail = o.pass ? "max error " + sci(s.max_error_rad) + " rad, iterations " +
                            std::to_string(s.max_iterations)
                      : o.detail;
    return o;
}

Outcome method_agreement() {
    Outcome o;
    double worst = 0.0;
    for (int d = 1; d <= 269; ++d) {
        const auto a = construct::trisect_via_curve(deg(d));
        const auto b = construct::trisect_via_scudder(deg(d));
        worst = std::max(worst, geom::distance(a.C, b.C));
    }
    o.check(worst <= 1e-6, "max |C_curve - C_scudder| " + sci(worst));
    if (o.pass) o.detail = "max |dC| " + sci(worst);
    return o;
}

Outcome implicit_parametric() {
    Outcome o;
    double worst_f = 0.0, worst_y = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double t = 0.005 + (kPi / 2.0 - 0.005) * i / (n - 1);
        const Point p = curve::trace_point(curve::TraceParam(t));
        const double f = std::abs(oracle::curve_equation(p.x, p.y)) / curve::residual_scale(p);
        const double s = std::sin(t);
        worst_f = std::max(worst_f, f);
        worst_y = std::max(worst_y, std::abs(p.y - (3.0 - 4.0 * s * s)));
    }
    o.check(worst_f <= 1e-9, "scaled |F| " + sci(worst_f));
    o.check(worst_y <= 1e-12, "height " + sci(worst_y));
    if (o.pass) o.detail = "scaled |F| " + sci(worst_f) + ", height " + sci(worst_y);
    return o;
}

Outcome node_check() {
    Outcome o;
    const Point node{0.0, 2.0};
    const auto [gx, gy] = curve::implicit_gradient(node);
    o.check(curve::implicit_value(node) == 0.0, "F(0,2) != 0");
    o.check(gx == 0.0 && gy == 0.0, "gradient not zero");
    const double miss = geom::distance(curve::trace_point(curve::TraceParam(kPi / 6.0)), node);
    o.check(miss <= 1e-12, "trace misses node by " + sci(miss));
    if (o.pass) o.detail = "trace(pi/6) off by " + sci(miss);
    return o;
}

Outcome asymptote_check() {
    Outcome o;
    const Point p = curve::trace_point(curve::TraceParam(0.01));
    o.check(std::abs(p.y - 3.0) <= 4.1e-4, "|y - 3| = " + sci(std::abs(p.y - 3.0)));
    o.check(std::abs(p.x) >= 99.0, "|x| = " + sci(std::abs(p.x)));
    if (o.pass) o.detail = "x " + sci(p.x) + ", |y - 3| " + sci(std::abs(p.y - 3.0));
    return o;
}

Outcome half_chord_identity() {
    Outcome o;
    double worst = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const double y = -1.0 + 4.0 * i / (n - 1);
        const double a = curve::half_chord(y);
        worst = std::max(worst, std::abs(a * a + (1.0 - y) * (1.0 - y) - 4.0));
    }
    o.check(worst <= 1e-12, "residual " + sci(worst));
    if (o.pass) o.detail = "residual " + sci(worst);
    return o;
}

Outcome congruence_certificate() {
    Outcome o;
    double worst = 0.0;
    for (int d : {30, 90, 120, 180, 260, 270}) {
        for (auto m : {construct::Method::Curve, construct::Method::Scudder}) {
            const auto cert = construct::verify_trisection(construct::trisect(deg(d), m), 1e-9);
            for (const char* name : {"cd_length", "cf_length", "oc_eq_od", "oe_perp_cd", "equal_sectors"}) {
                o.check(cert.passes(name), std::string(construct::method_name(m)) + " " +
                                               std::to_string(d) + " " + name + " " +
                                               sci(cert.residual(name)));
            }
            o.check(cert.pass(), std::to_string(d) + " certificate failed");
            worst = std::max(worst, cert.max_residual());
        }
    }
    if (o.pass) o.detail = "max residual " + sci(worst);
    return o;
}

Outcome spurious_branch() {
    Outcome o;
    for (int d : {30, 120}) {
        const auto hits = curve::intersect_ray(deg(d));
        o.check(hits.size() >= 2, std::to_string(d) + ": " + std::to_string(hits.size()) + " candidates");
        int traced = 0;
        for (const auto& h : hits) traced += curve::on_trace(h.point, 1e-9) ? 1 : 0;
        o.check(traced == 1, std::to_string(d) + ": " + std::to_string(traced) + " on trace");
        for (const auto& h : hits) {
            if (h.on_trace) continue;
            const auto forced = construct::complete_curve_construction(deg(d), h.point);
            o.check(!construct::verify_trisection(forced, 1e-9).pass(),
                    std::to_string(d) + ": rejected root verified");
        }
    }
    if (o.pass) o.detail = "mirror roots rejected at 30 and 120 deg";
    return o;
}

Outcome cubic_oracle() {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> root(-10.0, 10.0);
    double worst = 0.0;
    int bad_count = 0;
    for (int i = 0; i < 10000; ++i) {
        std::vector<double> want{root(rng), root(rng), root(rng)};
        std::sort(want.begin(), want.end());
        const auto c = oracle::monic_from_roots(want[0], want[1], want[2]);
        const auto got = geom::solve_cubic(c[0], c[1], c[2], c[3]);
        if (got.size() != 3) {
            ++bad_count;
            continue;
        }
        for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
    }
    o.check(bad_count == 0, std::to_string(bad_count) + " wrong root counts");
    o.check(worst <= 1e-8, "max root error " + sci(worst));
    if (o.pass) o.detail = "max root error " + sci(worst);
    return o;
}

Outcome tangency() {
    Outcome o;
    const double phi = 1.5 * kPi;
    const Point d = curve::pick_trisection_point(phi);
    const auto hits = geom::intersect_circle_line(geom::Circle(d, 2.0), geom::Line::horizontal(1.0));
    o.check(hits.size() == 1, std::to_string(hits.size()) + " circle intersections");
    const auto res = construct::trisect_via_curve(phi);
    o.check(geom::distance(res.C, {0.0, 1.0}) <= 1e-9, "C off (0,1)");
    const double e1 = std::abs(geom::wrap_two_pi(res.ray1.angle()) - kPi / 2.0);
    const double e2 = std::abs(geom::wrap_two_pi(res.ray2.angle()) - kPi);
    o.check(e1 <= 1e-9 && e2 <= 1e-9, "ray errors " + sci(e1) + ", " + sci(e2));
    if (o.pass) o.detail = "ray errors " + sci(e1) + ", " + sci(e2);
    return o;
}

Outcome simulator_equivalence() {
    Outcome o;
    double worst_d = 0.0, worst_c = 0.0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const double u = 0.01 + (kPi - 0.02) * i / (n - 1);
        const auto st = linkage::state_from_leg_angle(u);
        worst_d = std::max(worst_d, geom::distance(st.D, curve::trace_point(curve::TraceParam(u / 2.0))));
        worst_c = std::max(worst_c, std::abs(st.C.y - 1.0));
    }
    o.check(worst_d <= 1e-9, "|dD| " + sci(worst_d));
    o.check(worst_c <= 1e-12, "|Cy - 1| " + sci(worst_c));
    if (o.pass) o.detail = "|dD| " + sci(worst_d) + ", |Cy - 1| " + sci(worst_c);
    return o;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + TRISECTRIX_CLI_PATH + "\" " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    namespace fs = std::filesystem;
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("trisectrix_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> runs{
        {"curve --samples 2000", "curve.csv"},
        {"curve --format svg", "curve.svg"},
        {"trisect --angle-deg 100 --method both", "trisect.json"},
        {"trisect --angle-deg 270 --format svg", "trisect.svg"},
        {"simulate --steps 500", "sim.csv"},
        {"sweep --method both", "sweep.json"},
    };
    for (const auto& [args, name] : runs) {
        const fs::path a = dir / ("a_" + name), b = dir / ("b_" + name);
        const int sa = run_cli(args + " --out " + a.string());
        const int sb = run_cli(args + " --out " + b.string());
        o.check(sa == 0 && sb == 0, name + " exit " + std::to_string(sa));
        const std::string ca = slurp(a);
        o.check(!ca.empty() && ca == slurp(b), name + " differs between runs");
    }
    o.check(run_cli("trisect --angle-deg 90 --out " + (dir / "ok.json").string()) == 0, "pass != 0");
    o.check(run_cli("trisect --angle-deg 90 --tol 1e-30 --out " + (dir / "strict.json").string()) == 1,
            "verification failure != 1");
    o.check(run_cli("trisect --angle-deg 271") == 2, "out-of-range angle != 2");
    o.check(run_cli("curve --samples 1") == 2, "bad sample count != 2");
    o.check(run_cli("frobnicate") == 2, "unknown command != 2");
    fs::remove_all(dir);
    if (o.pass) o.detail = "6 outputs byte-identical, exit codes 0/1/2 as specified";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"curve sweep 1..269 deg within 1e-9 rad",
         [] { return sweep_criterion(construct::Method::Curve, 1e-9); }},
        {"scudder sweep 1..269 deg within 1e-7 rad",
         [] { return sweep_criterion(construct::Method::Scudder, 1e-7); }},
        {"methods agree on C within 1e-6", method_agreement},
        {"implicit and parametric forms agree", implicit_parametric},
        {"node at (0,2)", node_check},
        {"asymptote y = 3", asymptote_check},
        {"half-chord identity", half_chord_identity},
        {"congruence certificate", congruence_certificate},
        {"spurious branch rejected", spurious_branch},
        {"cubic solver oracle", cubic_oracle},
        {"tangency at 270 deg", tangency},
        {"simulator matches parametric trace", simulator_equivalence},
        {"CLI determinism and exit codes", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 10.0) o.check(false, "took " + sci(secs) + " s");
        failed += o.pass ? 0 : 1;
        std::printf("[%s] %2zu. %s (%s) [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
