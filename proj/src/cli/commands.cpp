#include "trisectrix/cli/commands.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "trisectrix/cli/format.hpp"
#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

namespace trisectrix::cli {

namespace {

using construct::deg_to_rad;

// Trace shown behind construction diagrams.
constexpr double kDiagramTraceMinDeg = 0.5;

void check_precision(int precision) {
    if (precision < 1 || precision > 15) {
        throw Error(Errc::OutOfDomain, "precision must lie in [1, 15]");
    }
}

std::vector<curve::TraceSample> diagram_trace(int samples) {
    return curve::sample_trace(curve::TraceParam(deg_to_rad(kDiagramTraceMinDeg)),
                               curve::TraceParam(deg_to_rad(90.0)), samples);
}

}  // namespace

std::vector<construct::Method> parse_methods(const std::string& name) {
    if (name == "curve") return {construct::Method::Curve};
    if (name == "scudder") return {construct::Method::Scudder};
    if (name == "both") return {construct::Method::Curve, construct::Method::Scudder};
    throw Error(Errc::OutOfDomain, "unknown method '" + name + "'");
}

int exit_status_for(const Error& e) {
    switch (e.code()) {
        case Errc::OutOfRange:
        case Errc::OutOfDomain:
        case Errc::BadRange:
        case Errc::IoError:
            return kExitUsage;
        default:
            return kExitVerifyFailed;
    }
}

CommandOutput cmd_curve(const CurveOptions& opt) {
    check_precision(opt.precision);
    if (!(opt.t_min_deg > 0.0) || !(opt.t_min_deg < opt.t_max_deg) || !(opt.t_max_deg <= 90.0) ||
        opt.samples < 2) {
        throw Error(Errc::BadRange, "need 0 < t-min-deg < t-max-deg <= 90 and samples >= 2");
    }
    const auto samples = curve::sample_trace(curve::TraceParam(deg_to_rad(opt.t_min_deg)),
                                             curve::TraceParam(deg_to_rad(opt.t_max_deg)),
                                             opt.samples);
    if (opt.format == "csv") return {curve_csv(samples, opt.precision), kExitPass};
    if (opt.format == "svg") {
        RenderSpec spec;
        spec.precision = opt.precision;
        return {render_curve_svg(samples, spec), kExitPass};
    }
    throw Error(Errc::OutOfDomain, "curve output format must be csv or svg");
}

CommandOutput cmd_trisect(const TrisectOptions& opt) {
    check_precision(opt.precision);
    if (!(opt.angle_deg > 0.0) || !(opt.angle_deg <= 270.0)) {
        throw Error(Errc::OutOfRange, "angle must lie in (0, 270] degrees");
    }
    if (!(opt.tol > 0.0)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    if (opt.format != "json" && opt.format != "svg") {
        throw Error(Errc::OutOfDomain, "trisect output format must be json or svg");
    }
    if (opt.format == "svg" && opt.methods.size() != 1) {
        throw Error(Errc::OutOfDomain, "an svg diagram shows one method");
    }

    const double phi = deg_to_rad(opt.angle_deg);
    bool all_pass = true;
    Json reports = Json::array();
    construct::TrisectionResult last;
    for (construct::Method m : opt.methods) {
        last = construct::trisect(phi, m);
        const Certificate cert = construct::verify_trisection(last, opt.tol);
        all_pass = all_pass && cert.pass();
        reports.push_back(to_json(make_report(last, cert)));
    }
    const int status = all_pass ? kExitPass : kExitVerifyFailed;

    if (opt.format == "svg") {
        RenderSpec spec;
        spec.precision = opt.precision;
        return {render_trisection_svg(last, diagram_trace(opt.trace_samples), spec), status};
    }
    return {dump(reports.size() == 1 ? reports.front() : reports), status};
}

CommandOutput cmd_simulate(const SimulateOptions& opt) {
    check_precision(opt.precision);
    if (!(opt.u_min_deg > 0.0) || !(opt.u_min_deg < opt.u_max_deg) || !(opt.u_max_deg < 180.0) ||
        opt.steps < 2) {
        throw Error(Errc::BadRange, "need 0 < u-min-deg < u-max-deg < 180 and steps >= 2");
    }
    const auto states =
        linkage::trace_curve(deg_to_rad(opt.u_min_deg), deg_to_rad(opt.u_max_deg), opt.steps);
    return {simulate_csv(states, opt.precision), kExitPass};
}

CommandOutput cmd_sweep(const SweepOptions& opt) {
    if (!(opt.tol > 0.0)) throw Error(Errc::OutOfDomain, "tolerance must be positive");
    const construct::SweepReport rep =
        construct::sweep_verify(opt.from_deg, opt.to_deg, opt.step_deg, opt.methods, opt.tol);
    bool clean = true;
    for (const auto& m : rep.methods) clean = clean && m.failures.empty();
    return {dump(to_json(rep)), clean ? kExitPass : kExitVerifyFailed};
}

int run(int argc, const char* const* argv, std::ostream& err) {
    CLI::App app{"Trace the trisectrix, construct angle trisections and verify them"};
    app.require_subcommand(1);

    std::string out = "-";
    std::string method = "curve";
    std::string format;
    int precision = 6;
    double tol = 1e-9;

    CurveOptions curve_opt;
    auto* curve_cmd = app.add_subcommand("curve", "Sample the traced branch as CSV or SVG");
    curve_cmd->add_option("--t-min-deg", curve_opt.t_min_deg, "Smallest trace parameter (degrees)");
    curve_cmd->add_option("--t-max-deg", curve_opt.t_max_deg, "Largest trace parameter (degrees)");
    curve_cmd->add_option("--samples", curve_opt.samples, "Number of samples");

    TrisectOptions tri_opt;
    auto* tri_cmd = app.add_subcommand("trisect", "Trisect one angle and report or draw it");
    tri_cmd->add_option("--angle-deg", tri_opt.angle_deg, "Angle AOB in degrees, (0, 270]")->required();
    tri_cmd->add_option("--samples", tri_opt.trace_samples, "Trace samples in the diagram");

    SimulateOptions sim_opt;
    auto* sim_cmd = app.add_subcommand("simulate", "Step the compass through leg angles");
    sim_cmd->add_option("--u-min-deg", sim_opt.u_min_deg, "First leg angle (degrees)");
    sim_cmd->add_option("--u-max-deg", sim_opt.u_max_deg, "Last leg angle (degrees)");
    sim_cmd->add_option("--steps", sim_opt.steps, "Number of states");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify both trisections over an angle grid");
    sweep_cmd->add_option("--from-deg", sweep_opt.from_deg, "First angle (degrees)");
    sweep_cmd->add_option("--to-deg", sweep_opt.to_deg, "Last angle (degrees), below 270");
    sweep_cmd->add_option("--step-deg", sweep_opt.step_deg, "Grid step (degrees)");

    for (auto* cmd : {curve_cmd, tri_cmd, sim_cmd, sweep_cmd}) {
        cmd->add_option("--out", out, "Output path, '-' for stdout");
        cmd->add_option("--precision", precision, "Decimal places in CSV/SVG output")
            ->check(CLI::Range(1, 15));
        cmd->add_option("--format", format, "Output format");
    }
    for (auto* cmd : {tri_cmd, sweep_cmd}) {
        cmd->add_option("--method", method, "curve, scudder or both")
            ->check(CLI::IsMember({"curve", "scudder", "both"}));
        cmd->add_option("--tol", tol, "Verification tolerance");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            err << app.help();
            return kExitPass;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CommandOutput result;
        if (*curve_cmd) {
            curve_opt.precision = precision;
            curve_opt.format = format.empty() ? "csv" : format;
            result = cmd_curve(curve_opt);
        } else if (*tri_cmd) {
            tri_opt.precision = precision;
            tri_opt.format = format.empty() ? "json" : format;
            tri_opt.methods = parse_methods(method);
            tri_opt.tol = tol;
            result = cmd_trisect(tri_opt);
        } else if (*sim_cmd) {
            if (!format.empty() && format != "csv") {
                throw Error(Errc::OutOfDomain, "simulate writes csv only");
            }
            sim_opt.precision = precision;
            result = cmd_simulate(sim_opt);
        } else {
            if (!format.empty() && format != "json") {
                throw Error(Errc::OutOfDomain, "sweep writes json only");
            }
            sweep_opt.methods = parse_methods(method);
            sweep_opt.tol = tol;
            result = cmd_sweep(sweep_opt);
        }
        write_output(out, result.content);
        if (result.exit_code == kExitVerifyFailed) err << "verification failed\n";
        return result.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_status_for(e);
    }
}

}  // namespace trisectrix::cli
