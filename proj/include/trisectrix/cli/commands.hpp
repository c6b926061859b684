#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trisectrix/cli/svg.hpp"
#include "trisectrix/construct.hpp"

namespace trisectrix::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitPass = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Rendered command output plus the status the process should exit with.
struct CommandOutput {
    std::string content;
    int exit_code = kExitPass;
};

struct CurveOptions {
    double t_min_deg = 0.005 * 180.0 / geom::kPi;
    double t_max_deg = 90.0;
    int samples = 1000;
    std::string format = "csv";  // csv | svg
    int precision = 6;
};

struct TrisectOptions {
    double angle_deg = 0.0;
    std::vector<construct::Method> methods{construct::Method::Curve};
    std::string format = "json";  // json | svg
    double tol = 1e-9;
    int trace_samples = 1000;
    int precision = 6;
};

struct SimulateOptions {
    double u_min_deg = 1.0;
    double u_max_deg = 179.0;
    int steps = 1000;
    int precision = 6;
};

struct SweepOptions {
    double from_deg = 1.0;
    double to_deg = 269.0;
    double step_deg = 1.0;
    std::vector<construct::Method> methods{construct::Method::Curve};
    double tol = 1e-9;
};

/// Each command validates its options and throws trisectrix::Error
/// (BadRange, OutOfRange, OutOfDomain) on bad input.
CommandOutput cmd_curve(const CurveOptions& opt);
CommandOutput cmd_trisect(const TrisectOptions& opt);
CommandOutput cmd_simulate(const SimulateOptions& opt);
CommandOutput cmd_sweep(const SweepOptions& opt);

/// "curve" | "scudder" | "both"; throws OutOfDomain otherwise.
std::vector<construct::Method> parse_methods(const std::string& name);

/// Status for an error escaping a command: input problems are usage errors,
/// anything else means a construction could not be verified.
int exit_status_for(const Error& e);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& err);

}  // namespace trisectrix::cli
