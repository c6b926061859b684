#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trisectrix/certificate.hpp"
#include "trisectrix/construct.hpp"
#include "trisectrix/curve.hpp"
#include "trisectrix/linkage.hpp"

namespace trisectrix::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonDigits = 12;

/// Fixed-point text with `precision` decimals; a value that rounds to zero
/// prints without a sign.
std::string format_fixed(double v, int precision);

/// v rounded to `digits` significant digits, so that JSON serialization
/// prints at most that many.
double round_significant(double v, int digits = kJsonDigits);

/// Verification summary of one trisection, serialized as JSON.
struct Report {
    double angle_deg = 0.0;
    construct::Method method = construct::Method::Curve;
    double ray1_deg = 0.0;
    double ray2_deg = 0.0;
    double error_rad = 0.0;
    geom::Point C, D, E;
    double tolerance = 0.0;
    bool pass = false;
};

Report make_report(const construct::TrisectionResult& res, const Certificate& cert);

Json to_json(const Report& r);
Json to_json(const construct::SweepReport& r);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

std::string curve_csv(const std::vector<curve::TraceSample>& samples, int precision);
std::string simulate_csv(const std::vector<linkage::LinkageState>& states, int precision);

/// Splits CSV text into a header and numeric rows.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
CsvTable parse_csv(const std::string& text);

/// Writes to stdout for "" or "-"; otherwise writes a sibling temporary file
/// and renames it over `path`. Throws IoError.
void write_output(const std::string& path, const std::string& content);

}  // namespace trisectrix::cli
