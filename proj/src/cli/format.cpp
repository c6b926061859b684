#include "trisectrix/cli/format.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace trisectrix::cli {

namespace {

Json point_json(geom::Point p) {
    return Json{{"x", round_significant(p.x)}, {"y", round_significant(p.y)}};
}

// Ray angle in degrees on [0, 360); rays of admissible constructions all
// fall in (0, 180].
double ray_degrees(const geom::Ray& r) {
    return construct::rad_to_deg(geom::wrap_two_pi(r.angle()));
}

}  // namespace

std::string format_fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

double round_significant(double v, int digits) {
    if (v == 0.0) return 0.0;
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Report make_report(const construct::TrisectionResult& res, const Certificate& cert) {
    Report r;
    r.angle_deg = construct::rad_to_deg(res.phi);
    r.method = res.method;
    r.ray1_deg = ray_degrees(res.ray1);
    r.ray2_deg = ray_degrees(res.ray2);
    r.error_rad = std::max(cert.residual("ray1_error"), cert.residual("ray2_error"));
    r.C = res.C;
    r.D = res.D;
    r.E = res.E;
    r.tolerance = cert.tolerance();
    r.pass = cert.pass();
    return r;
}

Json to_json(const Report& r) {
    return Json{
        {"angle_deg", round_significant(r.angle_deg)},
        {"method", std::string(construct::method_name(r.method))},
        {"ray1_deg", round_significant(r.ray1_deg)},
        {"ray2_deg", round_significant(r.ray2_deg)},
        {"error_rad", round_significant(r.error_rad)},
        {"points", Json{{"c", point_json(r.C)}, {"d", point_json(r.D)}, {"e", point_json(r.E)}}},
        {"tolerance", round_significant(r.tolerance)},
        {"pass", r.pass},
    };
}

Json to_json(const construct::SweepReport& r) {
    Json methods = Json::array();
    for (const auto& m : r.methods) {
        Json failures = Json::array();
        for (double f : m.failures) failures.push_back(round_significant(f));
        methods.push_back(Json{
            {"method", std::string(construct::method_name(m.method))},
            {"samples", m.samples},
            {"max_error_rad", round_significant(m.max_error_rad)},
            {"mean_error_rad", round_significant(m.mean_error_rad)},
            {"argmax_deg", round_significant(m.argmax_deg)},
            {"max_iterations", m.max_iterations},
            {"failures", failures},
        });
    }
    return Json{
        {"phi_min_deg", round_significant(r.phi_min_deg)},
        {"phi_max_deg", round_significant(r.phi_max_deg)},
        {"step_deg", round_significant(r.step_deg)},
        {"tolerance", round_significant(r.tolerance)},
        {"methods", methods},
    };
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string curve_csv(const std::vector<curve::TraceSample>& samples, int precision) {
    std::string out = "t_deg,x,y\n";
    for (const auto& s : samples) {
        out += format_fixed(construct::rad_to_deg(s.t), precision) + ',' +
               format_fixed(s.point.x, precision) + ',' + format_fixed(s.point.y, precision) + '\n';
    }
    return out;
}

std::string simulate_csv(const std::vector<linkage::LinkageState>& states, int precision) {
    std::string out = "u_deg,s,Cx,Cy,Dx,Dy,Ex,Ey\n";
    for (const auto& st : states) {
        const double cols[] = {construct::rad_to_deg(st.u), st.s, st.C.x, st.C.y,
                               st.D.x, st.D.y, st.E.x, st.E.y};
        bool first = true;
        for (double v : cols) {
            if (!first) out += ',';
            out += format_fixed(v, precision);
            first = false;
        }
        out += '\n';
    }
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        if (header) {
            while (std::getline(fields, cell, ',')) table.header.push_back(cell);
            header = false;
            continue;
        }
        std::vector<double> row;
        while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        if (!std::cout) throw Error(Errc::IoError, "failed writing to stdout");
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::IoError, "cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error(Errc::IoError, "failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(Errc::IoError, "cannot move output into " + target.string());
    }
}

}  // namespace trisectrix::cli
