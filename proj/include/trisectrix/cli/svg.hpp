#pragma once

#include <string>
#include <vector>

#include "trisectrix/construct.hpp"
#include "trisectrix/curve.hpp"

namespace trisectrix::cli {

struct RenderSpec {
    int width_px = 900;
    int height_px = 600;
    double x_min = -3.0;
    double x_max = 6.0;
    double y_min = -2.0;
    double y_max = 4.0;
    double stroke_px = 1.5;
    double thin_stroke_px = 0.75;
    std::string trace_color = "#1f4e9c";
    std::string construction_color = "#555555";
    std::string trisector_color = "#c0392b";
    std::string tool_color = "#2e8b57";
    int precision = 6;

    /// Throws OutOfDomain on an empty window, non-positive size or a
    /// precision outside [1, 15].
    void validate() const;
};

/// Minimal SVG writer in world coordinates (y up).
class SvgCanvas {
public:
    explicit SvgCanvas(RenderSpec spec);

    void line(geom::Point a, geom::Point b, const std::string& cls, const std::string& color,
              double width, bool dashed = false);
    void polyline(const std::vector<geom::Point>& pts, const std::string& cls,
                  const std::string& color, double width);
    void circle(geom::Point center, double radius, const std::string& cls, const std::string& color,
                double width);
    /// A small filled diamond; kept distinct from <circle> elements.
    void marker(geom::Point p, const std::string& cls, const std::string& color);
    void label(geom::Point p, const std::string& text, double dx_px = 6.0, double dy_px = -6.0);

    std::string str() const;

private:
    double sx(double x) const;
    double sy(double y) const;
    std::string num(double v) const;

    RenderSpec spec_;
    std::string body_;
};

/// The trace polyline with both axes, the dashed asymptote y = 3 and the
/// node (0, 2).
std::string render_curve_svg(const std::vector<curve::TraceSample>& trace, const RenderSpec& spec);

/// Rays OA and OB, the trace, the construction for the given method, both
/// trisectors and the labels O, A, B, C, D, E.
std::string render_trisection_svg(const construct::TrisectionResult& res,
                                  const std::vector<curve::TraceSample>& trace,
                                  const RenderSpec& spec);

}  // namespace trisectrix::cli
