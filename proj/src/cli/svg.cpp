#include "trisectrix/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "trisectrix/cli/format.hpp"

namespace trisectrix::cli {

namespace {

using geom::Point;

constexpr double kRayLength = 12.0;
constexpr double kMarkerPx = 4.0;

std::vector<Point> points_of(const std::vector<curve::TraceSample>& trace) {
    std::vector<Point> pts;
    pts.reserve(trace.size());
    for (const auto& s : trace) pts.push_back(s.point);
    return pts;
}

}  // namespace

void RenderSpec::validate() const {
    if (width_px <= 0 || height_px <= 0) throw Error(Errc::OutOfDomain, "image size must be positive");
    if (!(x_min < x_max) || !(y_min < y_max)) throw Error(Errc::OutOfDomain, "degenerate world window");
    if (precision < 1 || precision > 15) throw Error(Errc::OutOfDomain, "precision must lie in [1, 15]");
}

SvgCanvas::SvgCanvas(RenderSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

double SvgCanvas::sx(double x) const {
    return (x - spec_.x_min) / (spec_.x_max - spec_.x_min) * spec_.width_px;
}

double SvgCanvas::sy(double y) const {
    return (spec_.y_max - y) / (spec_.y_max - spec_.y_min) * spec_.height_px;
}

std::string SvgCanvas::num(double v) const { return format_fixed(v, spec_.precision); }

void SvgCanvas::line(Point a, Point b, const std::string& cls, const std::string& color,
                     double width, bool dashed) {
    body_ += "  <line class=\"" + cls + "\" x1=\"" + num(sx(a.x)) + "\" y1=\"" + num(sy(a.y)) +
             "\" x2=\"" + num(sx(b.x)) + "\" y2=\"" + num(sy(b.y)) + "\" stroke=\"" + color +
             "\" stroke-width=\"" + num(width) + "\"";
    if (dashed) body_ += " stroke-dasharray=\"6 4\"";
    body_ += "/>\n";
}

void SvgCanvas::polyline(const std::vector<Point>& pts, const std::string& cls,
                         const std::string& color, double width) {
    body_ += "  <polyline class=\"" + cls + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"" + num(width) + "\" points=\"";
    bool first = true;
    for (const Point& p : pts) {
        if (!first) body_ += ' ';
        body_ += num(sx(p.x)) + ',' + num(sy(p.y));
        first = false;
    }
    body_ += "\"/>\n";
}

void SvgCanvas::circle(Point c, double radius, const std::string& cls, const std::string& color,
                       double width) {
    const double r_px = radius / (spec_.x_max - spec_.x_min) * spec_.width_px;
    body_ += "  <circle class=\"" + cls + "\" cx=\"" + num(sx(c.x)) + "\" cy=\"" + num(sy(c.y)) +
             "\" r=\"" + num(r_px) + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
             num(width) + "\"/>\n";
}

void SvgCanvas::marker(Point p, const std::string& cls, const std::string& color) {
    const double x = sx(p.x), y = sy(p.y), k = kMarkerPx;
    body_ += "  <path class=\"" + cls + "\" d=\"M " + num(x) + ' ' + num(y - k) + " L " +
             num(x + k) + ' ' + num(y) + " L " + num(x) + ' ' + num(y + k) + " L " + num(x - k) +
             ' ' + num(y) + " Z\" fill=\"" + color + "\"/>\n";
}

void SvgCanvas::label(Point p, const std::string& text, double dx_px, double dy_px) {
    body_ += "  <text x=\"" + num(sx(p.x) + dx_px) + "\" y=\"" + num(sy(p.y) + dy_px) +
             "\" font-family=\"serif\" font-size=\"16\">" + text + "</text>\n";
}

std::string SvgCanvas::str() const {
    const std::string w = std::to_string(spec_.width_px);
    const std::string h = std::to_string(spec_.height_px);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + ' ' + h + "\">\n"
           "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h +
           "\" fill=\"white\"/>\n" +
           body_ + "</svg>\n";
}

std::string render_curve_svg(const std::vector<curve::TraceSample>& trace, const RenderSpec& spec) {
    SvgCanvas svg(spec);
    svg.line({spec.x_min, 0.0}, {spec.x_max, 0.0}, "axis", "#000000", spec.thin_stroke_px);
    svg.line({0.0, spec.y_min}, {0.0, spec.y_max}, "axis", "#000000", spec.thin_stroke_px);
    svg.line({spec.x_min, 3.0}, {spec.x_max, 3.0}, "asymptote", spec.construction_color,
             spec.thin_stroke_px, true);
    svg.polyline(points_of(trace), "trace", spec.trace_color, spec.stroke_px);
    svg.marker({0.0, 2.0}, "node", spec.trisector_color);
    svg.label({0.0, 2.0}, "(0, 2)");
    return svg.str();
}

std::string render_trisection_svg(const construct::TrisectionResult& res,
                                  const std::vector<curve::TraceSample>& trace,
                                  const RenderSpec& spec) {
    SvgCanvas svg(spec);
    const Point o{0.0, 0.0};
    const Point a{kRayLength, 0.0};
    const Point b = kRayLength * geom::unit_vector(res.phi);
    const double u = res.unit;

    svg.line({spec.x_min, u}, {spec.x_max, u}, "offset-line", spec.construction_color,
             spec.thin_stroke_px, true);
    svg.polyline(points_of(trace), "trace", spec.trace_color, spec.stroke_px);
    svg.line(o, a, "side", "#000000", spec.stroke_px);
    svg.line(o, b, "side", "#000000", spec.stroke_px);

    if (res.method == construct::Method::Curve) {
        svg.circle(res.D, 2.0 * u, "construction-circle", spec.construction_color,
                   spec.thin_stroke_px);
    } else {
        // The square: top CD and the inside edge from O through E.
        svg.line(res.C, res.D, "tool", spec.tool_color, spec.stroke_px);
        svg.line(o, res.E, "tool", spec.tool_color, spec.stroke_px);
    }

    svg.line(o, kRayLength * res.ray1.direction(), "trisector", spec.trisector_color, spec.stroke_px);
    svg.line(o, kRayLength * res.ray2.direction(), "trisector", spec.trisector_color, spec.stroke_px);

    svg.marker(res.C, "point", spec.trisector_color);
    svg.marker(res.D, "point", spec.trisector_color);
    svg.marker(res.E, "point", spec.trisector_color);

    svg.label(o, "O", -16.0, 18.0);
    svg.label({std::min(spec.x_max, kRayLength) - 0.3, 0.0}, "A", 0.0, 18.0);
    const double reach = 0.9 * std::min({spec.x_max, spec.y_max, -spec.x_min, -spec.y_min});
    svg.label(reach * geom::unit_vector(res.phi), "B");
    svg.label(res.C, "C");
    svg.label(res.D, "D");
    svg.label(res.E, "E");
    return svg.str();
}

}  // namespace trisectrix::cli
