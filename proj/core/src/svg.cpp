#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "merger_er/format.hpp"
#include "merger_er/sweep.hpp"

namespace merger_er {

namespace {

std::string f9(double v) { return format_significant(v, 9); }

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Step from {1, 2, 5} x 10^k giving roughly `target` ticks across span.
double nice_step(double span, int target) {
    const double raw = span / std::max(target, 1);
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double fraction = raw / magnitude;
    double nice = 10.0;
    if (fraction <= 1.0) {
        nice = 1.0;
    } else if (fraction <= 2.0) {
        nice = 2.0;
    } else if (fraction <= 5.0) {
        nice = 5.0;
    }
    return nice * magnitude;
}

std::vector<double> ticks(double lo, double hi, int target) {
    std::vector<double> out;
    if (!(hi > lo)) {
        return out;
    }
    const double step = nice_step(hi - lo, target);
    const double first = std::ceil(lo / step);
    for (double k = first; k * step <= hi + 1e-12 * step; k += 1.0) {
        // Snap to the printed grid so labels read 0.5 rather than 0.49999999.
        out.push_back(round_significant(k * step, 12));
    }
    return out;
}

/// World-to-pixel mapping; y grows upwards in world coordinates.
struct Viewport {
    double x_min, x_max, y_min, y_max;
    double left, top, width, height;

    double px(double x) const { return left + (x - x_min) / (x_max - x_min) * width; }
    double py(double y) const { return top + (y_max - y) / (y_max - y_min) * height; }
};

const char* role_color(CurveRole role, std::string_view label) {
    switch (role) {
        case CurveRole::GammaBranch: return "#c0392b";
        case CurveRole::DeltaBranch: return "#1e8449";
        case CurveRole::Asymptote: return label.substr(0, 5) == "gamma" ? "#e6b0aa" : "#a9dfbf";
        case CurveRole::Locus: return "#1f4e9e";
    }
    return "#000000";
}

void open_document(std::ostringstream& os, double width, double height, std::string_view title,
                   const SvgStyle& style) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f9(width)
       << "\" height=\"" << f9(height) << "\" viewBox=\"0 0 " << f9(width) << ' ' << f9(height)
       << "\" font-family=\"" << escape_xml(style.font_family) << "\" font-size=\""
       << f9(style.font_size) << "\">\n";
    os << "<title>" << escape_xml(title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << f9(width) << "\" height=\"" << f9(height)
       << "\" fill=\"#ffffff\"/>\n";
}

void draw_axes(std::ostringstream& os, const Viewport& vp, const SvgStyle& style, int x_ticks,
               int y_ticks, double x_axis_at, double y_axis_at) {
    const double axis_y = vp.py(std::clamp(x_axis_at, vp.y_min, vp.y_max));
    const double axis_x = vp.px(std::clamp(y_axis_at, vp.x_min, vp.x_max));
    os << "<g class=\"axes\" stroke=\"#444444\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << f9(vp.left) << "\" y1=\"" << f9(axis_y) << "\" x2=\"" << f9(vp.left + vp.width)
       << "\" y2=\"" << f9(axis_y) << "\"/>\n";
    os << "<line x1=\"" << f9(axis_x) << "\" y1=\"" << f9(vp.top) << "\" x2=\"" << f9(axis_x)
       << "\" y2=\"" << f9(vp.top + vp.height) << "\"/>\n";
    os << "</g>\n";
    os << "<g class=\"ticks\" fill=\"#444444\" font-size=\"" << f9(style.font_size * 0.85) << "\">\n";
    for (const double t : ticks(vp.x_min, vp.x_max, x_ticks)) {
        const double x = vp.px(t);
        os << "<line x1=\"" << f9(x) << "\" y1=\"" << f9(axis_y) << "\" x2=\"" << f9(x) << "\" y2=\""
           << f9(axis_y + 4) << "\" stroke=\"#444444\"/>";
        os << "<text x=\"" << f9(x) << "\" y=\"" << f9(axis_y + 4 + style.font_size)
           << "\" text-anchor=\"middle\">" << f9(t) << "</text>\n";
    }
    for (const double t : ticks(vp.y_min, vp.y_max, y_ticks)) {
        const double y = vp.py(t);
        os << "<line x1=\"" << f9(axis_x - 4) << "\" y1=\"" << f9(y) << "\" x2=\"" << f9(axis_x)
           << "\" y2=\"" << f9(y) << "\" stroke=\"#444444\"/>";
        os << "<text x=\"" << f9(axis_x - 6) << "\" y=\"" << f9(y + style.font_size * 0.3)
           << "\" text-anchor=\"end\">" << f9(t) << "</text>\n";
    }
    os << "</g>\n";
}

void draw_polyline(std::ostringstream& os, const Viewport& vp, const std::vector<KulpaPoint>& points,
                   std::string_view color, double stroke_width, bool dashed, std::string_view css_class) {
    os << "<polyline class=\"" << css_class << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << f9(stroke_width) << '"';
    if (dashed) {
        os << " stroke-dasharray=\"6 4\"";
    }
    os << " points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            os << ' ';
        }
        os << f9(vp.px(points[i].x)) << ',' << f9(vp.py(points[i].y));
    }
    os << "\"/>\n";
}

}  // namespace

std::string emit_svg(const Scene& scene, const SvgStyle& style) {
    const Frame& f = scene.frame;
    const double span = std::max({f.x_max - f.x_min, f.y_max - f.y_min, 1e-9});
    const double pad = style.margin * span;

    const double header = style.font_size * 1.6 * static_cast<double>(scene.annotations.size() + 1);
    Viewport vp{};
    vp.x_min = f.x_min - pad;
    vp.x_max = f.x_max + pad;
    vp.y_min = f.y_min - pad;
    vp.y_max = f.y_max + pad;
    vp.left = 10.0;
    vp.top = header;
    vp.width = style.width - 20.0;
    // Equal aspect so slope +/-1 loci render at 45 degrees.
    vp.height = vp.width * (vp.y_max - vp.y_min) / (vp.x_max - vp.x_min);
    const double height = vp.top + vp.height + 10.0;

    std::ostringstream os;
    open_document(os, style.width, height, "Kulpa diagram of the bargaining region", style);
    os << "<defs><clipPath id=\"plot\"><rect x=\"" << f9(vp.left) << "\" y=\"" << f9(vp.top)
       << "\" width=\"" << f9(vp.width) << "\" height=\"" << f9(vp.height) << "\"/></clipPath></defs>\n";

    os << "<g class=\"annotations\" fill=\"#222222\">\n";
    for (std::size_t i = 0; i < scene.annotations.size(); ++i) {
        os << "<text x=\"10\" y=\"" << f9(style.font_size * 1.6 * static_cast<double>(i + 1)) << "\">"
           << escape_xml(scene.annotations[i]) << "</text>\n";
    }
    os << "</g>\n";

    draw_axes(os, vp, style, 8, 6, 0.0, 0.0);

    os << "<g clip-path=\"url(#plot)\">\n";
    for (const Polyline& curve : scene.curves) {
        const bool asymptote = curve.role == CurveRole::Asymptote;
        const double width = curve.role == CurveRole::Locus ? 2.5 : (asymptote ? 1.0 : 2.0);
        draw_polyline(os, vp, curve.points, role_color(curve.role, curve.label), width, asymptote,
                      to_string(curve.role));
    }
    if (scene.result_segment) {
        const auto& seg = *scene.result_segment;
        os << "<line class=\"result-segment\" x1=\"" << f9(vp.px(seg[0].x)) << "\" y1=\""
           << f9(vp.py(seg[0].y)) << "\" x2=\"" << f9(vp.px(seg[1].x)) << "\" y2=\""
           << f9(vp.py(seg[1].y)) << "\" stroke=\"#1f4e9e\" stroke-width=\"4\"/>\n";
        for (const Marker& m : scene.markers) {
            if (m.label == "result") {
                // Kulpa's construction: the point sits at the apex over its interval.
                for (const KulpaPoint& end : seg) {
                    os << "<line class=\"result-guide\" x1=\"" << f9(vp.px(m.point.x)) << "\" y1=\""
                       << f9(vp.py(m.point.y)) << "\" x2=\"" << f9(vp.px(end.x)) << "\" y2=\""
                       << f9(vp.py(end.y)) << "\" stroke=\"#1f4e9e\" stroke-width=\"1\" stroke-dasharray=\"3 3\"/>\n";
                }
            }
        }
    }
    double p_mu_x = 0.0;
    double p_rho_x = 0.0;
    for (const Marker& m : scene.markers) {
        if (m.label == "P_mu") {
            p_mu_x = m.point.x;
        } else if (m.label == "P_rho") {
            p_rho_x = m.point.x;
        }
    }
    const bool p_mu_left = p_mu_x <= p_rho_x;
    for (const Marker& m : scene.markers) {
        const bool result = m.label == "result";
        os << "<circle class=\"marker\" cx=\"" << f9(vp.px(m.point.x)) << "\" cy=\"" << f9(vp.py(m.point.y))
           << "\" r=\"" << (result ? "5" : "3.5") << "\" fill=\"" << (result ? "#1f4e9e" : "#222222")
           << "\"/>";
        // P_mu, P_rho and the result often sit close together: whichever of P_mu and
        // P_rho lies further left is labelled on its left, and the result label goes below.
        const bool left = (m.label == "P_mu" && p_mu_left) || (m.label == "P_rho" && !p_mu_left);
        const double dx = left ? -6.0 : 6.0;
        const double dy = result ? 16.0 : -6.0;
        os << "<text x=\"" << f9(vp.px(m.point.x) + dx) << "\" y=\"" << f9(vp.py(m.point.y) + dy) << "\""
           << (left ? " text-anchor=\"end\"" : "") << ">" << escape_xml(m.label) << "</text>\n";
    }
    os << "</g>\n";

    if (!scene.result_segment) {
        os << "<text class=\"empty\" x=\"" << f9(vp.left + vp.width / 2) << "\" y=\""
           << f9(vp.top + vp.height / 2) << "\" text-anchor=\"middle\" fill=\"#922b21\" font-size=\""
           << f9(style.font_size * 1.5) << "\">empty</text>\n";
    }

    if (style.legend) {
        std::vector<std::pair<std::string, std::string>> entries;
        for (const Polyline& curve : scene.curves) {
            if (curve.role != CurveRole::Asymptote) {
                entries.emplace_back(curve.label, role_color(curve.role, curve.label));
            }
        }
        entries.emplace_back("asymptotes", "#bbbbbb");
        const double row = style.font_size * 1.4;
        const double box_w = 170.0;
        const double x = vp.left + vp.width - box_w - 6;
        const double y = vp.top + 6;
        os << "<g class=\"legend\">\n";
        os << "<rect x=\"" << f9(x) << "\" y=\"" << f9(y) << "\" width=\"" << f9(box_w) << "\" height=\""
           << f9(row * static_cast<double>(entries.size()) + 8) << "\" fill=\"#ffffff\" fill-opacity=\"0.85\" stroke=\"#999999\"/>\n";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const double ry = y + 4 + row * (static_cast<double>(i) + 0.5);
            os << "<line x1=\"" << f9(x + 6) << "\" y1=\"" << f9(ry) << "\" x2=\"" << f9(x + 26)
               << "\" y2=\"" << f9(ry) << "\" stroke=\"" << entries[i].second << "\" stroke-width=\"2\"/>";
            os << "<text x=\"" << f9(x + 32) << "\" y=\"" << f9(ry + style.font_size * 0.35) << "\">"
               << escape_xml(entries[i].first) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string emit_svg(const Series& series, const SvgStyle& style) {
    double x_min = 0.0;
    double x_max = 1.0;
    double y_max = 1.0;
    if (!series.points.empty()) {
        x_min = series.points.front().parameter;
        x_max = series.points.back().parameter;
        y_max = 0.0;
        for (const SeriesSample& s : series.points) {
            y_max = std::max(y_max, s.high);
        }
    }
    if (!(x_max > x_min)) {
        x_max = x_min + 1.0;
    }
    if (!(y_max > 0.0)) {
        y_max = 1.0;
    }

    Viewport vp{};
    vp.x_min = x_min;
    vp.x_max = x_max;
    vp.y_min = 0.0;
    vp.y_max = y_max * (1.0 + style.margin);
    vp.left = 60.0;
    vp.top = style.font_size * 2.5;
    vp.width = style.width - 80.0;
    vp.height = style.series_height - vp.top - 40.0;

    std::ostringstream os;
    open_document(os, style.width, style.series_height, series.name + " against " + series.parameter_name,
                  style);
    os << "<text x=\"" << f9(vp.left) << "\" y=\"" << f9(style.font_size * 1.5) << "\">"
       << escape_xml(series.name + " against " + series.parameter_name) << "</text>\n";
    draw_axes(os, vp, style, 8, 6, 0.0, x_min);

    if (!series.points.empty()) {
        os << "<polygon class=\"region\" fill=\"#aed6f1\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        for (std::size_t i = 0; i < series.points.size(); ++i) {
            const auto& s = series.points[i];
            os << (i > 0 ? " " : "") << f9(vp.px(s.parameter)) << ',' << f9(vp.py(s.high));
        }
        for (std::size_t i = series.points.size(); i-- > 0;) {
            const auto& s = series.points[i];
            os << ' ' << f9(vp.px(s.parameter)) << ',' << f9(vp.py(s.low));
        }
        os << "\"/>\n";
        std::vector<KulpaPoint> upper;
        std::vector<KulpaPoint> lower;
        for (const auto& s : series.points) {
            upper.push_back({s.parameter, s.high});
            lower.push_back({s.parameter, s.low});
        }
        draw_polyline(os, vp, upper, "#1f4e9e", 2.0, false, "upper");
        draw_polyline(os, vp, lower, "#c0392b", 2.0, false, "lower");
    }

    if (style.legend) {
        const double x = vp.left + 10;
        const double y = vp.top + 10;
        os << "<g class=\"legend\">\n";
        os << "<line x1=\"" << f9(x) << "\" y1=\"" << f9(y) << "\" x2=\"" << f9(x + 20) << "\" y2=\"" << f9(y)
           << "\" stroke=\"#1f4e9e\" stroke-width=\"2\"/><text x=\"" << f9(x + 26) << "\" y=\""
           << f9(y + 4) << "\">r_upper</text>\n";
        os << "<line x1=\"" << f9(x) << "\" y1=\"" << f9(y + 18) << "\" x2=\"" << f9(x + 20) << "\" y2=\""
           << f9(y + 18) << "\" stroke=\"#c0392b\" stroke-width=\"2\"/><text x=\"" << f9(x + 26)
           << "\" y=\"" << f9(y + 22) << "\">r_lower</text>\n";
        os << "</g>\n";
    }
    os << "<text x=\"" << f9(vp.left + vp.width / 2) << "\" y=\"" << f9(style.series_height - 8)
       << "\" text-anchor=\"middle\">" << escape_xml(series.parameter_name) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string emit_csv(const Series& series) {
    std::string out = series.parameter_name + ",r_lower,r_upper\r\n";
    for (const SeriesSample& s : series.points) {
        out += f9(s.parameter);
        out += ',';
        out += f9(s.low);
        out += ',';
        out += f9(s.high);
        out += "\r\n";
    }
    return out;
}

}  // namespace merger_er
