#include "merger_er/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "merger_er/error.hpp"
#include "merger_er/format.hpp"

namespace merger_er {

namespace {

std::string num(double v) { return format_significant(v, 15); }

void require_samples(std::size_t n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "samples",
                    "at least 2 samples are required, got " + std::to_string(n));
    }
}

// Evenly spaced values with the last one pinned to hi; an open lower end
// moves the first sample half a step inside.
std::vector<double> grid(double lo, double hi, std::size_t n, bool lo_open) {
    std::vector<double> values(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = i + 1 == n ? hi : lo + static_cast<double>(i) * step;
    }
    if (lo_open) {
        values.front() = lo + 0.5 * step;
    }
    return values;
}

}  // namespace

std::string_view to_string(CurveRole role) noexcept {
    switch (role) {
        case CurveRole::GammaBranch: return "gamma";
        case CurveRole::DeltaBranch: return "delta";
        case CurveRole::Asymptote: return "asymptote";
        case CurveRole::Locus: return "locus";
    }
    return "curve";
}

Series sweep_br_mu(const MergerPair& pair, const Interval& mu_range, std::size_t n) {
    require_samples(n);
    const double floor = pair.mu_a + pair.mu_b;
    if (!std::isfinite(mu_range.lo) || !std::isfinite(mu_range.hi) || !(mu_range.lo < mu_range.hi)) {
        throw Error(ErrorCode::InvalidArgument, "range",
                    "sweep range must be finite with lo < hi, got [" + num(mu_range.lo) + ", " +
                        num(mu_range.hi) + "]");
    }
    if (mu_range.lo < floor) {
        throw Error(ErrorCode::Inadmissible, "range",
                    "mu_m sweep must start at or above mu_A + mu_B = " + num(floor));
    }
    Series series;
    series.name = "BR_mu";
    series.parameter_name = "mu_m";
    series.points.reserve(n);
    for (const double mu : grid(mu_range.lo, mu_range.hi, n, false)) {
        const Interval region = br_mu(pair, mu);
        series.points.push_back({mu, region.lo, region.hi});
    }
    return series;
}

Series sweep_br_rho(const MergerPair& pair, const Interval& rho_range, std::size_t n) {
    require_samples(n);
    const double floor = std::max(pair.rho_a, pair.rho_b);
    const double ceiling = pair.rho_a + pair.rho_b;
    if (!std::isfinite(rho_range.lo) || !std::isfinite(rho_range.hi) ||
        !(rho_range.lo < rho_range.hi)) {
        throw Error(ErrorCode::InvalidArgument, "range",
                    "sweep range must be finite with lo < hi, got [" + num(rho_range.lo) + ", " +
                        num(rho_range.hi) + "]");
    }
    if (rho_range.lo < floor || rho_range.hi > ceiling) {
        throw Error(ErrorCode::Inadmissible, "range",
                    "rho_m sweep must lie in (" + num(floor) + ", " + num(ceiling) + "]");
    }
    Series series;
    series.name = "BR_rho";
    series.parameter_name = "rho_m";
    series.points.reserve(n);
    for (const double rho : grid(rho_range.lo, rho_range.hi, n, rho_range.lo == floor)) {
        const Interval region = br_rho(pair, rho);
        series.points.push_back({rho, region.lo, region.hi});
    }
    return series;
}

Polyline sweep_curve(const Hyperbola& hyperbola, std::size_t n, const Interval& clamp) {
    require_samples(n);
    const double lo = std::max(clamp.lo, hyperbola.param_lo);
    const double hi = std::min(clamp.hi, hyperbola.param_hi);
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw Error(ErrorCode::Inadmissible, "clamp",
                    "clamp [" + num(clamp.lo) + ", " + num(clamp.hi) +
                        "] leaves no finite admissible range of the " +
                        std::string(to_string(hyperbola.kind)) + " branch");
    }
    const bool lo_open = hyperbola.param_lo_open && lo == hyperbola.param_lo;

    Polyline line;
    line.label = std::string(to_string(hyperbola.kind));
    line.role = hyperbola.kind == HyperbolaKind::Gamma ? CurveRole::GammaBranch : CurveRole::DeltaBranch;
    line.source = hyperbola.kind;
    line.points.reserve(n);
    for (const double param : grid(lo, hi, n, lo_open)) {
        line.points.push_back(hyperbola.point_at(param));
    }
    return line;
}

namespace {

Polyline line_polyline(std::string label, CurveRole role, const Line& line, double x0, double x1) {
    Polyline out;
    out.label = std::move(label);
    out.role = role;
    out.source = line;
    out.points = {KulpaPoint{x0, line.at(x0)}, KulpaPoint{x1, line.at(x1)}};
    return out;
}

}  // namespace

Scene build_scene(const MergerPair& pair, double mu_m, double rho_m, const SceneOptions& options) {
    Scene scene;
    scene.report = classify(pair, mu_m, rho_m, options.eps);

    const Hyperbola gamma_curve = gamma(pair);
    const Hyperbola delta_curve = delta(pair);
    const double mu_floor = pair.mu_a + pair.mu_b;
    const double mu_extent =
        options.mu_extent > 0.0 ? options.mu_extent : std::max(2.0 * mu_floor, 1.5 * mu_m);

    scene.curves.push_back(sweep_curve(gamma_curve, options.samples, {mu_floor, std::max(mu_extent, mu_m)}));
    scene.curves.push_back(
        sweep_curve(delta_curve, options.samples, {delta_curve.param_lo, delta_curve.param_hi}));

    const KulpaPoint mu_point = to_point(scene.report.br_mu);
    const KulpaPoint rho_point = to_point(scene.report.br_rho);
    scene.markers.push_back({"P_mu", mu_point});
    scene.markers.push_back({"P_rho", rho_point});
    scene.markers.push_back({"r*", {pair.r_star, 0.0}});
    scene.markers.push_back({"r**", {pair.r_star_star, 0.0}});
    scene.markers.push_back({"V2", gamma_curve.vertices[1]});
    scene.markers.push_back({"V4", delta_curve.vertices[1]});

    const std::string label(to_string(scene.report.case_label));
    if (scene.report.interval) {
        const Interval& region = *scene.report.interval;
        scene.markers.push_back({"result", to_point(region)});
        scene.result_segment = std::array<KulpaPoint, 2>{KulpaPoint{region.lo, 0.0},
                                                         KulpaPoint{region.hi, 0.0}};
        scene.annotations.push_back("case " + label + ": [" + format_significant(region.lo, 9) +
                                    ", " + format_significant(region.hi, 9) + "]");
    } else {
        scene.annotations.push_back("case " + label + ": the bargaining region is empty");
    }
    if (scene.report.tie_broken) {
        scene.annotations.push_back("endpoint tie: label chosen by priority Case2 > Case1 > Case4 > Case3");
    }
    scene.annotations.push_back("mu_M = " + format_significant(mu_m, 9) +
                                ", rho_M = " + format_significant(rho_m, 9) +
                                ", r* = " + format_significant(pair.r_star, 9) +
                                ", r** = " + format_significant(pair.r_star_star, 9));
    for (const Hyperbola* h : {&gamma_curve, &delta_curve}) {
        if (h->warning) {
            scene.annotations.push_back("warning: " + *h->warning);
        }
    }

    // Frame spans the labelled features; curves beyond it are clipped when drawn.
    Frame frame{0.0, 0.0, 0.0, 0.0};
    bool first = true;
    for (const Marker& m : scene.markers) {
        if (first) {
            frame = {m.point.x, m.point.x, m.point.y, m.point.y};
            first = false;
        }
        frame.x_min = std::min(frame.x_min, m.point.x);
        frame.x_max = std::max(frame.x_max, m.point.x);
        frame.y_min = std::min(frame.y_min, m.point.y);
        frame.y_max = std::max(frame.y_max, m.point.y);
    }
    frame.x_min = std::min(frame.x_min, 0.0);
    frame.y_min = std::min(frame.y_min, 0.0);
    frame.y_max = std::max(frame.y_max, 0.0);
    if (scene.result_segment) {
        frame.x_max = std::max(frame.x_max, (*scene.result_segment)[1].x);
    }
    scene.frame = frame;

    const double span = std::max(frame.x_max - frame.x_min, frame.y_max - frame.y_min);
    const double x0 = frame.x_min - span;
    const double x1 = frame.x_max + span;
    scene.curves.push_back(line_polyline("gamma asymptote y = x", CurveRole::Asymptote,
                                         gamma_curve.asymptotes[0], x0, x1));
    scene.curves.push_back(line_polyline(
        "gamma asymptote y = -x + " + format_significant(gamma_curve.asymptotes[1].intercept, 9),
        CurveRole::Asymptote, gamma_curve.asymptotes[1], x0, x1));
    scene.curves.push_back(line_polyline(
        "delta asymptote y = x + " + format_significant(delta_curve.asymptotes[0].intercept, 9),
        CurveRole::Asymptote, delta_curve.asymptotes[0], x0, x1));
    scene.curves.push_back(line_polyline("delta asymptote y = -x", CurveRole::Asymptote,
                                         delta_curve.asymptotes[1], x0, x1));

    if (scene.report.interval) {
        const CaseLocus locus = locus_fixed_rho(pair, rho_m, scene.report.case_label, mu_extent);
        if (const auto* straight = std::get_if<Locus>(&locus)) {
            const double lo_mu = straight->param_range.lo;
            const double hi_mu = std::min(straight->param_range.hi, std::max(mu_extent, mu_m));
            const KulpaPoint start = to_point(*classify(pair, lo_mu, rho_m, options.eps).interval);
            const KulpaPoint end = to_point(*classify(pair, hi_mu, rho_m, options.eps).interval);
            Polyline segment = line_polyline("locus " + label, CurveRole::Locus, straight->line,
                                             start.x, end.x);
            scene.curves.push_back(std::move(segment));
        } else if (const auto* arc = std::get_if<HyperbolaArc>(&locus)) {
            const double hi_mu = std::min(arc->param_range.hi, std::max(mu_extent, mu_m));
            if (arc->param_range.lo < hi_mu) {
                Polyline piece = sweep_curve(gamma_curve, options.samples, {arc->param_range.lo, hi_mu});
                piece.label = "locus " + label;
                piece.role = CurveRole::Locus;
                scene.curves.push_back(std::move(piece));
            }
        }
        // Case 3 at fixed rho pins the region to P_rho, which is already a marker.
    }
    return scene;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::EncodingFailure, path, "cannot open " + path + " for writing");
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw Error(ErrorCode::EncodingFailure, path, "write to " + path + " failed");
    }
}

}  // namespace merger_er
