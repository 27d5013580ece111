#include "merger_er/kulpa.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "merger_er/error.hpp"
#include "merger_er/format.hpp"

namespace merger_er {

KulpaPoint to_point(const Interval& interval) noexcept {
    return {0.5 * (interval.lo + interval.hi), 0.5 * (interval.hi - interval.lo)};
}

Interval to_interval(const KulpaPoint& point) {
    if (!point.is_interval()) {
        throw Error(ErrorCode::NotAnInterval, "",
                    "point (" + format_significant(point.x, 15) + ", " +
                        format_significant(point.y, 15) + ") has negative radius");
    }
    return {point.x - point.y, point.x + point.y};
}

std::optional<KulpaPoint> intersect_points(const KulpaPoint& first, const KulpaPoint& second) {
    const Interval a = to_interval(first);
    const Interval b = to_interval(second);
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo > hi) {
        return std::nullopt;
    }
    return KulpaPoint{0.5 * (lo + hi), 0.5 * (hi - lo)};
}

KulpaPoint p_mu(const MergerPair& pair, double mu_m) { return to_point(br_mu(pair, mu_m)); }

KulpaPoint p_rho(const MergerPair& pair, double rho_m) { return to_point(br_rho(pair, rho_m)); }

std::string_view to_string(HyperbolaKind kind) noexcept {
    return kind == HyperbolaKind::Gamma ? "gamma" : "delta";
}

double Hyperbola::residual(double x, double y) const noexcept {
    const double mixed = kind == HyperbolaKind::Gamma ? x - y : x + y;
    return x * x - y * y + coeff_linear * mixed - coeff_const;
}

KulpaPoint Hyperbola::point_at(double param) const noexcept {
    // One of x - y, x + y is scale/(param - offset); the curve equation
    // (x - y)(x + y) + c1 * mixed - c2 = 0 then fixes the other.
    const double driven = param_scale / (param - param_offset);
    const double other = coeff_const / driven - coeff_linear;
    if (kind == HyperbolaKind::Gamma) {
        // driven = x - y, other = x + y
        return {0.5 * (other + driven), 0.5 * (other - driven)};
    }
    // driven = x + y, other = x - y
    return {0.5 * (driven + other), 0.5 * (driven - other)};
}

bool Hyperbola::in_admissible_strip(const KulpaPoint& p, double tol) const noexcept {
    const double diff = p.x - p.y;
    return diff > -tol && diff <= strip_upper + tol && p.x >= center.x - tol;
}

namespace {

void attach_vertex_warning(Hyperbola& h, const char* name, const char* vertex) {
    if (h.vertices[1].x <= 0.0) {
        h.warning = std::string(vertex) + " of " + name + " has non-positive abscissa " +
                    format_significant(h.vertices[1].x, 9) +
                    "; the admissible branch starts left of the origin";
    }
}

}  // namespace

Hyperbola gamma(const MergerPair& pair) {
    const double rs = pair.r_star;
    const double ratio = pair.mu_a / pair.mu_b;

    Hyperbola h;
    h.kind = HyperbolaKind::Gamma;
    h.coeff_linear = rs * (ratio - 1.0);
    h.coeff_const = rs * rs * ratio;
    const double shift = rs * (pair.mu_b - pair.mu_a) / (2.0 * pair.mu_b);
    h.center = {shift, shift};
    h.semi_axis = rs * std::sqrt(ratio);
    h.eccentricity = std::sqrt(2.0);
    h.vertices = {KulpaPoint{shift - h.semi_axis, shift}, KulpaPoint{shift + h.semi_axis, shift}};
    h.asymptotes = {Line{1.0, 0.0}, Line{-1.0, 2.0 * shift}};
    h.strip_upper = rs;
    h.param_lo = pair.mu_a + pair.mu_b;
    h.param_hi = std::numeric_limits<double>::infinity();
    h.param_lo_open = false;
    h.param_hi_unbounded = true;
    h.param_scale = rs * pair.mu_a;
    h.param_offset = pair.mu_b;
    attach_vertex_warning(h, "gamma", "V2");
    return h;
}

Hyperbola delta(const MergerPair& pair) {
    const double rss = pair.r_star_star;
    const double ratio = pair.rho_a / pair.rho_b;

    Hyperbola h;
    h.kind = HyperbolaKind::Delta;
    h.coeff_linear = rss * (ratio - 1.0);
    h.coeff_const = rss * rss * ratio;
    const double shift = rss * (pair.rho_b - pair.rho_a) / (2.0 * pair.rho_b);
    // Completing squares gives (x - shift)^2 - (y + shift)^2 = beta2.
    h.center = {shift, -shift};
    h.semi_axis = rss * std::sqrt(ratio);
    h.eccentricity = std::sqrt(2.0);
    h.vertices = {KulpaPoint{shift - h.semi_axis, -shift}, KulpaPoint{shift + h.semi_axis, -shift}};
    h.asymptotes = {Line{1.0, -2.0 * shift}, Line{-1.0, 0.0}};
    h.strip_upper = rss;
    h.param_lo = std::max(pair.rho_a, pair.rho_b);
    h.param_hi = pair.rho_a + pair.rho_b;
    h.param_lo_open = true;
    h.param_hi_unbounded = false;
    h.param_scale = rss * pair.rho_a;
    h.param_offset = pair.rho_b;
    attach_vertex_warning(h, "delta", "V4");
    return h;
}

double gamma_residual(const MergerPair& pair, double x, double y) {
    const double rs = pair.r_star;
    const double ratio = pair.mu_a / pair.mu_b;
    return x * x - y * y - rs * (1.0 - ratio) * (x - y) - rs * rs * ratio;
}

double delta_residual(const MergerPair& pair, double x, double y) {
    const double rss = pair.r_star_star;
    const double ratio = pair.rho_a / pair.rho_b;
    return x * x - y * y - rss * (1.0 - ratio) * (x + y) - rss * rss * ratio;
}

namespace {

void require_nonempty_label(CaseLabel label) {
    if (!is_nonempty_case(label)) {
        throw Error(ErrorCode::InvalidCase, "case",
                    "case " + std::string(to_string(label)) + " has no region to describe");
    }
}

void require_rho_hat(const MergerPair& pair, double rho_hat) {
    const double floor = std::max(pair.rho_a, pair.rho_b);
    const double ceiling = pair.rho_a + pair.rho_b;
    if (!std::isfinite(rho_hat) || !(rho_hat > floor && rho_hat <= ceiling)) {
        throw Error(ErrorCode::Inadmissible, "rho_hat",
                    "fixed rho must lie in (" + format_significant(floor, 15) + ", " +
                        format_significant(ceiling, 15) + "]");
    }
}

void require_mu_hat(const MergerPair& pair, double mu_hat) {
    const double floor = pair.mu_a + pair.mu_b;
    if (!std::isfinite(mu_hat) || mu_hat < floor) {
        throw Error(ErrorCode::Inadmissible, "mu_hat",
                    "fixed mu must be at least mu_A + mu_B = " + format_significant(floor, 15));
    }
}

}  // namespace

CaseRange case_mu_range(const MergerPair& pair, double rho_hat, CaseLabel label, double mu_clamp) {
    require_nonempty_label(label);
    require_rho_hat(pair, rho_hat);

    const double rs = pair.r_star;
    const double rss = pair.r_star_star;
    const double floor = pair.mu_a + pair.mu_b;

    // Values of mu_M at which one endpoint of br_mu meets one endpoint of br_rho(rho_hat).
    const double lower_meets_lower = rs / rss * pair.mu_a * pair.rho_b / (rho_hat - pair.rho_a) + pair.mu_b;
    const double upper_meets_upper = rss / rs * pair.mu_b * pair.rho_a / (rho_hat - pair.rho_b) + pair.mu_a;
    const double lower_meets_upper = rs / rss * pair.mu_a * (rho_hat - pair.rho_b) / pair.rho_a + pair.mu_b;
    const double upper_meets_lower = rss / rs * pair.mu_b * (rho_hat - pair.rho_a) / pair.rho_b + pair.mu_a;

    double lo = floor;
    double hi = std::numeric_limits<double>::infinity();
    CaseRange out;
    switch (label) {
        case CaseLabel::Case1CrB:
            lo = std::max({upper_meets_upper, lower_meets_upper, floor});
            hi = lower_meets_lower;
            break;
        case CaseLabel::Case2BrMu:
            lo = floor;
            hi = std::min(lower_meets_lower, upper_meets_upper);
            break;
        case CaseLabel::Case3BrRho:
            lo = std::max({lower_meets_lower, upper_meets_upper, floor});
            hi = mu_clamp;
            out.unbounded_above = true;
            break;
        case CaseLabel::Case4CrA:
            lo = std::max({lower_meets_lower, upper_meets_lower, floor});
            hi = upper_meets_upper;
            break;
        default:
            break;
    }
    if (lo > hi) {
        return out;
    }
    out.range = Interval{lo, hi};
    out.alternate = Interval{lo - floor, hi - floor};
    return out;
}

CaseRange case_rho_range(const MergerPair& pair, double mu_hat, CaseLabel label) {
    require_nonempty_label(label);
    require_mu_hat(pair, mu_hat);

    const double rs = pair.r_star;
    const double rss = pair.r_star_star;
    const double floor = std::max(pair.rho_a, pair.rho_b);
    const double ceiling = pair.rho_a + pair.rho_b;

    // Values of rho_M at which one endpoint of br_rho meets one endpoint of br_mu(mu_hat).
    const double lower_meets_lower = rs / rss * pair.rho_b * pair.mu_a / (mu_hat - pair.mu_b) + pair.rho_a;
    const double upper_meets_upper = rss / rs * pair.rho_a * pair.mu_b / (mu_hat - pair.mu_a) + pair.rho_b;
    const double upper_meets_lower = rss / rs * pair.rho_a * (mu_hat - pair.mu_b) / pair.mu_a + pair.rho_b;
    const double lower_meets_upper = rs / rss * pair.rho_b * (mu_hat - pair.mu_a) / pair.mu_b + pair.rho_a;

    double lo = floor;
    double hi = ceiling;
    switch (label) {
        case CaseLabel::Case1CrB:
            lo = std::max(upper_meets_upper, floor);
            hi = std::min({lower_meets_lower, upper_meets_lower, ceiling});
            break;
        case CaseLabel::Case2BrMu:
            lo = floor;
            hi = std::min({lower_meets_lower, upper_meets_upper, ceiling});
            break;
        case CaseLabel::Case3BrRho:
            lo = std::max({lower_meets_lower, upper_meets_upper, floor});
            hi = ceiling;
            break;
        case CaseLabel::Case4CrA:
            lo = std::max(lower_meets_lower, floor);
            hi = std::min({upper_meets_upper, lower_meets_upper, ceiling});
            break;
        default:
            break;
    }

    CaseRange out;
    out.lower_open = lo <= floor;
    if (lo > hi || (out.lower_open && hi <= floor)) {
        out.lower_open = false;
        return out;
    }
    if (out.lower_open) {
        lo = floor;
    }
    out.range = Interval{lo, hi};
    out.alternate = Interval{ceiling - hi, ceiling - lo};
    return out;
}

namespace {

[[noreturn]] void throw_unattainable(CaseLabel label, const char* fixed) {
    throw Error(ErrorCode::InvalidCase, "case",
                "case " + std::string(to_string(label)) + " is unattainable at this fixed " + fixed);
}

}  // namespace

CaseLocus locus_fixed_rho(const MergerPair& pair, double rho_hat, CaseLabel label, double mu_clamp) {
    const CaseRange range = case_mu_range(pair, rho_hat, label, mu_clamp);
    if (!range.range) {
        throw_unattainable(label, "rho");
    }
    const Interval risk = br_rho(pair, rho_hat);
    switch (label) {
        case CaseLabel::Case1CrB:
            // [lower mu bound, rho upper bound]: x + y pinned at the upper rho bound.
            return Locus{Line{-1.0, risk.hi}, *range.range, range.unbounded_above, label,
                         FixedParameter::Rho};
        case CaseLabel::Case4CrA:
            // [rho lower bound, upper mu bound]: x - y pinned at the lower rho bound.
            return Locus{Line{1.0, -risk.lo}, *range.range, range.unbounded_above, label,
                         FixedParameter::Rho};
        case CaseLabel::Case2BrMu:
            return HyperbolaArc{HyperbolaKind::Gamma, *range.range, false, range.unbounded_above, label};
        default:
            return to_point(risk);
    }
}

CaseLocus locus_fixed_mu(const MergerPair& pair, double mu_hat, CaseLabel label) {
    const CaseRange range = case_rho_range(pair, mu_hat, label);
    if (!range.range) {
        throw_unattainable(label, "mu");
    }
    const Interval value = br_mu(pair, mu_hat);
    switch (label) {
        case CaseLabel::Case1CrB:
            return Locus{Line{1.0, -value.lo}, *range.range, false, label, FixedParameter::Mu};
        case CaseLabel::Case4CrA:
            return Locus{Line{-1.0, value.hi}, *range.range, false, label, FixedParameter::Mu};
        case CaseLabel::Case3BrRho:
            return HyperbolaArc{HyperbolaKind::Delta, *range.range, range.lower_open, false, label};
        default:
            return to_point(value);
    }
}

}  // namespace merger_er
