#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "merger_er/interval.hpp"
#include "merger_er/model.hpp"

namespace merger_er {

/// Midpoint-radius image of an interval. Raw curve points (vertices, asymptote
/// samples) may have y < 0; only points with y >= 0 stand for intervals.
struct KulpaPoint {
    double x = 0.0;
    double y = 0.0;

    bool is_interval() const noexcept { return y >= 0.0; }
    friend bool operator==(const KulpaPoint&, const KulpaPoint&) = default;
};

KulpaPoint to_point(const Interval& interval) noexcept;

/// [x - y, x + y]. Throws Error(NotAnInterval) when y < 0.
Interval to_interval(const KulpaPoint& point);

/// Image of the intersection of the two represented intervals, if non-empty.
std::optional<KulpaPoint> intersect_points(const KulpaPoint& first, const KulpaPoint& second);

/// Image of br_mu(mu_m); traces the gamma hyperbola as mu_m varies.
KulpaPoint p_mu(const MergerPair& pair, double mu_m);
/// Image of br_rho(rho_m); traces the delta hyperbola as rho_m varies.
KulpaPoint p_rho(const MergerPair& pair, double rho_m);

/// y = slope * x + intercept.
struct Line {
    double slope = 0.0;
    double intercept = 0.0;

    double at(double x) const noexcept { return slope * x + intercept; }
    double residual(const KulpaPoint& p) const noexcept { return p.y - at(p.x); }
};

enum class HyperbolaKind { Gamma, Delta };

std::string_view to_string(HyperbolaKind kind) noexcept;

/// Rectangular hyperbola x^2 - y^2 + c1 (x -/+ y) - c2 = 0 traced by the Kulpa
/// image of one bargaining region.
///   gamma: x^2 - y^2 + alpha1 (x - y) - alpha2 = 0, parameter mu_M in [mu_A + mu_B, inf)
///   delta: x^2 - y^2 + beta1 (x + y) - beta2 = 0,  parameter rho_M in (max rho, rho_A + rho_B]
struct Hyperbola {
    HyperbolaKind kind = HyperbolaKind::Gamma;
    double coeff_linear = 0.0;  // alpha1 or beta1
    double coeff_const = 0.0;   // alpha2 or beta2
    KulpaPoint center;
    double semi_axis = 0.0;     // equal transverse and conjugate semi-axes
    double eccentricity = 0.0;  // sqrt(2) for every rectangular hyperbola

    /// vertices[0] is V1 (gamma) / V3 (delta) on the discarded branch;
    /// vertices[1] is V2 / V4 on the branch that carries admissible regions.
    std::array<KulpaPoint, 2> vertices{};
    /// Slope +1 asymptote first, slope -1 second.
    std::array<Line, 2> asymptotes{};

    /// Strip 0 < x - y <= strip_upper (r* for gamma, r** for delta) bounds the
    /// admissible part of the branch.
    double strip_upper = 0.0;

    /// Parameter domain of the admissible branch.
    double param_lo = 0.0;
    double param_hi = 0.0;
    bool param_lo_open = false;
    bool param_hi_unbounded = false;

    /// Set when the admissible vertex has a non-positive abscissa.
    std::optional<std::string> warning;

    double residual(double x, double y) const noexcept;
    double residual(const KulpaPoint& p) const noexcept { return residual(p.x, p.y); }

    /// Point of the admissible branch at parameter value `param` (mu_M or rho_M),
    /// without admissibility checks.
    KulpaPoint point_at(double param) const noexcept;

    /// On the admissible branch side of the centre and inside the strip.
    bool in_admissible_strip(const KulpaPoint& p, double tol = 0.0) const noexcept;

    // Terms of the parameterisation: for gamma x - y = scale/(param - offset),
    // for delta x + y = scale/(param - offset).
    double param_scale = 0.0;
    double param_offset = 0.0;
};

Hyperbola gamma(const MergerPair& pair);
Hyperbola delta(const MergerPair& pair);

double gamma_residual(const MergerPair& pair, double x, double y);
double delta_residual(const MergerPair& pair, double x, double y);

/// Which post-merger quantity is held fixed while the other sweeps.
enum class FixedParameter { Rho, Mu };

/// Range of the free parameter (mu_M when rho is fixed, rho_M when mu is fixed)
/// over which classify yields a given case.
struct CaseRange {
    std::optional<Interval> range;  // absent: case unattainable at this fixed value
    bool lower_open = false;        // lo is the excluded rho_M = max(rho_A, rho_B)
    bool unbounded_above = false;   // hi was clamped (or is +inf)
    /// Same range as expected synergy mu_M - mu_A - mu_B (mu free) or as risk
    /// reduction rho_A + rho_B - rho_M (rho free).
    std::optional<Interval> alternate;
};

/// Range of mu_M yielding `label` at fixed rho_hat. Case 3 is unbounded above;
/// its upper end becomes `mu_clamp` (default +inf).
CaseRange case_mu_range(const MergerPair& pair, double rho_hat, CaseLabel label,
                        double mu_clamp = std::numeric_limits<double>::infinity());

/// Range of rho_M yielding `label` at fixed mu_hat, within (max rho, rho_A + rho_B].
CaseRange case_rho_range(const MergerPair& pair, double mu_hat, CaseLabel label);

/// Slope +/-1 line traced by the intersection point for Cases 1 and 4.
struct Locus {
    Line line;
    Interval param_range;
    bool unbounded_above = false;
    CaseLabel case_label = CaseLabel::Case1CrB;
    FixedParameter fixed = FixedParameter::Rho;
};

/// Portion of a hyperbola branch traced in Case 2 (rho fixed) / Case 3 (mu fixed).
struct HyperbolaArc {
    HyperbolaKind kind = HyperbolaKind::Gamma;
    Interval param_range;
    bool lower_open = false;
    bool unbounded_above = false;
    CaseLabel case_label = CaseLabel::Case2BrMu;
};

/// Cases 1/4 give a Locus, the case whose region moves with the free parameter
/// gives an arc, and the case whose region is pinned by the fixed parameter
/// gives a single point.
using CaseLocus = std::variant<Locus, HyperbolaArc, KulpaPoint>;

/// Throws Error(InvalidCase) for empty labels and when the case is unattainable
/// at this fixed value.
CaseLocus locus_fixed_rho(const MergerPair& pair, double rho_hat, CaseLabel label,
                          double mu_clamp = std::numeric_limits<double>::infinity());
CaseLocus locus_fixed_mu(const MergerPair& pair, double mu_hat, CaseLabel label);

}  // namespace merger_er
