#include "merger_er/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "merger_er/error.hpp"
#include "merger_er/format.hpp"

namespace merger_er {

namespace {

std::string num(double v) { return format_significant(v, 15); }

void require_positive(double value, const std::string& path) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw Error(ErrorCode::InvalidProfile, path,
                    path + " must be a finite positive number, got " + num(value));
    }
}

void require_finite(double value, const char* path) {
    if (!std::isfinite(value)) {
        throw Error(ErrorCode::InvalidArgument, path, std::string(path) + " must be finite");
    }
}

// Guards against lo exceeding hi by rounding when the region is (nearly) a singleton.
Interval ordered(double lo, double hi) {
    if (lo > hi) {
        const double mid = 0.5 * (lo + hi);
        return {mid, mid};
    }
    return {lo, hi};
}

}  // namespace

MergerPair derive_pair(const CompanyProfile& a, const CompanyProfile& b) {
    require_positive(a.price, "a.price");
    require_positive(a.shares, "a.shares");
    require_positive(a.risk_per_share, "a.risk_per_share");
    require_positive(b.price, "b.price");
    require_positive(b.shares, "b.shares");
    require_positive(b.risk_per_share, "b.risk_per_share");

    MergerPair pair;
    pair.a = a;
    pair.b = b;
    pair.mu_a = a.price * a.shares;
    pair.mu_b = b.price * b.shares;
    pair.rho_a = a.risk_per_share * a.shares;
    pair.rho_b = b.risk_per_share * b.shares;
    pair.r_star = b.price / a.price;
    pair.r_star_star = b.risk_per_share / a.risk_per_share;
    pair.lambda_a = a.price / a.risk_per_share;
    pair.lambda_b = b.price / b.risk_per_share;
    return pair;
}

Bounds mu_bounds(const MergerPair& pair, double mu_m) {
    require_finite(mu_m, "mu_m");
    if (!(mu_m > pair.mu_a && mu_m > pair.mu_b)) {
        throw Error(ErrorCode::Inadmissible, "mu_m",
                    "mu_m must exceed both mu_A = " + num(pair.mu_a) + " and mu_B = " +
                        num(pair.mu_b) + ", got " + num(mu_m));
    }
    return {pair.r_star * pair.mu_a / (mu_m - pair.mu_b),
            pair.r_star * (mu_m - pair.mu_a) / pair.mu_b};
}

Bounds rho_bounds(const MergerPair& pair, double rho_m) {
    require_finite(rho_m, "rho_m");
    const double floor = std::max(pair.rho_a, pair.rho_b);
    if (!(rho_m > floor)) {
        throw Error(ErrorCode::Inadmissible, "rho_m",
                    "rho_m must exceed max(rho_A, rho_B) = " + num(floor) + ", got " + num(rho_m));
    }
    return {pair.r_star_star * (rho_m - pair.rho_a) / pair.rho_b,
            pair.r_star_star * pair.rho_a / (rho_m - pair.rho_b)};
}

Interval br_mu(const MergerPair& pair, double mu_m) {
    require_finite(mu_m, "mu_m");
    const double floor = pair.mu_a + pair.mu_b;
    if (mu_m < floor) {
        throw Error(ErrorCode::NegativeSynergy, "mu_m",
                    "mu_m must be at least mu_A + mu_B = " + num(floor) + ", got " + num(mu_m));
    }
    if (mu_m == floor) {
        return Interval::singleton(pair.r_star);
    }
    const Bounds bounds = mu_bounds(pair, mu_m);
    return ordered(bounds.lower, bounds.upper);
}

Interval br_rho(const MergerPair& pair, double rho_m) {
    require_finite(rho_m, "rho_m");
    const double ceiling = pair.rho_a + pair.rho_b;
    const double floor = std::max(pair.rho_a, pair.rho_b);
    if (!(rho_m > floor && rho_m <= ceiling)) {
        throw Error(ErrorCode::Inadmissible, "rho_m",
                    "rho_m must lie in (" + num(floor) + ", " + num(ceiling) + "], got " +
                        num(rho_m));
    }
    if (rho_m == ceiling) {
        return Interval::singleton(pair.r_star_star);
    }
    const Bounds bounds = rho_bounds(pair, rho_m);
    return ordered(bounds.lower, bounds.upper);
}

void check_admissible(const MergerPair& pair, double mu_m, double rho_m) {
    (void)br_mu(pair, mu_m);
    (void)br_rho(pair, rho_m);
}

std::optional<Interval> cr_a(const MergerPair& pair, double mu_m, double rho_m, double eps) {
    const Interval value = br_mu(pair, mu_m);
    const Interval risk = br_rho(pair, rho_m);
    if (value.hi < risk.lo - eps) {
        return std::nullopt;
    }
    return Interval{risk.lo, std::max(risk.lo, value.hi)};
}

std::optional<Interval> cr_b(const MergerPair& pair, double mu_m, double rho_m, double eps) {
    const Interval value = br_mu(pair, mu_m);
    const Interval risk = br_rho(pair, rho_m);
    if (risk.hi < value.lo - eps) {
        return std::nullopt;
    }
    return Interval{value.lo, std::max(value.lo, risk.hi)};
}

SynergyThreshold min_synergy_a(const MergerPair& pair, double v) {
    if (!std::isfinite(v) || v < 0.0 || v >= pair.rho_b) {
        throw Error(ErrorCode::InvalidRiskReduction, "v",
                    "risk reduction must lie in [0, rho_B = " + num(pair.rho_b) + "), got " + num(v));
    }
    const double raw = pair.lambda_a * (pair.rho_b - v) - pair.mu_b;
    return {raw, std::max(0.0, raw)};
}

SynergyThreshold min_synergy_b(const MergerPair& pair, double v) {
    if (!std::isfinite(v) || v < 0.0 || v >= pair.rho_a) {
        throw Error(ErrorCode::InvalidRiskReduction, "v",
                    "risk reduction must lie in [0, rho_A = " + num(pair.rho_a) + "), got " + num(v));
    }
    const double raw = pair.lambda_b * (pair.rho_a - v) - pair.mu_a;
    return {raw, std::max(0.0, raw)};
}

RiskAdjustedPerformance lambda_m(const MergerPair& pair, double s, double v) {
    if (!std::isfinite(s) || s < 0.0) {
        throw Error(ErrorCode::NegativeSynergy, "s", "synergy must be non-negative, got " + num(s));
    }
    const double total_risk = pair.rho_a + pair.rho_b;
    if (!std::isfinite(v) || v < 0.0 || v >= total_risk) {
        throw Error(ErrorCode::InvalidRiskReduction, "v",
                    "risk reduction must lie in [0, " + num(total_risk) + "), got " + num(v));
    }
    RiskAdjustedPerformance out;
    out.lambda_m = (pair.mu_a + pair.mu_b + s) / (total_risk - v);
    out.at_least_a = out.lambda_m >= pair.lambda_a;
    out.at_least_b = out.lambda_m >= pair.lambda_b;
    return out;
}

namespace {

constexpr std::array<std::string_view, 6> kCaseNames = {
    "Case1CrB", "Case2BrMu", "Case3BrRho", "Case4CrA", "EmptyRhoBelowMu", "EmptyMuBelowRho",
};

}  // namespace

std::string_view to_string(CaseLabel label) noexcept {
    return kCaseNames[static_cast<std::size_t>(label)];
}

CaseLabel parse_case_label(std::string_view name) {
    for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
        if (kCaseNames[i] == name) {
            return static_cast<CaseLabel>(i);
        }
    }
    throw Error(ErrorCode::InvalidCase, "case", "unknown case label '" + std::string(name) + "'");
}

bool is_nonempty_case(CaseLabel label) noexcept {
    return label != CaseLabel::EmptyRhoBelowMu && label != CaseLabel::EmptyMuBelowRho;
}

RegionReport classify(const MergerPair& pair, double mu_m, double rho_m, double eps) {
    RegionReport report;
    report.br_mu = br_mu(pair, mu_m);
    report.br_rho = br_rho(pair, rho_m);

    const double a = report.br_mu.lo;
    const double b = report.br_mu.hi;
    const double c = report.br_rho.lo;
    const double d = report.br_rho.hi;

    if (d < a - eps) {
        report.case_label = CaseLabel::EmptyRhoBelowMu;
        return report;
    }
    if (b < c - eps) {
        report.case_label = CaseLabel::EmptyMuBelowRho;
        return report;
    }

    const bool rho_lo_below = c <= a + eps;
    const bool rho_lo_above = c >= a - eps;
    const bool rho_hi_above = d >= b - eps;
    const bool rho_hi_below = d <= b + eps;

    const int matches = int(rho_lo_below && rho_hi_above) + int(rho_lo_below && rho_hi_below) +
                        int(rho_lo_above && rho_hi_above) + int(rho_lo_above && rho_hi_below);
    report.tie_broken = matches > 1;

    if (rho_lo_below && rho_hi_above) {
        report.case_label = CaseLabel::Case2BrMu;
    } else if (rho_lo_below && rho_hi_below) {
        report.case_label = CaseLabel::Case1CrB;
    } else if (rho_lo_above && rho_hi_above) {
        report.case_label = CaseLabel::Case4CrA;
    } else {
        report.case_label = CaseLabel::Case3BrRho;
    }

    const double lo = std::max(a, c);
    report.interval = Interval{lo, std::max(lo, std::min(b, d))};
    return report;
}

AcceptanceVerdict accepts(const MergerPair& pair, double mu_m, double rho_m, double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "r", "exchange ratio must be finite and >= 0");
    }
    if (!std::isfinite(mu_m) || mu_m <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "mu_m", "mu_m must be finite and positive");
    }
    if (!std::isfinite(rho_m) || rho_m <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "rho_m", "rho_m must be finite and positive");
    }
    const double merged_shares = pair.a.shares + r * pair.b.shares;
    const double price_m = mu_m / merged_shares;
    const double risk_m = rho_m / merged_shares;
    return {
        .a_value = price_m >= pair.a.price,
        .b_value = r * price_m >= pair.b.price,
        .a_risk = risk_m <= pair.a.risk_per_share,
        .b_risk = r * risk_m <= pair.b.risk_per_share,
    };
}

double per_share_risk_b(const MergerPair& pair, double rho_m, double r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "r", "exchange ratio must be finite and >= 0");
    }
    return r * rho_m / (pair.a.shares + r * pair.b.shares);
}

PostMergerOutcome outcome_from_synergy(const MergerPair& pair, double s, double v) {
    if (!std::isfinite(s) || s < 0.0) {
        throw Error(ErrorCode::NegativeSynergy, "s", "synergy must be non-negative, got " + num(s));
    }
    const double limit = std::min(pair.rho_a, pair.rho_b);
    if (!std::isfinite(v) || v < 0.0 || v >= limit) {
        throw Error(ErrorCode::InvalidRiskReduction, "v",
                    "risk reduction must lie in [0, min(rho_A, rho_B) = " + num(limit) +
                        "), got " + num(v));
    }
    return {pair.mu_a + pair.mu_b + s, pair.rho_a + pair.rho_b - v};
}

SynergyView synergy_from_outcome(const MergerPair& pair, const PostMergerOutcome& outcome) noexcept {
    return {outcome.mu_m - pair.mu_a - pair.mu_b, pair.rho_a + pair.rho_b - outcome.rho_m};
}

}  // namespace merger_er
