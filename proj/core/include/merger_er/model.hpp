#pragma once

#include <optional>
#include <string_view>

#include "merger_er/interval.hpp"

namespace merger_er {

/// Absolute tolerance for endpoint comparisons on the exchange-ratio scale.
inline constexpr double kDefaultEpsilon = 1e-12;

/// Pre-merger inputs of one company. All fields must be strictly positive.
struct CompanyProfile {
    double price = 0.0;           // expected price per share
    double shares = 0.0;          // outstanding shares
    double risk_per_share = 0.0;  // coherent risk measure of one share, in currency
};

/// The (A, B) pair plus the aggregates every bound is written in.
/// A is the acquirer; B's shareholders receive r shares of M per share of B.
struct MergerPair {
    CompanyProfile a;
    CompanyProfile b;
    double mu_a = 0.0;         // expected equity value p_A * N_A
    double mu_b = 0.0;
    double rho_a = 0.0;        // equity risk phi_A * N_A
    double rho_b = 0.0;
    double r_star = 0.0;       // p_B / p_A
    double r_star_star = 0.0;  // phi_B / phi_A
    double lambda_a = 0.0;     // risk-corrected performance p_A / phi_A
    double lambda_b = 0.0;
};

/// Throws Error(InvalidProfile) with path "a.price", "b.risk_per_share", ...
/// for any non-positive or non-finite input.
MergerPair derive_pair(const CompanyProfile& a, const CompanyProfile& b);

/// Expected value and risk of the merged company M.
struct PostMergerOutcome {
    double mu_m = 0.0;
    double rho_m = 0.0;
};

/// The same outcome expressed as expected synergy s and risk reduction v.
struct SynergyView {
    double s = 0.0;
    double v = 0.0;
};

struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Exchange-ratio bounds from the expected-value criteria:
/// upper = r*(mu_M - mu_A)/mu_B keeps A's price from falling,
/// lower = r* mu_A/(mu_M - mu_B) keeps B's holding from falling.
/// Requires mu_m > max(mu_A, mu_B).
Bounds mu_bounds(const MergerPair& pair, double mu_m);

/// Exchange-ratio bounds from the risk criteria:
/// lower = r**(rho_M - rho_A)/rho_B keeps A's per-share risk from rising,
/// upper = r** rho_A/(rho_M - rho_B) keeps B's holding risk from rising.
/// Requires rho_m > max(rho_A, rho_B).
Bounds rho_bounds(const MergerPair& pair, double rho_m);

/// Bargaining region on expected value. Requires mu_m >= mu_A + mu_B
/// (NegativeSynergy otherwise); collapses to {r*} at equality.
Interval br_mu(const MergerPair& pair, double mu_m);

/// Bargaining region on risk. Requires max(rho_A, rho_B) < rho_m <= rho_A + rho_B;
/// collapses to {r**} at the upper end.
Interval br_rho(const MergerPair& pair, double rho_m);

/// Consistency region of A's shareholders: [lower rho bound, upper mu bound].
std::optional<Interval> cr_a(const MergerPair& pair, double mu_m, double rho_m,
                             double eps = kDefaultEpsilon);
/// Consistency region of B's shareholders: [lower mu bound, upper rho bound].
std::optional<Interval> cr_b(const MergerPair& pair, double mu_m, double rho_m,
                             double eps = kDefaultEpsilon);

struct SynergyThreshold {
    double raw = 0.0;      // may be negative
    double clamped = 0.0;  // max(0, raw): negative means no synergy is needed
};

/// Minimum synergy making CR_A non-empty at risk reduction v, 0 <= v < rho_B.
SynergyThreshold min_synergy_a(const MergerPair& pair, double v);
/// Minimum synergy making CR_B non-empty at risk reduction v, 0 <= v < rho_A.
SynergyThreshold min_synergy_b(const MergerPair& pair, double v);

struct RiskAdjustedPerformance {
    double lambda_m = 0.0;
    bool at_least_a = false;  // lambda_M >= lambda_A
    bool at_least_b = false;  // lambda_M >= lambda_B
};

/// lambda_M = (mu_A + mu_B + s)/(rho_A + rho_B - v).
RiskAdjustedPerformance lambda_m(const MergerPair& pair, double s, double v);

enum class CaseLabel {
    Case1CrB,
    Case2BrMu,
    Case3BrRho,
    Case4CrA,
    EmptyRhoBelowMu,
    EmptyMuBelowRho,
};

std::string_view to_string(CaseLabel label) noexcept;
/// Throws Error(InvalidCase) for unknown names.
CaseLabel parse_case_label(std::string_view name);
bool is_nonempty_case(CaseLabel label) noexcept;

struct RegionReport {
    CaseLabel case_label = CaseLabel::EmptyMuBelowRho;
    std::optional<Interval> interval;  // br_mu ∩ br_rho, present for Cases 1-4
    Interval br_mu;
    Interval br_rho;
    bool tie_broken = false;  // several cases matched within eps; see classify
};

/// Classifies br_mu(mu_m) ∩ br_rho(rho_m) by endpoint ordering. With
/// br_mu = [a, b] and br_rho = [c, d] (comparisons within eps):
///   d < a -> EmptyRhoBelowMu, b < c -> EmptyMuBelowRho,
///   c <= a, d >= b -> Case2BrMu   c <= a, d <= b -> Case1CrB
///   c >= a, d >= b -> Case4CrA    c >= a, d <= b -> Case3BrRho
/// tried in that priority order, so ties resolve Case2 > Case1 > Case4 > Case3.
RegionReport classify(const MergerPair& pair, double mu_m, double rho_m,
                      double eps = kDefaultEpsilon);

/// The four acceptance inequalities evaluated directly at exchange ratio r.
struct AcceptanceVerdict {
    bool a_value = false;  // p_M >= p_A
    bool b_value = false;  // r p_M >= p_B
    bool a_risk = false;   // phi_M <= phi_A
    bool b_risk = false;   // r phi_M <= phi_B

    bool all() const noexcept { return a_value && b_value && a_risk && b_risk; }
    friend bool operator==(const AcceptanceVerdict&, const AcceptanceVerdict&) = default;
};

AcceptanceVerdict accepts(const MergerPair& pair, double mu_m, double rho_m, double r);

/// Risk carried by B's former shareholders per original B share, r rho_M/(N_A + r N_B).
/// Strictly increasing in r with limit rho_M/N_B.
double per_share_risk_b(const MergerPair& pair, double rho_m, double r);

/// (mu_A + mu_B + s, rho_A + rho_B - v). Requires s >= 0 and 0 <= v < min(rho_A, rho_B).
PostMergerOutcome outcome_from_synergy(const MergerPair& pair, double s, double v);

/// Inverse of outcome_from_synergy; no validation, values may be negative.
SynergyView synergy_from_outcome(const MergerPair& pair, const PostMergerOutcome& outcome) noexcept;

/// Throws the same errors br_mu / br_rho would for this outcome.
void check_admissible(const MergerPair& pair, double mu_m, double rho_m);

}  // namespace merger_er
