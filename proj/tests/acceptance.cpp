// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "merger_er/kulpa.hpp"
#include "merger_er/model.hpp"
#include "oracles.hpp"

namespace {

using namespace merger_er;

constexpr double kTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool condition, const std::string& what) {
        if (!condition && pass) {
            detail << what << "; ";
        }
        pass = pass && condition;
    }
};

bool close(double got, double want) { return oracle::rel_close(got, want, kTol); }

void anchor(Outcome& o) {
    const MergerPair pair = derive_pair({4, 20, 4}, {2, 10, 3});
    o.check(pair.r_star == 0.5, "r* != 0.5");
    const Interval region = br_mu(pair, 100.0);
    o.check(region.lo == 0.5 && region.hi == 0.5, "BR_mu(100) is not {0.5}");
    o.detail << "r*=" << pair.r_star << ", BR_mu(100)=[" << region.lo << ", " << region.hi << "]";
}

void hyperbola_geometry(Outcome& o) {
    const Hyperbola g = gamma(oracle::caption_pair());
    const KulpaPoint v1 = g.vertices[0];
    const KulpaPoint v2 = g.vertices[1];
    o.check(close(v1.x, -1.75) && close(v1.y, -0.75), "vertex (-1.75, -0.75) mismatch");
    o.check(close(v2.x, 0.25) && close(v2.y, -0.75), "vertex (0.25, -0.75) mismatch");
    o.check(g.asymptotes[1].slope == -1.0 && close(g.asymptotes[1].intercept, -1.5),
            "downward asymptote is not y = -x - 1.5");
    const double r1 = std::abs(g.residual(v1));
    const double r2 = std::abs(g.residual(v2));
    o.check(r1 < kTol && r2 < kTol, "vertex residual too large");
    o.detail << "V1=(" << v1.x << ", " << v1.y << "), V2=(" << v2.x << ", " << v2.y << "), asymptote y=-x"
             << g.asymptotes[1].intercept << ", residuals " << r1 << ", " << r2;
}

void case_reproduction(Outcome& o) {
    const MergerPair pair = oracle::caption_pair();
    o.check(pair.r_star_star == 0.75, "r** != 0.75");
    struct Row {
        double mu_m;
        double rho_m;
        CaseLabel label;
    };
    const Row rows[] = {{120, 94, CaseLabel::Case1CrB},
                        {120, 86, CaseLabel::Case2BrMu},
                        {120, 98, CaseLabel::Case3BrRho},
                        {112, 99, CaseLabel::Case4CrA},
                        {104, 106, CaseLabel::EmptyMuBelowRho}};
    for (const Row& row : rows) {
        const CaseLabel got = classify(pair, row.mu_m, row.rho_m).case_label;
        o.check(got == row.label, "(" + std::to_string(row.mu_m) + ", " + std::to_string(row.rho_m) +
                                      ") classified as " + std::string(to_string(got)));
    }
    o.detail << "5/5 figure scenarios checked";
}

void oracle_equivalence(Outcome& o) {
    const MergerPair pair = oracle::caption_pair();
    std::mt19937_64 rng(4);
    const double step = 1e-4;
    int nonempty = 0;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto [mu_m, rho_m] = oracle::random_outcome(pair, rng);
        const RegionReport report = classify(pair, mu_m, rho_m);
        const oracle::Scan scan =
            oracle::scan_acceptance(oracle::kCaptionA, oracle::kCaptionB, mu_m, rho_m, 0.0, 5.0, step);
        o.check(scan.contiguous, "accepted set is not contiguous");
        if (!report.interval) {
            o.check(!scan.accepted, "grid accepts r where classify reports empty");
            continue;
        }
        const Interval& in = *report.interval;
        if (!scan.accepted) {
            o.check(in.width() < step, "grid accepts nothing inside a non-degenerate interval");
            continue;
        }
        ++nonempty;
        const double d_lo = std::abs(scan.accepted->first - in.lo);
        const double d_hi = std::abs(scan.accepted->second - std::min(in.hi, 5.0));
        worst = std::max({worst, d_lo, d_hi});
        o.check(d_lo <= step && d_hi <= step, "endpoint off by more than one grid step");
    }
    o.detail << "100 scenarios (" << nonempty << " non-empty), worst endpoint gap " << worst;
}

void kulpa_homomorphism(Outcome& o) {
    // Exactness is checked on random intervals with dyadic endpoints, where midpoint and radius
    // are representable; arbitrary doubles are checked at the suite tolerance and reported.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> grid(-(1 << 20), 1 << 20);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    auto dyadic = [&] { return grid(rng) / 65536.0; };
    auto ordered = [](double p, double q) { return Interval{std::min(p, q), std::max(p, q)}; };
    int agree = 0;
    int general_exact = 0;
    double general_worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Interval a = ordered(dyadic(), dyadic());
        const Interval b = i % 10 == 0 ? ordered(a.hi, dyadic()) : ordered(dyadic(), dyadic());  // every tenth touches
        const auto direct = intersect(a, b);
        const auto points = intersect_points(to_point(a), to_point(b));
        const bool same = direct.has_value() == points.has_value() && (!direct || to_interval(*points) == *direct);
        o.check(same, "intersection mismatch");
        agree += same ? 1 : 0;
        o.check(to_interval(to_point(a)) == a, "interval round trip not exact");
        const KulpaPoint p{dyadic(), std::abs(dyadic())};
        o.check(to_point(to_interval(p)) == p, "point round trip not exact");

        const Interval ga = ordered(u(rng), u(rng));
        const Interval gb = ordered(u(rng), u(rng));
        const auto gd = intersect(ga, gb);
        const auto gp = intersect_points(to_point(ga), to_point(gb));
        if (gd && gp) {
            const Interval back = to_interval(*gp);
            const double err = std::max(std::abs(back.lo - gd->lo), std::abs(back.hi - gd->hi));
            general_worst = std::max(general_worst, err);
            general_exact += back == *gd ? 1 : 0;
            o.check(err <= kTol * std::max(1.0, std::abs(gd->hi) + std::abs(gd->lo)), "general intersection off");
        } else if (gd.has_value() != gp.has_value()) {
            // Emptiness may only flip when the intervals touch to within rounding.
            const double gap = std::max(ga.lo, gb.lo) - std::min(ga.hi, gb.hi);
            o.check(std::abs(gap) <= 1e-14, "general intersection emptiness mismatch");
        } else {
            ++general_exact;
        }
    }
    o.detail << agree << "/10000 dyadic intersections agree exactly; round trips exact; arbitrary doubles: "
             << general_exact << "/10000 bit-exact, worst deviation " << general_worst;
}

void appendix4(Outcome& o) {
    const MergerPair pair = oracle::caption_pair();
    std::mt19937_64 rng(6);
    int operations = 0;
    long interior = 0;
    long exterior = 0;
    for (const FixedParameter fixed : {FixedParameter::Rho, FixedParameter::Mu}) {
        for (const CaseLabel label : {CaseLabel::Case1CrB, CaseLabel::Case2BrMu, CaseLabel::Case3BrRho,
                                      CaseLabel::Case4CrA}) {
            ++operations;
            for (int i = 0; i < 100; ++i) {
                const auto [mu_m, rho_m] = oracle::random_outcome(pair, rng, 2.0);
                const bool fix_rho = fixed == FixedParameter::Rho;
                const double value = fix_rho ? rho_m : mu_m;
                const CaseRange range =
                    fix_rho ? case_mu_range(pair, value, label) : case_rho_range(pair, value, label);
                auto label_at = [&](double free) {
                    return fix_rho ? classify(pair, free, value).case_label
                                   : classify(pair, value, free).case_label;
                };
                const double free_lo = fix_rho ? 100.0 : 80.0;
                const double free_hi = fix_rho ? 1000.0 : 110.0;
                const std::string where = std::string(to_string(label)) + (fix_rho ? " rho=" : " mu=") +
                                          std::to_string(value);
                if (!range.range) {
                    for (int k = 1; k < 100; ++k) {
                        const double free = free_lo + (free_hi - free_lo) * k / 100.0;
                        o.check(label_at(free) != label, "unattainable case reached at " + where);
                        ++exterior;
                    }
                    continue;
                }
                const double lo = range.range->lo;
                const double hi = std::min(range.range->hi, free_hi);
                for (int k = 1; k < 10 && lo < hi; ++k) {
                    o.check(label_at(lo + (hi - lo) * k / 10.0) == label, "interior sample misclassified at " + where);
                    ++interior;
                }
                const double off_lo = 1e-7 * std::max(1.0, std::abs(lo));
                if (!range.lower_open && lo - off_lo > free_lo) {
                    o.check(label_at(lo - off_lo) != label, "sample below range still in case at " + where);
                    ++exterior;
                }
                if (!range.unbounded_above) {
                    const double end = range.range->hi;
                    const double off_hi = 1e-7 * std::max(1.0, std::abs(end));
                    if (end + off_hi <= free_hi) {
                        o.check(label_at(end + off_hi) != label, "sample above range still in case at " + where);
                        ++exterior;
                    }
                }
            }
        }
    }
    o.detail << operations << " operations x 100 fixed values; " << interior << " interior and " << exterior
             << " exterior samples";
}

void appendix13(Outcome& o) {
    const MergerPair pair = oracle::caption_pair();
    double prev = -1.0;
    for (double r = 0.0; r <= 100.0; r += 0.01) {
        const double v = per_share_risk_b(pair, 94.0, r);
        o.check(v > prev, "per-share risk of B not strictly increasing");
        prev = v;
    }
    const double limit = 94.0 / 10.0;
    const double far = per_share_risk_b(pair, 94.0, 1e6);
    o.check(std::abs(far - limit) < 1e-3, "per-share risk of B does not approach rho_M/N_B");

    std::mt19937_64 rng(7);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const MergerPair p = derive_pair(oracle::random_company(rng), oracle::random_company(rng));
        if ((p.lambda_a > p.lambda_b) != (p.r_star_star > p.r_star)) {
            ++mismatches;
        }
    }
    o.check(mismatches == 0, "lambda ordering disagrees with r** > r*");

    int cr_checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const MergerPair p = derive_pair(oracle::random_company(rng), oracle::random_company(rng));
        const auto [mu_m, rho_m] = oracle::random_outcome(p, rng, 3.0);
        const SynergyView sv = synergy_from_outcome(p, {mu_m, rho_m});
        // Risk-adjusted performance of the merged company against each party.
        const double lm = (p.mu_a + p.mu_b + sv.s) / (p.rho_a + p.rho_b - sv.v);
        if (std::abs(lm - p.lambda_a) < 1e-9 * p.lambda_a || std::abs(lm - p.lambda_b) < 1e-9 * p.lambda_b) {
            continue;
        }
        ++cr_checked;
        o.check(cr_a(p, mu_m, rho_m).has_value() == (lm >= p.lambda_a), "CR_A non-emptiness != lambda_M >= lambda_A");
        o.check(cr_b(p, mu_m, rho_m).has_value() == (lm >= p.lambda_b), "CR_B non-emptiness != lambda_M >= lambda_B");
    }
    o.detail << "risk at r=1e6 is " << far << " vs limit " << limit << "; " << mismatches
             << " lambda-ordering mismatches in 10000; " << cr_checked << " CR checks";
}

void golden_outputs(Outcome& o) {
    int compared = 0;
    for (const char* figure : {"paper_fig5a", "paper_fig5b", "paper_fig5c", "paper_fig5d", "paper_fig5e"}) {
        for (const auto& [command, ext] : {std::pair{"classify", "json"}, {"analyze", "json"}, {"plot", "svg"}}) {
            const std::string input = cli::fixture(std::string(figure) + ".json");
            const std::string golden_path = cli::golden(std::string(command) + "_" + figure + "." + ext);
            const std::string expected = cli::read_file(golden_path);
            const cli::Result first = cli::run(std::string(command) + " '" + input + "'");
            const cli::Result second = cli::run(std::string(command) + " '" + input + "'");
            o.check(!expected.empty(), "missing golden " + golden_path);
            o.check(first.exit_code == 0, std::string(command) + " failed on " + figure);
            o.check(first.out == expected, std::string(command) + " output differs from golden for " + figure);
            o.check(first.out == second.out, std::string(command) + " not byte-stable on " + figure);
            ++compared;
        }
    }
    o.detail << compared << " outputs compared byte-for-byte";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"deterministic anchor r* = 0.5, BR_mu(100) = {0.5}", anchor},
        {"gamma vertices and asymptote", hyperbola_geometry},
        {"five figure scenarios classified", case_reproduction},
        {"grid-scan acceptance oracle matches classify", oracle_equivalence},
        {"Kulpa map intersection homomorphism and round trips", kulpa_homomorphism},
        {"case ranges consistent with classify", appendix4},
        {"per-share risk, lambda ordering, CR criteria", appendix13},
        {"golden CLI outputs byte-stable", golden_outputs},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(outcome);
        } catch (const std::exception& e) {
            outcome.check(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.check(seconds < 10.0, "took longer than 10 s");
        failures += outcome.pass ? 0 : 1;
        std::printf("criterion %zu: %s - %s (%s; %.2fs)\n", i + 1, outcome.pass ? "PASS" : "FAIL",
                    criteria[i].first.c_str(), outcome.detail.str().c_str(), seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
