#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <locale>
#include <string>

#include "merger_er/error.hpp"
#include "merger_er/sweep.hpp"
#include "oracles.hpp"

namespace {

using namespace merger_er;

const MergerPair kPair = oracle::caption_pair();

TEST(Sweep, MuSeriesMatchesClosedForms) {
    const Series s = sweep_br_mu(kPair, {100.0, 200.0}, 101);
    ASSERT_EQ(s.points.size(), 101u);
    EXPECT_EQ(s.points.front().parameter, 100.0);
    EXPECT_EQ(s.points.back().parameter, 200.0);
    for (const SeriesSample& p : s.points) {
        // Per-share derivation: B accepts when r mu_M/(N_A + r N_B) >= p_B, A when mu_M/(N_A + r N_B) >= p_A.
        const double lower = 2.0 * 20.0 / (p.parameter - 2.0 * 10.0);
        const double upper = (p.parameter / 4.0 - 20.0) / 10.0;
        EXPECT_TRUE(oracle::rel_close(p.low, lower, 1e-12)) << p.parameter;
        EXPECT_TRUE(oracle::rel_close(p.high, upper, 1e-12)) << p.parameter;
    }
    EXPECT_EQ(s.points.front().low, 0.5);
    EXPECT_EQ(s.points.front().high, 0.5);
}

TEST(Sweep, ThreeSampleFigureEnvelope) {
    const Series s = sweep_br_mu(kPair, {100.0, 200.0}, 3);
    ASSERT_EQ(s.points.size(), 3u);
    EXPECT_EQ(s.points[1].parameter, 150.0);
    EXPECT_NEAR(s.points[1].low, 40.0 / 130.0, 1e-15);
    EXPECT_NEAR(s.points[1].high, 1.75, 1e-15);
    EXPECT_NEAR(s.points[2].low, 40.0 / 180.0, 1e-15);
    EXPECT_NEAR(s.points[2].high, 3.0, 1e-15);
}

TEST(Sweep, RhoSeriesOpenLowerEnd) {
    const Series s = sweep_br_rho(kPair, {80.0, 110.0}, 7);
    ASSERT_EQ(s.points.size(), 7u);
    EXPECT_DOUBLE_EQ(s.points.front().parameter, 82.5);  // half a step inside the open end
    EXPECT_EQ(s.points.back().parameter, 110.0);
    for (const SeriesSample& p : s.points) {
        // Risk acceptance: phi_M = rho_M/(N_A + r N_B) <= phi_A  <=>  r >= (rho_M/phi_A - N_A)/N_B.
        const double a_risk = (p.parameter / 4.0 - 20.0) / 10.0;
        // r phi_M <= phi_B  <=>  r <= phi_B N_A / (rho_M - phi_B N_B).
        const double b_risk = 3.0 * 20.0 / (p.parameter - 3.0 * 10.0);
        EXPECT_TRUE(oracle::rel_close(p.low, a_risk, 1e-12)) << p.parameter;
        EXPECT_TRUE(oracle::rel_close(p.high, b_risk, 1e-12)) << p.parameter;
    }
}

TEST(Sweep, Errors) {
    EXPECT_THROW(sweep_br_mu(kPair, {100.0, 200.0}, 1), Error);
    try {
        sweep_br_mu(kPair, {90.0, 200.0}, 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Inadmissible);
    }
    EXPECT_THROW(sweep_br_rho(kPair, {85.0, 120.0}, 10), Error);
}

TEST(Scene, MarkersMatchModel) {
    const Scene scene = build_scene(kPair, 120.0, 94.0);
    const RegionReport report = classify(kPair, 120.0, 94.0);
    auto marker = [&](const std::string& label) -> KulpaPoint {
        for (const Marker& m : scene.markers) {
            if (m.label == label) {
                return m.point;
            }
        }
        ADD_FAILURE() << "missing marker " << label;
        return {};
    };
    EXPECT_EQ(marker("P_mu"), to_point(report.br_mu));
    EXPECT_EQ(marker("P_rho"), to_point(report.br_rho));
    EXPECT_EQ(marker("result"), to_point(*report.interval));
    EXPECT_EQ(marker("r*"), (KulpaPoint{0.5, 0.0}));
    EXPECT_EQ(marker("r**"), (KulpaPoint{0.75, 0.0}));
    ASSERT_TRUE(scene.result_segment);
    EXPECT_EQ((*scene.result_segment)[0], (KulpaPoint{0.4, 0.0}));
    EXPECT_EQ((*scene.result_segment)[1], (KulpaPoint{0.9375, 0.0}));
    EXPECT_EQ(scene.report.case_label, CaseLabel::Case1CrB);
}

TEST(Scene, CurvesSatisfyTheirEquations) {
    const Scene scene = build_scene(kPair, 112.0, 99.0);
    const Hyperbola g = gamma(kPair);
    const Hyperbola d = delta(kPair);
    int seen = 0;
    for (const Polyline& curve : scene.curves) {
        ASSERT_GE(curve.points.size(), 2u) << curve.label;
        for (const KulpaPoint& p : curve.points) {
            if (curve.role == CurveRole::GammaBranch) {
                EXPECT_LT(std::abs(g.residual(p)), 1e-9) << curve.label;
            } else if (curve.role == CurveRole::DeltaBranch) {
                EXPECT_LT(std::abs(d.residual(p)), 1e-9) << curve.label;
            } else if (const auto* line = std::get_if<Line>(&curve.source)) {
                EXPECT_LT(std::abs(line->residual(p)), 1e-9) << curve.label;
            }
        }
        ++seen;
    }
    EXPECT_GE(seen, 7);
}

TEST(Scene, EmptyCaseHasNoSegment) {
    const Scene scene = build_scene(kPair, 104.0, 106.0);
    EXPECT_FALSE(scene.result_segment);
    const std::string svg = emit_svg(scene);
    EXPECT_NE(svg.find("empty"), std::string::npos);
}

// A numpunct facet with a comma decimal separator, to check emitters ignore the global locale.
struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
    char do_thousands_sep() const override { return '.'; }
    std::string do_grouping() const override { return "\3"; }
};

TEST(Emit, DeterministicAndLocaleIndependent) {
    const Scene scene = build_scene(kPair, 120.0, 94.0);
    const Series series = sweep_br_mu(kPair, {100.0, 200.0}, 11);
    const std::string svg1 = emit_svg(scene);
    const std::string csv1 = emit_csv(series);
    const std::string chart1 = emit_svg(series);

    const std::locale previous = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
    const std::string svg2 = emit_svg(build_scene(kPair, 120.0, 94.0));
    const std::string csv2 = emit_csv(series);
    const std::string chart2 = emit_svg(series);
    std::locale::global(previous);

    EXPECT_EQ(svg1, svg2);
    EXPECT_EQ(csv1, csv2);
    EXPECT_EQ(chart1, chart2);
    EXPECT_EQ(svg1.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg1.find("</svg>"), std::string::npos);
}

TEST(Emit, CsvShape) {
    const std::string csv = emit_csv(sweep_br_mu(kPair, {100.0, 200.0}, 3));
    EXPECT_EQ(csv, "mu_m,r_lower,r_upper\r\n"
                   "100,0.5,0.5\r\n"
                   "150,0.307692308,1.75\r\n"
                   "200,0.222222222,3\r\n");
}

}  // namespace
