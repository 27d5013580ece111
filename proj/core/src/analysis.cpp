#include "analysis.hpp"

#include <algorithm>
#include <cmath>

namespace merger_er::detail {

namespace {

Json optional_interval(const std::optional<Interval>& i) {
    return i ? interval_json(*i) : Json(nullptr);
}

Json threshold_json(const SynergyThreshold& t) {
    return Json{{"raw", number(t.raw)}, {"clamped", number(t.clamped)}};
}

}  // namespace

Json analysis_json(const ResolvedScenario& resolved, std::optional<double> r_candidate) {
    const MergerPair& pair = resolved.pair;
    const double mu_m = resolved.outcome.mu_m;
    const double rho_m = resolved.outcome.rho_m;

    const RegionReport report = classify(pair, mu_m, rho_m);
    const SynergyView synergy = synergy_from_outcome(pair, resolved.outcome);
    const RiskAdjustedPerformance performance = lambda_m(pair, synergy.s, synergy.v);
    const Hyperbola gamma_curve = gamma(pair);
    const Hyperbola delta_curve = delta(pair);

    Json out;
    out["case"] = std::string(to_string(report.case_label));
    out["interval"] = optional_interval(report.interval);
    out["tie_broken"] = report.tie_broken;
    out["br_mu"] = interval_json(report.br_mu);
    out["br_rho"] = interval_json(report.br_rho);
    out["cr_a"] = optional_interval(cr_a(pair, mu_m, rho_m));
    out["cr_b"] = optional_interval(cr_b(pair, mu_m, rho_m));
    out["pair"] = Json{{"mu_a", number(pair.mu_a)},
                       {"mu_b", number(pair.mu_b)},
                       {"rho_a", number(pair.rho_a)},
                       {"rho_b", number(pair.rho_b)},
                       {"r_star", number(pair.r_star)},
                       {"r_star_star", number(pair.r_star_star)},
                       {"lambda_a", number(pair.lambda_a)},
                       {"lambda_b", number(pair.lambda_b)}};
    out["outcome"] = Json{{"mu_m", number(mu_m)},
                          {"rho_m", number(rho_m)},
                          {"s", number(synergy.s)},
                          {"v", number(synergy.v)}};
    out["lambda_m"] = Json{{"value", number(performance.lambda_m)},
                           {"at_least_a", performance.at_least_a},
                           {"at_least_b", performance.at_least_b}};
    out["synergy_thresholds"] = Json{{"a", threshold_json(min_synergy_a(pair, synergy.v))},
                                     {"b", threshold_json(min_synergy_b(pair, synergy.v))}};
    out["kulpa"] = Json{{"p_mu", point_json(to_point(report.br_mu))},
                        {"p_rho", point_json(to_point(report.br_rho))},
                        {"result", report.interval ? point_json(to_point(*report.interval)) : Json(nullptr)}};
    out["hyperbolas"] = Json::object();
    for (const Hyperbola* h : {&gamma_curve, &delta_curve}) {
        Json asymptotes = Json::array();
        for (const Line& line : h->asymptotes) {
            asymptotes.push_back(Json{{"slope", number(line.slope)}, {"intercept", number(line.intercept)}});
        }
        out["hyperbolas"][std::string(to_string(h->kind))] =
            Json{{"coeff_linear", number(h->coeff_linear)},
                 {"coeff_const", number(h->coeff_const)},
                 {"vertices", Json::array({point_json(h->vertices[0]), point_json(h->vertices[1])})},
                 {"asymptotes", std::move(asymptotes)},
                 {"eccentricity", number(h->eccentricity)}};
    }

    Json warnings = Json::array();
    for (const Hyperbola* h : {&gamma_curve, &delta_curve}) {
        if (h->warning) {
            warnings.push_back(*h->warning);
        }
    }
    out["warnings"] = std::move(warnings);

    if (r_candidate) {
        const double r = *r_candidate;
        const AcceptanceVerdict verdict = accepts(pair, mu_m, rho_m, r);
        Json distance = nullptr;
        if (report.interval) {
            const Interval& i = *report.interval;
            distance = number(std::min(std::abs(r - i.lo), std::abs(r - i.hi)));
        }
        out["verdict"] = Json{{"r", number(r)},
                              {"a_value", verdict.a_value},
                              {"b_value", verdict.b_value},
                              {"a_risk", verdict.a_risk},
                              {"b_risk", verdict.b_risk},
                              {"all", verdict.all()},
                              {"inside_interval", report.interval.has_value() && report.interval->contains(r)},
                              {"nearest_endpoint_distance", distance}};
    }
    return out;
}

Json scene_json(const Scene& scene) {
    Json curves = Json::array();
    for (const Polyline& curve : scene.curves) {
        Json points = Json::array();
        for (const KulpaPoint& p : curve.points) {
            points.push_back(point_json(p));
        }
        curves.push_back(Json{{"label", curve.label},
                              {"role", std::string(to_string(curve.role))},
                              {"points", std::move(points)}});
    }
    Json markers = Json::array();
    for (const Marker& m : scene.markers) {
        markers.push_back(Json{{"label", m.label}, {"point", point_json(m.point)}});
    }
    Json out;
    out["curves"] = std::move(curves);
    out["markers"] = std::move(markers);
    out["result_segment"] =
        scene.result_segment
            ? Json::array({point_json((*scene.result_segment)[0]), point_json((*scene.result_segment)[1])})
            : Json(nullptr);
    out["annotations"] = scene.annotations;
    out["frame"] = Json{{"x_min", number(scene.frame.x_min)},
                        {"x_max", number(scene.frame.x_max)},
                        {"y_min", number(scene.frame.y_min)},
                        {"y_max", number(scene.frame.y_max)}};
    return out;
}

Json series_json(const Series& series) {
    Json points = Json::array();
    for (const SeriesSample& s : series.points) {
        points.push_back(Json::array({number(s.parameter), number(s.low), number(s.high)}));
    }
    return Json{{"name", series.name}, {"parameter", series.parameter_name}, {"points", std::move(points)}};
}

Json case_range_json(const CaseRange& range, FixedParameter fixed) {
    Json out;
    out["range"] = range.range ? interval_json(*range.range) : Json(nullptr);
    out["lower_open"] = range.lower_open;
    out["unbounded_above"] = range.unbounded_above;
    out[fixed == FixedParameter::Rho ? "synergy" : "risk_reduction"] =
        range.alternate ? interval_json(*range.alternate) : Json(nullptr);
    return out;
}

}  // namespace merger_er::detail
