#include "merger_er/commands.hpp"

#include <algorithm>
#include <variant>

#include "analysis.hpp"

namespace merger_er {

using detail::Json;

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "svg") {
        return OutputFormat::Svg;
    }
    throw Error(ErrorCode::InvalidArgument, "format",
                "unknown format '" + std::string(name) + "', expected json, csv or svg");
}

ResolvedScenario resolve(const ScenarioFile& scenario, const CommandOptions& options) {
    ResolvedScenario out;
    out.pair = derive_pair(scenario.a, scenario.b);

    if (options.s || options.v) {
        SynergyView base;
        if (scenario.outcome) {
            if (const auto* synergy = std::get_if<SynergyView>(&*scenario.outcome)) {
                base = *synergy;
            } else {
                base = synergy_from_outcome(out.pair, std::get<PostMergerOutcome>(*scenario.outcome));
            }
        }
        base.s = options.s.value_or(base.s);
        base.v = options.v.value_or(base.v);
        out.outcome = outcome_from_synergy(out.pair, base.s, base.v);
    } else if (scenario.outcome) {
        out.outcome = resolve_outcome(scenario, out.pair);
    } else if (options.mu_m && options.rho_m) {
        out.outcome = {*options.mu_m, *options.rho_m};
    } else {
        throw Error(ErrorCode::ValidationError, "outcome",
                    "outcome: missing; give it in the file or pass both --mu-m and --rho-m");
    }
    out.outcome.mu_m = options.mu_m.value_or(out.outcome.mu_m);
    out.outcome.rho_m = options.rho_m.value_or(out.outcome.rho_m);
    return out;
}

Series run_sweep(const ScenarioFile& scenario, const CommandOptions& options) {
    const MergerPair pair = derive_pair(scenario.a, scenario.b);
    SweepSpec spec;
    if (scenario.sweep) {
        spec = *scenario.sweep;
    } else {
        const double floor = pair.mu_a + pair.mu_b;
        spec = SweepSpec{"mu_m", Interval{floor, 2.0 * floor}, kDefaultSamples};
    }
    const std::size_t n = options.samples.value_or(spec.samples);
    if (spec.parameter == "rho_m") {
        return sweep_br_rho(pair, spec.range, n);
    }
    return sweep_br_mu(pair, spec.range, n);
}

std::string cmd_analyze(const ScenarioFile& scenario, const CommandOptions& options) {
    const ResolvedScenario resolved = resolve(scenario, options);
    return detail::analysis_json(resolved, options.r_candidate).dump(2) + "\n";
}

std::string cmd_classify(const ScenarioFile& scenario, const CommandOptions& options) {
    const ResolvedScenario resolved = resolve(scenario, options);
    const RegionReport report = classify(resolved.pair, resolved.outcome.mu_m, resolved.outcome.rho_m);
    Json out;
    out["case"] = std::string(to_string(report.case_label));
    if (report.interval) {
        out["interval"] = Json::array({detail::number(report.interval->lo), detail::number(report.interval->hi)});
    }
    if (report.tie_broken) {
        out["tie_broken"] = true;
    }
    return out.dump() + "\n";
}

std::string cmd_sweep(const ScenarioFile& scenario, const CommandOptions& options) {
    const Series series = run_sweep(scenario, options);
    switch (options.format.value_or(OutputFormat::Csv)) {
        case OutputFormat::Json: return detail::series_json(series).dump(2) + "\n";
        case OutputFormat::Svg: return emit_svg(series);
        case OutputFormat::Csv: break;
    }
    return emit_csv(series);
}

std::string cmd_plot(const ScenarioFile& scenario, const CommandOptions& options) {
    const ResolvedScenario resolved = resolve(scenario, options);
    SceneOptions scene_options;
    scene_options.samples = options.samples.value_or(kDefaultSamples);
    const Scene scene = build_scene(resolved.pair, resolved.outcome.mu_m, resolved.outcome.rho_m, scene_options);
    switch (options.format.value_or(OutputFormat::Svg)) {
        case OutputFormat::Json: return detail::scene_json(scene).dump(2) + "\n";
        case OutputFormat::Csv:
            throw Error(ErrorCode::InvalidArgument, "format", "plot supports svg or json output");
        case OutputFormat::Svg: break;
    }
    return emit_svg(scene);
}

namespace {

Json locus_json(const CaseLocus& locus) {
    if (const auto* line = std::get_if<Locus>(&locus)) {
        return Json{{"type", "line"},
                    {"slope", detail::number(line->line.slope)},
                    {"intercept", detail::number(line->line.intercept)},
                    {"param_range", detail::interval_json(line->param_range)},
                    {"unbounded_above", line->unbounded_above}};
    }
    if (const auto* arc = std::get_if<HyperbolaArc>(&locus)) {
        return Json{{"type", "arc"},
                    {"curve", std::string(to_string(arc->kind))},
                    {"param_range", detail::interval_json(arc->param_range)},
                    {"lower_open", arc->lower_open},
                    {"unbounded_above", arc->unbounded_above}};
    }
    return Json{{"type", "point"}, {"point", detail::point_json(std::get<KulpaPoint>(locus))}};
}

}  // namespace

std::string cmd_locus(const ScenarioFile& scenario, const CommandOptions& options) {
    const ResolvedScenario resolved = resolve(scenario, options);
    const MergerPair& pair = resolved.pair;
    const bool fixed_rho = options.fixed == FixedParameter::Rho;
    const double fixed_value = fixed_rho ? resolved.outcome.rho_m : resolved.outcome.mu_m;

    CaseLabel label = options.case_label.value_or(
        classify(pair, resolved.outcome.mu_m, resolved.outcome.rho_m).case_label);

    Json out;
    out["fixed"] = fixed_rho ? "rho_m" : "mu_m";
    out["fixed_value"] = detail::number(fixed_value);
    out["case"] = std::string(to_string(label));
    if (is_nonempty_case(label)) {
        out["locus"] = locus_json(fixed_rho ? locus_fixed_rho(pair, fixed_value, label)
                                            : locus_fixed_mu(pair, fixed_value, label));
    } else if (options.case_label) {
        throw Error(ErrorCode::InvalidCase, "case",
                    "case " + std::string(to_string(label)) + " has no locus");
    } else {
        out["locus"] = nullptr;
    }
    Json ranges;
    for (const CaseLabel each : {CaseLabel::Case1CrB, CaseLabel::Case2BrMu, CaseLabel::Case3BrRho,
                                 CaseLabel::Case4CrA}) {
        const CaseRange range = fixed_rho ? case_mu_range(pair, fixed_value, each)
                                          : case_rho_range(pair, fixed_value, each);
        ranges[std::string(to_string(each))] = detail::case_range_json(range, options.fixed);
    }
    out["ranges"] = std::move(ranges);
    return out.dump(2) + "\n";
}

std::string error_report(const Error& error) { return detail::error_json(error).dump() + "\n"; }

int exit_code_for(const Error& error) noexcept { return is_admissibility_error(error.code()) ? 2 : 1; }

}  // namespace merger_er
