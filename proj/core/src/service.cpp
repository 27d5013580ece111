#include "merger_er/service.hpp"

#include <cmath>

#include "analysis.hpp"
#include "merger_er/commands.hpp"
#include "merger_er/scenario.hpp"

namespace merger_er {

using detail::Json;

namespace {

int status_for(ErrorCode code) {
    if (is_admissibility_error(code)) {
        return 422;
    }
    return code == ErrorCode::EncodingFailure ? 500 : 400;
}

HttpReply error_reply(const Error& e) { return {status_for(e.code()), detail::error_json(e).dump()}; }

Json parse_body(std::string_view body) {
    try {
        Json root = Json::parse(body.begin(), body.end());
        if (!root.is_object()) {
            throw Error(ErrorCode::ValidationError, "$", "$: expected an object");
        }
        return root;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "", std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

HttpReply handle_analyze(std::string_view body) {
    try {
        const Json root = parse_body(body);
        const ScenarioFile scenario = parse_scenario(body);

        CommandOptions options;
        if (const auto it = root.find("r_candidate"); it != root.end() && !it->is_null()) {
            if (!it->is_number() || !std::isfinite(it->get<double>()) || it->get<double>() < 0.0) {
                throw Error(ErrorCode::ValidationError, "r_candidate",
                            "r_candidate: expected a finite number >= 0");
            }
            options.r_candidate = it->get<double>();
        }
        SceneOptions scene_options;
        if (const auto it = root.find("samples"); it != root.end()) {
            if (!it->is_number_integer() || it->get<long long>() < 2 || it->get<long long>() > 100000) {
                throw Error(ErrorCode::ValidationError, "samples", "samples: expected an integer in [2, 100000]");
            }
            scene_options.samples = static_cast<std::size_t>(it->get<long long>());
        }

        const ResolvedScenario resolved = resolve(scenario, options);
        Json out = detail::analysis_json(resolved, options.r_candidate);
        out["scene"] = detail::scene_json(
            build_scene(resolved.pair, resolved.outcome.mu_m, resolved.outcome.rho_m, scene_options));
        return {200, out.dump()};
    } catch (const Error& e) {
        return error_reply(e);
    }
}

HttpReply handle_sweep(std::string_view body) {
    try {
        Json root = parse_body(body);
        if (!root.contains("sweep") && root.contains("parameter")) {
            Json sweep;
            for (const char* key : {"parameter", "range", "samples"}) {
                if (root.contains(key)) {
                    sweep[key] = root[key];
                }
            }
            root["sweep"] = std::move(sweep);
        }
        if (!root.contains("sweep")) {
            throw Error(ErrorCode::ValidationError, "sweep", "sweep: missing required field");
        }
        const ScenarioFile scenario = parse_scenario(root.dump(), ParseOptions{.require_outcome = false});
        return {200, detail::series_json(run_sweep(scenario, {})).dump()};
    } catch (const Error& e) {
        return error_reply(e);
    }
}

HttpReply handle_health() { return {200, Json{{"status", "ok"}, {"api", "v1"}}.dump()}; }

}  // namespace merger_er
