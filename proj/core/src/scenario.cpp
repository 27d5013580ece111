#include "merger_er/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json_util.hpp"

namespace merger_er {

namespace {

using detail::Json;

[[noreturn]] void invalid(const std::string& path, const std::string& message) {
    throw Error(ErrorCode::ValidationError, path, path + ": " + message);
}

const Json& member(const Json& object, const char* key, const std::string& path) {
    const auto it = object.find(key);
    if (it == object.end()) {
        invalid(path.empty() ? key : path + "." + key, "missing required field");
    }
    return *it;
}

void require_object(const Json& value, const std::string& path) {
    if (!value.is_object()) {
        invalid(path, "expected an object");
    }
}

double finite_number(const Json& value, const std::string& path) {
    if (!value.is_number()) {
        invalid(path, "expected a number");
    }
    const double out = value.get<double>();
    if (!std::isfinite(out)) {
        invalid(path, "expected a finite number");
    }
    return out;
}

double positive_number(const Json& value, const std::string& path) {
    const double out = finite_number(value, path);
    if (out <= 0.0) {
        invalid(path, "must be positive");
    }
    return out;
}

double non_negative_number(const Json& value, const std::string& path) {
    const double out = finite_number(value, path);
    if (out < 0.0) {
        invalid(path, "must be non-negative");
    }
    return out;
}

CompanyProfile parse_company(const Json& value, const std::string& path) {
    require_object(value, path);
    CompanyProfile company;
    company.price = positive_number(member(value, "price", path), path + ".price");
    company.shares = positive_number(member(value, "shares", path), path + ".shares");
    company.risk_per_share =
        positive_number(member(value, "risk_per_share", path), path + ".risk_per_share");
    return company;
}

std::variant<PostMergerOutcome, SynergyView> parse_outcome(const Json& value) {
    const std::string path = "outcome";
    require_object(value, path);
    const bool totals = value.contains("mu_m") || value.contains("rho_m");
    const bool synergy = value.contains("s") || value.contains("v");
    if (totals == synergy) {
        invalid(path, "expected exactly one of {mu_m, rho_m} or {s, v}");
    }
    if (totals) {
        return PostMergerOutcome{positive_number(member(value, "mu_m", path), "outcome.mu_m"),
                                 positive_number(member(value, "rho_m", path), "outcome.rho_m")};
    }
    return SynergyView{non_negative_number(member(value, "s", path), "outcome.s"),
                       non_negative_number(member(value, "v", path), "outcome.v")};
}

SweepSpec parse_sweep(const Json& value) {
    const std::string path = "sweep";
    require_object(value, path);
    SweepSpec spec;
    const Json& parameter = member(value, "parameter", path);
    if (!parameter.is_string() || (parameter != "mu_m" && parameter != "rho_m")) {
        invalid("sweep.parameter", "expected \"mu_m\" or \"rho_m\"");
    }
    spec.parameter = parameter.get<std::string>();
    const Json& range = member(value, "range", path);
    if (!range.is_array() || range.size() != 2) {
        invalid("sweep.range", "expected [lo, hi]");
    }
    const double lo = finite_number(range[0], "sweep.range[0]");
    const double hi = finite_number(range[1], "sweep.range[1]");
    if (!(lo < hi)) {
        invalid("sweep.range", "expected lo < hi");
    }
    spec.range = Interval{lo, hi};
    const Json& samples = member(value, "samples", path);
    if (!samples.is_number_integer() || samples.get<long long>() < 2) {
        invalid("sweep.samples", "expected an integer >= 2");
    }
    spec.samples = static_cast<std::size_t>(samples.get<long long>());
    return spec;
}

Json company_json(const CompanyProfile& c) {
    return Json{{"price", detail::number(c.price)},
                {"shares", detail::number(c.shares)},
                {"risk_per_share", detail::number(c.risk_per_share)}};
}

}  // namespace

ScenarioFile parse_scenario(std::string_view bytes, const ParseOptions& options) {
    Json root;
    try {
        root = Json::parse(bytes.begin(), bytes.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, "", std::string("malformed JSON: ") + e.what());
    }
    require_object(root, "$");

    ScenarioFile scenario;
    const Json& version = member(root, "v", "");
    if (!version.is_number_integer() || version.get<long long>() != kScenarioVersion) {
        invalid("v", "unsupported schema version, expected 1");
    }

    const Json& companies = member(root, "companies", "");
    require_object(companies, "companies");
    scenario.a = parse_company(member(companies, "a", "companies"), "companies.a");
    scenario.b = parse_company(member(companies, "b", "companies"), "companies.b");

    if (const auto it = root.find("outcome"); it != root.end()) {
        scenario.outcome = parse_outcome(*it);
    } else if (options.require_outcome) {
        invalid("outcome", "missing required field");
    }

    if (const auto it = root.find("sweep"); it != root.end()) {
        scenario.sweep = parse_sweep(*it);
    }

    if (const auto it = root.find("metadata"); it != root.end()) {
        require_object(*it, "metadata");
        for (const auto& [key, value] : it->items()) {
            if (!value.is_string()) {
                invalid("metadata." + key, "expected a string");
            }
            scenario.metadata.emplace(key, value.get<std::string>());
        }
    }
    return scenario;
}

std::string serialize_scenario(const ScenarioFile& scenario) {
    Json root;
    root["v"] = scenario.version;
    root["companies"] = Json{{"a", company_json(scenario.a)}, {"b", company_json(scenario.b)}};
    if (scenario.outcome) {
        if (const auto* totals = std::get_if<PostMergerOutcome>(&*scenario.outcome)) {
            root["outcome"] = Json{{"mu_m", detail::number(totals->mu_m)},
                                   {"rho_m", detail::number(totals->rho_m)}};
        } else {
            const auto& synergy = std::get<SynergyView>(*scenario.outcome);
            root["outcome"] = Json{{"s", detail::number(synergy.s)}, {"v", detail::number(synergy.v)}};
        }
    }
    if (scenario.sweep) {
        root["sweep"] = Json{{"parameter", scenario.sweep->parameter},
                             {"range", Json::array({detail::number(scenario.sweep->range.lo),
                                                    detail::number(scenario.sweep->range.hi)})},
                             {"samples", scenario.sweep->samples}};
    }
    if (!scenario.metadata.empty()) {
        Json metadata = Json::object();
        for (const auto& [key, value] : scenario.metadata) {
            metadata[key] = value;
        }
        root["metadata"] = std::move(metadata);
    }
    return root.dump(2) + "\n";
}

ScenarioFile load_scenario(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, path, "cannot read scenario file " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), options);
}

PostMergerOutcome resolve_outcome(const ScenarioFile& scenario, const MergerPair& pair) {
    if (!scenario.outcome) {
        throw Error(ErrorCode::ValidationError, "outcome", "outcome: missing required field");
    }
    if (const auto* totals = std::get_if<PostMergerOutcome>(&*scenario.outcome)) {
        return *totals;
    }
    const auto& synergy = std::get<SynergyView>(*scenario.outcome);
    return outcome_from_synergy(pair, synergy.s, synergy.v);
}

}  // namespace merger_er
