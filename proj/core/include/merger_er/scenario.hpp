#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "merger_er/interval.hpp"
#include "merger_er/model.hpp"

namespace merger_er {

inline constexpr int kScenarioVersion = 1;

struct SweepSpec {
    std::string parameter = "mu_m";  // "mu_m" or "rho_m"
    Interval range;
    std::size_t samples = 0;
};

/// One merger scenario as stored on disk:
///
///   {
///     "v": 1,
///     "companies": {"a": {"price": 4, "shares": 20, "risk_per_share": 4},
///                   "b": {"price": 2, "shares": 10, "risk_per_share": 3}},
///     "outcome": {"mu_m": 120, "rho_m": 94},      // or {"s": 20, "v": 16}
///     "sweep": {"parameter": "mu_m", "range": [100, 200], "samples": 101},
///     "metadata": {"source": "..."}
///   }
///
/// "sweep" and "metadata" are optional.
struct ScenarioFile {
    int version = kScenarioVersion;
    CompanyProfile a;
    CompanyProfile b;
    std::optional<std::variant<PostMergerOutcome, SynergyView>> outcome;
    std::optional<SweepSpec> sweep;
    std::map<std::string, std::string> metadata;
};

struct ParseOptions {
    bool require_outcome = true;
};

/// Throws Error(ParseError) for malformed JSON and Error(ValidationError) with
/// a dotted field path for schema or range violations.
ScenarioFile parse_scenario(std::string_view bytes, const ParseOptions& options = {});

/// Pretty-printed JSON; numbers carry at most 15 significant digits.
std::string serialize_scenario(const ScenarioFile& scenario);

ScenarioFile load_scenario(const std::string& path, const ParseOptions& options = {});

/// Post-merger totals of the scenario, converting an {s, v} outcome through
/// outcome_from_synergy. Throws Error(ValidationError) if there is no outcome.
PostMergerOutcome resolve_outcome(const ScenarioFile& scenario, const MergerPair& pair);

}  // namespace merger_er
