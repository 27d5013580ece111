#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "merger_er/error.hpp"
#include "merger_er/kulpa.hpp"
#include "merger_er/model.hpp"
#include "merger_er/scenario.hpp"
#include "merger_er/sweep.hpp"

namespace merger_er {

enum class OutputFormat { Json, Csv, Svg };

OutputFormat parse_output_format(std::string_view name);

/// Command-line overrides layered on top of a scenario file.
struct CommandOptions {
    std::optional<double> mu_m;
    std::optional<double> rho_m;
    std::optional<double> s;
    std::optional<double> v;
    std::optional<std::size_t> samples;
    std::optional<double> r_candidate;
    std::optional<CaseLabel> case_label;
    FixedParameter fixed = FixedParameter::Rho;
    std::optional<OutputFormat> format;
};

struct ResolvedScenario {
    MergerPair pair;
    PostMergerOutcome outcome;
};

/// Applies overrides: --s/--v rebuild the outcome from synergy form first, then
/// --mu-m/--rho-m replace the totals.
ResolvedScenario resolve(const ScenarioFile& scenario, const CommandOptions& options);

/// Sweep described by the scenario (or the default mu_m sweep over
/// [mu_A + mu_B, 2 (mu_A + mu_B)]), with --samples applied.
Series run_sweep(const ScenarioFile& scenario, const CommandOptions& options);

// Each command returns the bytes to print. Errors propagate as merger_er::Error.
std::string cmd_analyze(const ScenarioFile& scenario, const CommandOptions& options);
std::string cmd_classify(const ScenarioFile& scenario, const CommandOptions& options);
std::string cmd_sweep(const ScenarioFile& scenario, const CommandOptions& options);
std::string cmd_plot(const ScenarioFile& scenario, const CommandOptions& options);
std::string cmd_locus(const ScenarioFile& scenario, const CommandOptions& options);

/// {"code": ..., "path": ..., "message": ...} on one line.
std::string error_report(const Error& error);

/// 2 for admissibility errors, 1 otherwise.
int exit_code_for(const Error& error) noexcept;

}  // namespace merger_er
