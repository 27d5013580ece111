#pragma once

#include <optional>

#include "json_util.hpp"
#include "merger_er/commands.hpp"
#include "merger_er/sweep.hpp"

namespace merger_er::detail {

/// Everything the CLI `analyze` command and the analyze endpoint report,
/// apart from scene geometry.
Json analysis_json(const ResolvedScenario& resolved, std::optional<double> r_candidate);

Json scene_json(const Scene& scene);

Json series_json(const Series& series);

Json case_range_json(const CaseRange& range, FixedParameter fixed);

}  // namespace merger_er::detail
