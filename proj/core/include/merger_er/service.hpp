#pragma once

#include <string>
#include <string_view>

namespace merger_er {

inline constexpr std::string_view kApiBase = "/api/v1";

struct HttpReply {
    int status = 200;
    std::string body;
};

/// POST /api/v1/analyze. Body: a scenario document plus optional
/// "r_candidate" (exchange ratio to test) and "samples" (scene resolution).
/// 200 with the analysis and scene geometry, 400 for malformed bodies, 422 for
/// inadmissible parameters. Errors are {"code", "path", "message"}.
HttpReply handle_analyze(std::string_view body);

/// POST /api/v1/sweep. Body: a scenario document (outcome optional) with either
/// a "sweep" object or top-level "parameter", "range", "samples".
HttpReply handle_sweep(std::string_view body);

/// GET /api/v1/health.
HttpReply handle_health();

}  // namespace merger_er
