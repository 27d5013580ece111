#include <csignal>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "merger_er/commands.hpp"
#include "merger_er/error.hpp"
#include "merger_er/scenario.hpp"
#include "merger_er/server.hpp"
#include "merger_er/sweep.hpp"

namespace {

using merger_er::CommandOptions;
using merger_er::Error;
using merger_er::ErrorCode;
using merger_er::ScenarioFile;

merger_er::Server* g_server = nullptr;

void on_signal(int) {
    if (g_server != nullptr) {
        g_server->stop();
    }
}

void configure_logging() {
    auto logger = spdlog::stderr_color_mt("merger-er-lab");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::off);
    if (const char* level = std::getenv("MERGER_ER_LOG")) {
        spdlog::set_level(spdlog::level::from_str(level));
    }
}

struct RawOptions {
    std::string file;
    std::optional<double> mu_m;
    std::optional<double> rho_m;
    std::optional<double> s;
    std::optional<double> v;
    std::optional<std::size_t> samples;
    std::optional<double> r;
    std::optional<std::string> case_label;
    std::string fixed = "rho";
    std::optional<std::string> format;
    std::string out;
};

CommandOptions to_command_options(const RawOptions& raw) {
    CommandOptions options;
    options.mu_m = raw.mu_m;
    options.rho_m = raw.rho_m;
    options.s = raw.s;
    options.v = raw.v;
    options.samples = raw.samples;
    options.r_candidate = raw.r;
    if (raw.case_label) {
        options.case_label = merger_er::parse_case_label(*raw.case_label);
    }
    if (raw.fixed == "rho" || raw.fixed == "rho_m") {
        options.fixed = merger_er::FixedParameter::Rho;
    } else if (raw.fixed == "mu" || raw.fixed == "mu_m") {
        options.fixed = merger_er::FixedParameter::Mu;
    } else {
        throw Error(ErrorCode::InvalidArgument, "fixed", "--fixed expects rho or mu");
    }
    if (raw.format) {
        options.format = merger_er::parse_output_format(*raw.format);
    }
    return options;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    merger_er::write_file(out_path, text);
    spdlog::info("wrote {} bytes to {}", text.size(), out_path);
}

using CommandFn = std::function<std::string(const ScenarioFile&, const CommandOptions&)>;

int run_command(const CommandFn& command, const RawOptions& raw, bool outcome_optional) {
    try {
        const CommandOptions options = to_command_options(raw);
        if (raw.file.empty()) {
            throw Error(ErrorCode::InvalidArgument, "file", "a scenario file is required");
        }
        spdlog::debug("loading scenario {}", raw.file);
        const ScenarioFile scenario =
            merger_er::load_scenario(raw.file, merger_er::ParseOptions{.require_outcome = !outcome_optional});
        emit(command(scenario, options), raw.out);
        return 0;
    } catch (const Error& e) {
        std::cerr << merger_er::error_report(e);
        return merger_er::exit_code_for(e);
    }
}

void add_scenario_options(CLI::App* cmd, RawOptions& raw) {
    cmd->add_option("file", raw.file, "Scenario JSON file");
    cmd->add_option("--mu-m", raw.mu_m, "Override post-merger expected value mu_M");
    cmd->add_option("--rho-m", raw.rho_m, "Override post-merger risk rho_M");
    cmd->add_option("--s", raw.s, "Override synergy s (rebuilds the outcome)");
    cmd->add_option("--v", raw.v, "Override risk reduction v (rebuilds the outcome)");
    cmd->add_option("--out", raw.out, "Write output to this path instead of stdout");
    cmd->add_option("--samples", raw.samples, "Samples per curve or sweep")->check(CLI::Range(2, 1000000));
    cmd->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
}

}  // namespace

int main(int argc, char** argv) {
    configure_logging();

    CLI::App app{"Exchange-ratio bargaining analysis for two-company mergers"};
    app.require_subcommand(1);
    RawOptions raw;

    auto* analyze = app.add_subcommand("analyze", "Full report for one scenario as JSON");
    add_scenario_options(analyze, raw);
    analyze->add_option("--r", raw.r, "Candidate exchange ratio to test against every criterion");

    auto* classify = app.add_subcommand("classify", "Case label and bargaining interval");
    add_scenario_options(classify, raw);

    auto* sweep = app.add_subcommand("sweep", "Bargaining range as a function of mu_M or rho_M");
    add_scenario_options(sweep, raw);

    auto* plot = app.add_subcommand("plot", "Kulpa-plane chart of the scenario");
    add_scenario_options(plot, raw);

    auto* locus = app.add_subcommand("locus", "Locus of the result point for one case");
    add_scenario_options(locus, raw);
    locus->add_option("--case", raw.case_label, "Case label (defaults to the scenario's own case)");
    locus->add_option("--fixed", raw.fixed, "Which total is held fixed: rho or mu")
        ->check(CLI::IsMember({"rho", "mu", "rho_m", "mu_m"}));

    merger_er::ServerConfig server_config;
    auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
    serve->add_option("--host", server_config.host, "Bind address");
    serve->add_option("--port", server_config.port, "Port (0 picks a free one)");
    serve->add_option("--cors-origin", server_config.cors_origin, "Access-Control-Allow-Origin value");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        return run_command(merger_er::cmd_analyze, raw, true);
    }
    if (classify->parsed()) {
        return run_command(merger_er::cmd_classify, raw, true);
    }
    if (sweep->parsed()) {
        return run_command(merger_er::cmd_sweep, raw, true);
    }
    if (plot->parsed()) {
        return run_command(merger_er::cmd_plot, raw, true);
    }
    if (locus->parsed()) {
        return run_command(merger_er::cmd_locus, raw, true);
    }

    merger_er::Server server(server_config);
    const int port = server.bind();
    if (port < 0) {
        std::cerr << merger_er::error_report(Error(ErrorCode::InvalidArgument, "port",
                                                   "cannot bind " + server_config.host + ":" +
                                                       std::to_string(server_config.port)));
        return 1;
    }
    g_server = &server;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << "listening on http://" << server_config.host << ":" << port << "/api/v1" << std::endl;
    const bool ok = server.run();
    g_server = nullptr;
    return ok ? 0 : 1;
}
