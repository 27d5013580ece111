#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "cli_runner.hpp"

namespace {

const char* const kFigures[] = {"paper_fig5a", "paper_fig5b", "paper_fig5c", "paper_fig5d", "paper_fig5e"};

TEST(Cli, GoldenOutputs) {
    for (const char* figure : kFigures) {
        const std::string input = cli::fixture(std::string(figure) + ".json");
        for (const auto& [command, ext] : {std::pair{"classify", "json"}, {"analyze", "json"}, {"plot", "svg"}}) {
            const cli::Result r = cli::run(std::string(command) + " '" + input + "'");
            EXPECT_EQ(r.exit_code, 0) << command << " " << figure << ": " << r.err;
            const std::string golden = cli::golden(std::string(command) + "_" + figure + "." + ext);
            ASSERT_TRUE(std::filesystem::exists(golden)) << golden;
            EXPECT_EQ(r.out, cli::read_file(golden)) << command << " " << figure;
        }
    }
}

TEST(Cli, EmptyCaseClassify) {
    const cli::Result r = cli::run("classify '" + cli::fixture("paper_fig5e.json") + "'");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "{\"case\":\"EmptyMuBelowRho\"}\n");
}

TEST(Cli, NoSynergyAnalyzeIsSingleton) {
    const cli::Result r = cli::run("analyze '" + cli::fixture("paper_fig1.json") + "' --mu-m 100");
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("\"br_mu\": {\n    \"lo\": 0.5,\n    \"hi\": 0.5\n  }"), std::string::npos) << r.out;
}

TEST(Cli, InadmissibleExitsWithTwo) {
    const cli::Result r = cli::run("classify '" + cli::fixture("paper_fig5b.json") + "' --rho-m 80");
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err.rfind("{\"code\":\"Inadmissible\",\"path\":\"rho_m\",\"message\":", 0), 0u) << r.err;
}

TEST(Cli, ValidationErrorExitsWithOne) {
    const cli::Result r = cli::run("classify '" + cli::fixture("does_not_exist.json") + "'");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.err.find("\"code\":\"ParseError\""), std::string::npos);
}

TEST(Cli, SweepCsvAndOutFile) {
    const cli::Result r = cli::run("sweep '" + cli::fixture("paper_fig1.json") + "' --samples 3");
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(r.out, "mu_m,r_lower,r_upper\r\n100,0.5,0.5\r\n150,0.307692308,1.75\r\n200,0.222222222,3\r\n");

    const auto out = std::filesystem::temp_directory_path() / "merger_er_sweep_test.svg";
    const cli::Result svg =
        cli::run("sweep '" + cli::fixture("paper_fig1.json") + "' --format svg --out '" + out.string() + "'");
    EXPECT_EQ(svg.exit_code, 0) << svg.err;
    EXPECT_TRUE(svg.out.empty());
    EXPECT_EQ(cli::read_file(out.string()).rfind("<?xml", 0), 0u);
    std::filesystem::remove(out);
}

TEST(Cli, SynergyOverride) {
    const cli::Result r = cli::run("classify '" + cli::fixture("paper_fig1.json") + "' --s 20 --v 16");
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"case\":\"Case1CrB\",\"interval\":[0.4,0.9375]}\n");
}

TEST(Cli, LocusCommand) {
    const cli::Result r = cli::run("locus '" + cli::fixture("paper_fig5d.json") + "' --fixed mu");
    EXPECT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("\"fixed\": \"mu_m\""), std::string::npos);
    const cli::Result bad =
        cli::run("locus '" + cli::fixture("paper_fig5b.json") + "' --case Case4CrA");
    EXPECT_EQ(bad.exit_code, 1);
    EXPECT_NE(bad.err.find("InvalidCase"), std::string::npos);
}

}  // namespace
