#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "madgad/io.hpp"

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

/// Runs the CLI through the shell; stderr is discarded.
CliRun madgad_cli(const std::string& args) {
    const std::string cmd = std::string(MADGAD_BIN) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / ("madgad_cli_" + name);
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, FormulaValue) {
    const CliRun r = madgad_cli("formula m2 --n 5");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(madgad::Json::parse(r.out).at("value"), "24/5");
}

TEST(Cli, MadOfEmptyGraph) {
    const std::string file = temp_file("empty.txt", "3 0\n");
    const CliRun r = madgad_cli("mad " + file);
    ASSERT_EQ(r.status, 0);
    const auto j = madgad::Json::parse(r.out);
    EXPECT_EQ(j.at("mad"), "0/1");
    EXPECT_EQ(j.at("witness"), madgad::Json::array({0}));
}

TEST(Cli, ConstructRoundTripsThroughVerify) {
    const std::string design = temp_file("pg3.json", madgad_cli("design pg --q 3").out);
    const std::vector<std::string> constructions = {
        "k2 --n 9",
        "small-k --k 3 --n 6 --variant B",
        "small-k --k 5 --n 10 --variant A",
        "k7-k8",
        "design --design " + design,
        "psts --n 9 --t 12",
        "psts --n 7 --t 5",
        "blow-up --n 14",
        "plane-r --q 2 --r 1 --n 7",
        "triangular --t 3 --n 12",
        "canonical --n 6 --subsets '[[0,1,2,3],[2,3,4,5]]'",
    };
    for (const std::string& c : constructions) {
        const CliRun built = madgad_cli("construct " + c);
        ASSERT_EQ(built.status, 0) << c;
        const auto claimed = madgad::Json::parse(built.out).at("total");
        const std::string file = temp_file("part.json", built.out);
        const CliRun checked = madgad_cli("verify " + file);
        ASSERT_EQ(checked.status, 0) << c;
        const auto report = madgad::Json::parse(checked.out);
        EXPECT_TRUE(report.at("valid").get<bool>()) << c;
        EXPECT_EQ(report.at("total"), claimed) << c;
    }
    const CliRun k78 = madgad_cli("construct k7-k8 | " + std::string(MADGAD_BIN) + " verify -");
    ASSERT_EQ(k78.status, 0);
    EXPECT_EQ(madgad::Json::parse(k78.out).at("total"), "16/1");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(madgad_cli("formula g --m 0").status, 2);
    EXPECT_EQ(madgad_cli("formula m2").status, 2);
    EXPECT_EQ(madgad_cli("no-such-command").status, 2);
    EXPECT_EQ(madgad_cli("oracle mkn --k 3 --n 9").status, 3);
    const std::string bad = temp_file(
        "overlap.json", R"({"n":3,"parts":[{"n":3,"edges":[[0,1],[1,2],[0,2]]},{"n":3,"edges":[[0,1]]}]})");
    const CliRun r = madgad_cli("verify " + bad);
    EXPECT_EQ(r.status, 1);
}

TEST(Cli, DeterministicOutput) {
    EXPECT_EQ(madgad_cli("construct psts --n 10 --t 3").out, madgad_cli("construct psts --n 10 --t 3").out);
    EXPECT_EQ(madgad_cli("design psts --n 11 --seed 5").out, madgad_cli("design psts --n 11 --seed 5").out);
}

TEST(Cli, NormalizeDecomposition) {
    const std::string file = temp_file("k78.json", madgad_cli("construct k7-k8").out);
    const CliRun r = madgad_cli("normalize " + file + " --k 7 --N 28");
    ASSERT_EQ(r.status, 0);
    const auto j = madgad::Json::parse(r.out);
    EXPECT_EQ(j.at("mad_sum"), "16/1");
    EXPECT_EQ(j.at("m_list"), "16/1");
    EXPECT_TRUE(j.at("terminal_shape").get<bool>());
}
