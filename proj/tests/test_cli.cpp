// End-to-end checks of the qcoh binary: output formats, determinism, and
// the error paths. QCOH_CLI_PATH is injected by the build.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcoh/channels.hpp"
#include "qcoh/state_io.hpp"
#include "test_util.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(QCOH_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

std::string write_temp_state(const std::string& name, const std::string& body) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("coherence: |+><+| state file") {
    const std::string path = write_temp_state(
        "qcoh_cli_plus.json",
        R"({"dims": [2], "matrix": [[[0.5,0],[0.5,0]],[[0.5,0],[0.5,0]]]})");
    const RunResult res = run_cli("coherence " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"c_hs\": 0.707106781187") != std::string::npos);
    CHECK(res.output.find("\"c_l1\": 1") != std::string::npos);
    CHECK(res.output.find("\"c_re\": 1") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("coherence: diagonal state gives zeros") {
    const std::string path = write_temp_state(
        "qcoh_cli_diag.json",
        R"({"dims": [2], "matrix": [[[0.25,0],[0,0]],[[0,0],[0.75,0]]]})");
    const RunResult res = run_cli("coherence " + path);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"c_hs\": 0,") != std::string::npos);
    CHECK(res.output.find("\"c_l1\": 0,") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("coherence: malformed file names the violated invariant") {
    const std::string path = write_temp_state(
        "qcoh_cli_badtrace.json",
        R"({"dims": [2], "matrix": [[[0.5,0],[0,0]],[[0,0],[0.4,0]]]})");
    const RunResult res = run_cli("coherence " + path);
    CHECK(res.exit_code != 0);
    CHECK(res.output.find("trace") != std::string::npos);
    std::filesystem::remove(path);

    const RunResult missing = run_cli("coherence /nonexistent/state.json");
    CHECK(missing.exit_code != 0);
}

TEST_CASE("rec-curve: csv shape and the fixed l1=0.5 landmarks") {
    const RunResult res = run_cli("rec-curve --l1 0.5 --steps 101");
    CHECK(res.exit_code == 0);
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] == "a,c_re,bloch_norm");
    // middle row sits at a = 0
    CHECK(lines[51] == "0,0.188721875541,0.5");
    // endpoints touch the sphere
    CHECK(lines[1].substr(lines[1].rfind(',') + 1) == "1");
    CHECK(lines[101].substr(lines[101].rfind(',') + 1) == "1");

    CHECK(run_cli("rec-curve --l1 1.5").exit_code != 0);
    CHECK(run_cli("rec-curve --l1 0.5 --steps 1").exit_code != 0);
}

TEST_CASE("dynamics: pd and ad sweeps") {
    const RunResult pd = run_cli("dynamics --channel pd --w 1 --steps 11");
    CHECK(pd.exit_code == 0);
    const auto lines = lines_of(pd.output);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "p,c_hs,c_l1,c_re");
    CHECK(lines[6].rfind("0.5,0.40824829046", 0) == 0);  // p=0.5 row
    CHECK(lines[6].find(",1,") != std::string::npos);    // c_l1 = 1

    const RunResult ad = run_cli("dynamics --channel ad --w 1 --steps 11");
    const auto ad_lines = lines_of(ad.output);
    REQUIRE(ad_lines.size() == 12);
    CHECK(ad_lines[11].rfind("1,0,0,", 0) == 0);  // fully damped at p=1

    const RunResult zero = run_cli("dynamics --channel pd --w 0 --steps 5");
    for (std::size_t i = 2; i < lines_of(zero.output).size(); ++i) {
        const std::string& row = lines_of(zero.output)[i];
        CHECK(row.find(",0,0,0") != std::string::npos);
    }

    CHECK(run_cli("dynamics --channel xy --w 1").exit_code != 0);
    CHECK(run_cli("dynamics --channel pd --w 1.5").exit_code != 0);
}

TEST_CASE("nmutp: deterministic json lines") {
    const std::string flags = "nmutp --dims 2 --samples 1000 --seed 7 --workers 2";
    const RunResult a = run_cli(flags);
    const RunResult b = run_cli(flags);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"dim\": 2") != std::string::npos);
    CHECK(a.output.find("\"samples\": 1000") != std::string::npos);
    CHECK(a.output.find("\"seed\": 7") != std::string::npos);

    const RunResult multi = run_cli("nmutp --dims 2,3 --samples 200 --seed 5");
    CHECK(lines_of(multi.output).size() == 2);

    CHECK(run_cli("nmutp --dims 2 --samples 0").exit_code != 0);
}

TEST_CASE("demo-inversion: reports the inverted pair") {
    const RunResult res = run_cli("demo-inversion");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"c_rho\": 0.34") != std::string::npos);
    CHECK(res.output.find("\"c_xi\": 0.33") != std::string::npos);
    CHECK(res.output.find("\"c_rhorho\": 0.359114689201") != std::string::npos);
    CHECK(res.output.find("\"c_xixi\": 0.417277138123") != std::string::npos);
    CHECK(res.output.find("\"inverted\": true") != std::string::npos);
}

TEST_CASE("emissions are byte-identical across runs") {
    for (const std::string flags :
         {std::string("rec-curve --l1 0.3 --steps 17"),
          std::string("dynamics --channel ad --w 0.5 --steps 13"),
          std::string("demo-inversion")}) {
        const RunResult a = run_cli(flags);
        const RunResult b = run_cli(flags);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("csv fields parse back to the in-process values") {
    const RunResult res = run_cli("dynamics --channel ad --w 0.8 --steps 21");
    const auto lines = lines_of(res.output);
    REQUIRE(lines.size() == 22);
    const qcoh::DensityMatrix rho0 = qcoh::rho_w(0.8);
    const qcoh::SweepResult sweep =
        qcoh::sweep(qcoh::ChannelKind::AD, rho0, 21);
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        std::istringstream row(lines[i + 1]);
        std::string field;
        std::vector<double> vals;
        while (std::getline(row, field, ',')) vals.push_back(std::stod(field));
        REQUIRE(vals.size() == 4);
        CHECK_NEAR(vals[0], sweep.rows[i].p, 1e-9);
        CHECK_NEAR(vals[1], sweep.rows[i].c_hs, 1e-9);
        CHECK_NEAR(vals[2], sweep.rows[i].c_l1, 1e-9);
        CHECK_NEAR(vals[3], sweep.rows[i].c_re, 1e-9);
    }
}
