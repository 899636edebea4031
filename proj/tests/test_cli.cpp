#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(K3O_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("byte-identical output for identical invocations") {
    for (const std::string args :
         {"sets --char 11 --format json", "table1 --format json",
          "classify --char 0 --order 60 --format json",
          "shape --m 2 --n 14 --format json", "replay --lemma L7.3",
          "verify --char 2 --format json", "bounds --char 11 --format json"}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        CAPTURE(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}

TEST_CASE("sets json for characteristic 11") {
    auto r = run_cli("sets --char 11 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    auto ord = j.at("ord").get<std::vector<long long>>();
    CHECK(std::find(ord.begin(), ord.end(), 44) == ord.end());
    CHECK(std::find(ord.begin(), ord.end(), 66) != ord.end());
    CHECK(j.at("tv_max") == 54);
    CHECK(j.at("beta") == 12);
}

TEST_CASE("table1 text layout") {
    auto r = run_cli("table1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("phi = 20: 66 50 44 33 25") != std::string::npos);
    CHECK(r.output.find("phi = 1: 2 1") != std::string::npos);
    CHECK(r.output.find("phi = 21") == std::string::npos);
}

TEST_CASE("shape command emits the R2 certificate for 8.2") {
    auto r = run_cli("shape --m 8 --n 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("verdict") == "infeasible");
    REQUIRE(j.at("certificates").size() == 1);
    CHECK(j.at("certificates")[0].at("rule") == "R2_symplectic_power");
}

TEST_CASE("exit code contract") {
    // 0: success
    CHECK(run_cli("table1").exit_code == 0);
    CHECK(run_cli("classify --char 0 --order 66").exit_code == 0);
    CHECK(run_cli("replay --all").exit_code == 0);
    CHECK(run_cli("verify --char 2").exit_code == 0);
    CHECK(run_cli("bounds --char 13").exit_code == 0);
    // 2: usage errors
    CHECK(run_cli("nope").exit_code == 2);
    CHECK(run_cli("shape --m 2").exit_code == 2);
    CHECK(run_cli("replay --lemma L0.0").exit_code == 2);
    CHECK(run_cli("verify --char 0 --id X99").exit_code == 2);
    CHECK(run_cli("verify --char 11 --id X66").exit_code == 2);
    CHECK(run_cli("bounds --char 7").exit_code == 2);
    CHECK(run_cli("sets --char 4").exit_code == 2);
    CHECK(run_cli("table1 --format yaml").exit_code == 2);
}

TEST_CASE("classify routes wild orders through the wild module") {
    auto r = run_cli("classify --char 11 --order 44 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.at("verdict") == "infeasible");
    CHECK(j.at("wild").at("status") == "ExcludedWithGeometryFlag");

    auto r2 = run_cli("classify --char 11 --order 66 --format json");
    auto j2 = nlohmann::json::parse(r2.output);
    CHECK(j2.at("verdict") == "feasible");
    CHECK(j2.at("wild").at("example") == "X66w11");
}

TEST_CASE("replay text output carries per-assertion lines") {
    auto r = run_cli("replay --lemma L9.7_1pt");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("510t1 + 690t2 + 750t3 + 450t4 + 150t5 = 1278") !=
          std::string::npos);
    CHECK(r.output.find("all assertions pass") != std::string::npos);
}
