#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exitCode;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = fs::temp_directory_path() / ("cuspcensus_cli_" + std::to_string(counter++) + ".out");
    std::string cmd = std::string(CLI_BIN) + " " + args + " > " + out.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    fs::remove(out);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, ss.str()};
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_temp(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("gen is deterministic and matches the golden file") {
    RunResult a = run_cli("gen --d1 2 --d2 2 --seed 42");
    RunResult b = run_cli("gen --d1 2 --d2 2 --seed 42");
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == read_file(fs::path(GOLDEN_DIR) / "gen_2_2_42.txt"));
}

TEST_CASE("gen rejects a degenerate coefficient bound") {
    CHECK(run_cli("gen --d1 2 --d2 2 --seed 1 --coeff-bound 0").exitCode == 2);
}

TEST_CASE("analyze") {
    SUBCASE("identity map file exits 0") {
        auto p = write_temp("cli_identity.map", "f = x\ng = y\n");
        RunResult r = run_cli("analyze --in " + p.string());
        CHECK(r.exitCode == 0);
    }
    SUBCASE("golden (3,2) seed 7 reports 8 cusps") {
        RunResult r = run_cli("analyze --d1 3 --d2 2 --seed 7 --format json");
        CHECK(r.exitCode == 0);
        CHECK(r.output.find("\"cusps\": 8") != std::string::npos);
    }
    SUBCASE("parse errors exit 2 with a position") {
        auto p = write_temp("cli_bad.map", "f = x^\ng = y\n");
        RunResult r = run_cli("analyze --in " + p.string());
        CHECK(r.exitCode == 2);
        CHECK(r.output.find("line 1") != std::string::npos);
    }
    SUBCASE("budget exhaustion exits 3") {
        RunResult r = run_cli("analyze --d1 3 --d2 3 --seed 1 --budget 2");
        CHECK(r.exitCode == 3);
    }
    SUBCASE("non-generic map with a cusp-count mismatch exits 4") {
        auto p = write_temp("cli_cusp.map", "f = x\ng = y^3 + x*y\n");
        RunResult r = run_cli("analyze --in " + p.string());
        CHECK(r.exitCode == 4);  // 1 cusp against c(1,3) = 2
    }
}

TEST_CASE("verify emits byte-identical JSON across runs") {
    std::string args = "verify --d1 3 --d2 2 --seed 7 --format json";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
    CHECK(a.output == read_file(fs::path(GOLDEN_DIR) / "verify_3_2_7.json"));
}

TEST_CASE("index subcommand") {
    auto p = write_temp("cli_index.map", "f = x\ng = y^4 + x*y\n");
    RunResult r = run_cli("index --in " + p.string() + " --at 0,0 --format json");
    CHECK(r.exitCode == 0);
    CHECK(r.output.find("\"index\": 2") != std::string::npos);

    RunResult nonred = run_cli("index --in " +
                               write_temp("cli_nonred.map", "f = x\ng = y^3\n").string());
    CHECK(nonred.exitCode != 0);
}

TEST_CASE("genericity subcommand reflects verdicts in the exit code") {
    CHECK(run_cli("genericity --d1 3 --d2 2 --seed 42").exitCode == 0);
    auto p = write_temp("cli_gradfail.map", "f = x^3 + y^3\ng = x + y + x*y\n");
    CHECK(run_cli("genericity --in " + p.string()).exitCode == 4);
}

TEST_CASE("unknown flags exit 2") {
    CHECK(run_cli("analyze --no-such-flag").exitCode == 2);
    CHECK(run_cli("frobnicate").exitCode == 2);
}
