#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("DEUTSCH_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        r.output.append(buf, got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip_newline(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("count") {
    auto r = run_cli("count --n 0 --t 4 --j 4");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "1");

    r = run_cli("count --n 3 --t 1 --j 0");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "3");

    r = run_cli("count --n 3 --t 1 --j 0 --method closed --check");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "3");

    r = run_cli("count --n 5 --t 0 --j 0 --m 2 --method closed --check");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "0");
}

TEST_CASE("series text output") {
    auto r = run_cli("series --t 0 --j 0 --trunc 5");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "1,0,1,1,3");

    r = run_cli("series --t 0 --j 1 --m 2 --trunc 6");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "0,1,0,1,0,1");
}

TEST_CASE("json output round-trips") {
    auto text = run_cli("series --t 2 --j 1 --trunc 8");
    auto as_json = run_cli("series --t 2 --j 1 --trunc 8 --format json");
    CHECK(text.exit_code == 0);
    CHECK(as_json.exit_code == 0);

    json parsed = json::parse(as_json.output);
    CHECK(parsed["command"] == "series");
    CHECK(parsed["params"]["t"] == 2);
    std::string joined;
    for (const auto& c : parsed["coefficients"]) {
        if (!joined.empty()) joined += ",";
        joined += c.get<std::string>();
    }
    CHECK(joined == strip_newline(text.output));
}

TEST_CASE("dp and closed methods agree") {
    for (const char* spec : {"--t 1 --j 3 --trunc 10", "--t 2 --j 0 --m 4 --trunc 10"}) {
        auto dp = run_cli(std::string("series ") + spec + " --method dp");
        auto closed = run_cli(std::string("series ") + spec + " --method closed");
        CHECK(dp.exit_code == 0);
        CHECK(closed.exit_code == 0);
        CHECK(dp.output == closed.output);
    }
}

TEST_CASE("table output") {
    auto r = run_cli("table --n-max 0 --t 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,j0,j1,j2\n0,0,0,1\n");

    // csv has n_max+1 data rows.
    r = run_cli("table --n-max 4 --t 0 --m 3 --format csv");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 6);  // header + 5 rows

    auto dp = run_cli("table --n-max 5 --t 1 --m 4 --format json");
    auto closed = run_cli("table --n-max 5 --t 1 --m 4 --format json --method closed");
    json a = json::parse(dp.output);
    json b = json::parse(closed.output);
    CHECK(a["rows"] == b["rows"]);
}

TEST_CASE("det subcommand") {
    auto r = run_cli("det --m 2");
    CHECK(r.exit_code == 0);
    CHECK(strip_newline(r.output) == "1 + -1*z^2");

    r = run_cli("det --m 6 --check");
    CHECK(r.exit_code == 0);

    r = run_cli("det --m 5 --t 2 --j 3 --check --format json");
    CHECK(r.exit_code == 0);
    json parsed = json::parse(r.output);
    CHECK(parsed["command"] == "det");
}

TEST_CASE("invalid parameters exit with code 2") {
    CHECK(run_cli("count --n 2 --t 5 --j 0 --m 3").exit_code == 2);
    CHECK(run_cli("count --n -1 --t 0 --j 0").exit_code == 2);
    CHECK(run_cli("series --t 0 --j 0 --trunc 0").exit_code == 2);
    CHECK(run_cli("count --n 1").exit_code == 2);
    CHECK(run_cli("verify --suite nosuchsuite").exit_code == 2);
}

TEST_CASE("verify small bounds") {
    auto r = run_cli("verify --m-max 3 --t-max 3 --n-max 6 --trunc 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);

    r = run_cli("verify --suite kernel --t-max 12");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("kernel") != std::string::npos);
    CHECK(r.output.find("oracle") == std::string::npos);

    auto j = run_cli("verify --m-max 2 --t-max 2 --n-max 4 --trunc 6 --format json");
    CHECK(j.exit_code == 0);
    json parsed = json::parse(j.output);
    for (const auto& suite : parsed["suites"]) {
        CHECK(suite["pass"] == true);
    }
}

TEST_CASE("fault injection flips the verify exit code") {
    auto r = run_cli("verify --m-max 2 --t-max 2 --n-max 4 --trunc 6 --inject-fault");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL oracle") != std::string::npos);
}
