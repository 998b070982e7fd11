#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#ifndef SQ_CLI_PATH
#error "SQ_CLI_PATH must point at the sq binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + std::string(SQ_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

using json = nlohmann::ordered_json;

} // namespace

TEST_CASE("analyze prints the headline facts and honors --json") {
    const RunResult text = run_cli("analyze 43251");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("43251") != std::string::npos);
    CHECK(text.out.find("length") != std::string::npos);

    const RunResult js = run_cli("analyze 43251 --json");
    REQUIRE(js.exit_code == 0);
    const json j = json::parse(js.out);
    CHECK(j["one_line"] == json::array({4, 3, 2, 5, 1}));
    CHECK(j["length"] == 7);
    CHECK(j["smooth"] == true);
    CHECK(j["expected_dim_r"] == 7);
    CHECK(j["free_vertices"].size() == 7);

    // Global flag also accepted before the subcommand.
    const RunResult js2 = run_cli("--json analyze 43251");
    REQUIRE(js2.exit_code == 0);
    CHECK(json::parse(js2.out) == j);
}

TEST_CASE("bad inputs exit with status 2") {
    CHECK(run_cli("analyze 43x51").exit_code == 2);
    CHECK(run_cli("analyze 44251").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate 321").exit_code == 2);
    CHECK(run_cli("count 321 --q 4 --oracle schubert").exit_code == 2);
    CHECK(run_cli("count 321 --q 2 --oracle nonsense").exit_code == 2);
    CHECK(run_cli("euler 321 --vector x").exit_code == 2);
}

TEST_CASE("decompose emits a compatible word and its assignment") {
    const RunResult js = run_cli("decompose 43251 --json");
    REQUIRE(js.exit_code == 0);
    const json j = json::parse(js.out);
    REQUIRE(j.contains("word"));
    CHECK(j["word"].size() == 7);
    CHECK(j["assignment"]["targets"].size() == 7);

    const RunResult id = run_cli("decompose 12345 --json");
    REQUIRE(id.exit_code == 0);
    const json ji = json::parse(id.out);
    CHECK(ji["word"].size() == 0);
    CHECK(ji["length"] == 0);
}

TEST_CASE("bs-map checks the provided word") {
    const RunResult good = run_cli("bs-map 43251 --word \"1 2 3 1 2 1 4\" --json");
    REQUIRE(good.exit_code == 0);
    const json j = json::parse(good.out);
    CHECK(j["word"] == json::array({1, 2, 3, 1, 2, 1, 4}));
    CHECK(j["assignment"]["targets"][1] == json({{"k", 2}, {"letter", 1}, {"row", 2}, {"col", 3}}));
    CHECK(j["assignment"]["targets"][6] == json({{"k", 7}, {"letter", 1}, {"row", 4}, {"col", 1}}));

    CHECK(run_cli("bs-map 43251 --word \"3 1 2 1 3 2 4\"").exit_code == 2);
    CHECK(run_cli("bs-map 43251 --word \"1 1\"").exit_code == 2);
}

TEST_CASE("euler reports expected dimensions for both table kinds") {
    const RunResult r = run_cli("euler 321 --vector r --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["dimension"] == 3);
    CHECK(json::parse(r.out)["vector"] == "r");

    const RunResult e = run_cli("euler 321 --vector e --json");
    REQUIRE(e.exit_code == 0);
    CHECK(json::parse(e.out)["dimension"] == 3);

    CHECK(run_cli("euler 4231 --vector e").exit_code == 2); // singular: no smooth table
}

TEST_CASE("count runs every oracle") {
    const RunResult sub = run_cli("count 321 --q 2 --oracle subrep --json");
    REQUIRE(sub.exit_code == 0);
    const json js = json::parse(sub.out);
    CHECK(js["count"] == 27);
    CHECK(js["oracle"] == "subrep");
    CHECK(js["q"] == 2);

    CHECK(json::parse(run_cli("count 321 --q 2 --oracle schubert --json").out)["count"] == 21);
    CHECK(json::parse(run_cli("count 321 --q 2 --oracle bott-samelson --json").out)["count"] == 27);
    CHECK(json::parse(run_cli("count 321 --q 2 --oracle bruhat --json").out)["count"] == 21);
    CHECK(json::parse(run_cli("count 4231 --q 2 --oracle schubert --json").out)["count"] == 171);
    CHECK(json::parse(run_cli("count 4231 --q 2 --oracle subrep --json").out)["count"] == 243);

    // Structural budget caps map to exit code 2.
    CHECK(run_cli("count 654321 --q 2 --oracle schubert").exit_code == 2);
}

TEST_CASE("verify gates its exit code on the suite outcome") {
    const RunResult ok = run_cli("verify --window 3 --q 2 --suite counts");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[PASS]") != std::string::npos);
    CHECK(ok.out.find("[FAIL]") == std::string::npos);

    const RunResult js = run_cli("verify --window 4 --suite rank --json");
    REQUIRE(js.exit_code == 0);
    const json j = json::parse(js.out);
    CHECK(j["suite"] == "rank");
    CHECK(j["all_passed"] == true);

    CHECK(run_cli("verify --window 9 --suite counts").exit_code == 2);
    CHECK(run_cli("verify --window 4 --suite nonsense").exit_code == 2);
}

TEST_CASE("a tiny wall-clock budget aborts expensive counts") {
    const RunResult starved = run_cli("count 54321 --q 3 --oracle schubert", "SQ_BUDGET_MS=1 ");
    CHECK(starved.exit_code == 2);
    const RunResult fine = run_cli("count 321 --q 2 --oracle schubert --json", "SQ_BUDGET_MS=60000 ");
    REQUIRE(fine.exit_code == 0);
    CHECK(json::parse(fine.out)["count"] == 21);
}
