#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "lgp/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"lgp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = lgp::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: documented invocations") {
    RunResult r = run({"period", "--poly", "x + y + x^-1*y^-1", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");

    r = run({"descendant", "eval", "--json", R"({"n":1,"vectors":[[-2],[1],[1]]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    r = run({"mirror-check", "--poly", "x + y + x^-1*y^-1", "--target", "cp:2", "--max-degree", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");
}

TEST_CASE("cli: identical invocations produce byte-identical output") {
    std::vector<std::string> args{"descendant", "reduce", "--json",
                                  R"({"n":1,"vectors":[[-2],[1],[1]]})"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: reduce output feeds verify") {
    RunResult cert = run({"descendant", "reduce", "--json", R"({"n":1,"vectors":[[-2],[1],[1]]})"});
    REQUIRE(cert.code == 0);
    std::string payload = cert.out;
    if (!payload.empty() && payload.back() == '\n') payload.pop_back();
    RunResult value = run({"descendant", "verify", "--json", payload});
    CHECK(value.code == 0);
    CHECK(value.out == "1\n");
}

TEST_CASE("cli: series output feeds mirror-check") {
    RunResult series = run({"series", "--poly", "x + y + x^-1*y^-1", "--max-degree", "9"});
    REQUIRE(series.code == 0);
    std::string payload = series.out;
    if (!payload.empty() && payload.back() == '\n') payload.pop_back();
    // pi_W coefficients equal phi_d/d!, which is exactly G for a true mirror.
    RunResult check = run({"mirror-check", "--poly", "x + y + x^-1*y^-1", "--series-json", payload,
                           "--max-degree", "9"});
    CHECK(check.code == 0);
    CHECK(check.out == "OK\n");
}

TEST_CASE("cli: loop class output feeds bracket input") {
    RunResult gold = run({"goldman", "--u", "[1,0]", "--v", "[0,1]"});
    REQUIRE(gold.code == 0);
    std::string payload = gold.out;
    if (!payload.empty() && payload.back() == '\n') payload.pop_back();
    RunResult bv = run({"bv", "--json", payload});
    CHECK(bv.code == 0);
    CHECK(bv.out == "[]\n");
}

TEST_CASE("cli: mirror mismatch is a report, not an error") {
    RunResult r = run({"mirror-check", "--poly", "x + y + x^-1*y^-1", "--target", "cp:1",
                       "--max-degree", "9"});
    CHECK(r.code == 0);
    CHECK(r.out == "mismatch at d=2: phi_d = 0, d!*c_d = 2\n");
}

TEST_CASE("cli: json format") {
    RunResult r = run({"--format", "json", "period", "--poly", "x + x^-1", "--d", "6"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"value", "20"}});

    r = run({"--format", "json", "index", "stretch", "--n", "2", "--d", "3"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"p", 3}, {"mus", {1, 1, 1}}});
}

TEST_CASE("cli: exit codes") {
    // Domain error: mutation is undefined at this seed.
    RunResult r = run({"mutate", "--poly", "x + y + x^-1*y^-1", "--pivot", "2", "--factor", "1 + x"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") == 0);

    // Usage errors: unknown subcommand, missing required flag.
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"period", "--poly", "x"}).code == 2);
    CHECK(run({}).code == 2);

    // Parse errors in the polynomial are domain errors, not usage errors.
    CHECK(run({"period", "--poly", "x +", "--d", "2"}).code == 1);
}

TEST_CASE("cli: subcommand coverage") {
    CHECK(run({"potential", "toric", "--rays", "[[1,0],[0,1],[-1,-1]]"}).out ==
          "x1 + x2 + x1^-1*x2^-1\n");
    CHECK(run({"potential", "product", "--factors", "[2]"}).out == "x1 + x2 + x1^-1*x2^-1\n");
    CHECK(run({"gl", "--poly", "x", "--dim", "2", "--matrix", "[[1,0],[1,1]]"}).out == "x1*x2\n");
    CHECK(run({"index", "dims", "tangency", "--d", "3", "--m", "1"}).out == "2\n");
    CHECK(run({"index", "dims", "descendant", "--k", "3", "--m", "1", "--degs", "[0,0,0]"}).out ==
          "2\n");
    CHECK(run({"index", "degrees", "--mu", "3", "--n", "4"}).out == "check=1 hat=0\n");
    CHECK(run({"index", "factors", "--N", "1", "--d", "3", "--p", "2"}).out == "many=9 single=6\n");
    CHECK(run({"index", "gluing", "--N", "2", "--d", "4"}).out == "true\n");
    CHECK(run({"index", "norm", "--d", "7"}).out == "true\n");
    CHECK(run({"index", "psi", "--value", "1/8", "--d", "6", "--direction", "to-bullet"}).out ==
          "3\n");
    CHECK(run({"descendant", "bs-expand", "--poly", "x + x^-1", "--d", "4"}).out == "12\n");

    RunResult rel = run({"descendant", "relation", "--json",
                         R"({"n":2,"vectors":[[-2,-1],[1,0],[1,0]]})", "--u", "[0,1]", "--omega",
                         R"([[2,1,"1"]])"});
    CHECK(rel.code == 0);
    auto j = nlohmann::json::parse(rel.out);
    CHECK(j["residual"] == "0");
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][0]["coefficient"] == "-2");
}
