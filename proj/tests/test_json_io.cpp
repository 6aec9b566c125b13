#include <doctest.h>

#include "lgp/json_io.hpp"
#include "test_util.hpp"

using namespace lgp;
using nlohmann::json;

TEST_CASE("period series wire format") {
    PeriodSeries s;
    s.max_degree = 3;
    s.coeffs = {Rat(1), Rat(0), Rat(1, 2), Rat(-3, 7)};
    json j = to_json(s);
    CHECK(j == json::parse(R"({"coeffs":["1","0","1/2","-3/7"],"maxDegree":3})"));
    CHECK(series_from_json(j) == s);

    CHECK_THROWS_AS(series_from_json(json::parse(R"({"maxDegree":2,"coeffs":["1"]})")), DomainError);
    CHECK_THROWS_AS(series_from_json(json::parse(R"({"maxDegree":0,"coeffs":["1/0"]})")), DomainError);
}

TEST_CASE("loop class wire format") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        LoopClass x = lgptest::random_loop_class(rng, n, 4, 3, 4);
        CHECK(loop_class_from_json(to_json(x), n) == x);
    }
    CHECK(to_json(LoopClass(2)) == json::array());
    CHECK(loop_class_from_json(json::array(), 2).is_zero());
    CHECK_THROWS_AS(loop_class_from_json(json::array(), 0), DomainError);
    CHECK_THROWS_AS(
        loop_class_from_json(json::parse(R"([{"subset":[2,1],"exponent":[0,0],"coeff":"1"}])"), 0),
        DomainError);
}

TEST_CASE("symbol and matrix wire formats") {
    DescendantSymbol s(2, {{1, 0}, {0, 1}, {-1, -1}});
    json j = to_json(s);
    CHECK(j == json::parse(R"({"n":2,"vectors":[[-1,-1],[0,1],[1,0]]})"));
    CHECK(symbol_from_json(j) == s);
    CHECK_THROWS_AS(symbol_from_json(json::parse(R"({"n":2,"vectors":[[0,0]]})")), ZeroVectorError);

    IntMatrix m{{1, 2}, {0, 1}};
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), DomainError);
}

TEST_CASE("certificates reject unknown node kinds") {
    json j = json::parse(
        R"({"kind":"sorcery","weight":"1","data":{"symbol":{"n":1,"vectors":[[1]]}},"children":[]})");
    CHECK_THROWS_AS(certificate_from_json(j), DomainError);
}
