#include <doctest.h>

#include "plab/io.hpp"
#include "plab/sampler.hpp"
#include "test_support.hpp"

using namespace plab;
using plab::test::make_poly;

TEST_CASE("polynomial JSON round-trip is coefficient-identical") {
    for (uint64_t s = 0; s < 300; ++s) {
        SamplerConfig cfg{1 + static_cast<int>(s % 4), 7, 7, 0, SignMode::mixed, "uniform", 95000 + s};
        Polynomial p = sample_polynomial(cfg);
        Polynomial back = polynomial_from_json(polynomial_to_json(p));
        CHECK(back == p);
        // serialized form is deterministic
        CHECK(polynomial_to_json(p).dump() == polynomial_to_json(back).dump());
    }
}

TEST_CASE("terms serialize in graded-lex order and re-parse from any order") {
    Polynomial p = make_poly(2, {{{2, 0}, 1.5}, {{0, 1}, -2.0}, {{0, 0}, 3.0}});
    Json j = polynomial_to_json(p);
    CHECK(j["terms"][0]["alpha"] == Json::array({0, 0}));
    CHECK(j["terms"][1]["alpha"] == Json::array({0, 1}));
    CHECK(j["terms"][2]["alpha"] == Json::array({2, 0}));

    Json shuffled = j;
    std::swap(shuffled["terms"][0], shuffled["terms"][2]);
    CHECK(polynomial_from_json(shuffled) == p);
}

TEST_CASE("polynomial reader rejects malformed input with positions") {
    Json dup = Json::parse(R"({"dim":2,"terms":[
        {"alpha":[1,0],"coef":1.0},
        {"alpha":[1,0],"coef":2.0}]})");
    CHECK_THROWS_WITH_AS(polynomial_from_json(dup),
                         doctest::Contains("duplicate alpha [1;0]"), InputError);

    Json zero = Json::parse(R"({"dim":1,"terms":[{"alpha":[1],"coef":0.0}]})");
    CHECK_THROWS_AS(polynomial_from_json(zero), InputError);

    Json wrongdim = Json::parse(R"({"dim":2,"terms":[{"alpha":[1],"coef":1.0}]})");
    CHECK_THROWS_AS(polynomial_from_json(wrongdim), InputError);

    Json neg = Json::parse(R"({"dim":1,"terms":[{"alpha":[-1],"coef":1.0}]})");
    CHECK_THROWS_AS(polynomial_from_json(neg), InputError);

    Json empty = Json::parse(R"({"dim":3,"terms":[]})");
    CHECK(polynomial_from_json(empty).is_zero());
}

TEST_CASE("ratio reports serialize degenerate cases without NaN") {
    SobolevParams params = SobolevParams::make(2, 0.8, 1);
    RatioReport r = verify_poincare(Polynomial::constant(2, 1.0), params);
    Json j = to_json(r);
    CHECK(j["degenerate"] == true);
    CHECK(j["ratio"].is_null());
    std::string dumped = j.dump();
    CHECK(dumped.find("nan") == std::string::npos);
    CHECK(dumped.find("inf") == std::string::npos);
    check_schema(j);
}

TEST_CASE("schema gate rejects foreign majors") {
    Json j = Json{{"schema_version", "2.0"}};
    CHECK_THROWS_AS(check_schema(j), InputError);
    CHECK_NOTHROW(check_schema(Json{{"schema_version", "1.3"}}));
    CHECK_THROWS_AS(check_schema(Json{{"no_version", 1}}), InputError);
}

TEST_CASE("run records carry tool, command, params and results") {
    Json rec = run_record("norm", Json{{"q", 1.0}}, Json::array());
    CHECK(rec["schema_version"] == kSchemaVersion);
    CHECK(rec["command"] == "norm");
    CHECK(rec.contains("timestamp"));
    CHECK(rec["params"]["q"] == 1.0);
}
