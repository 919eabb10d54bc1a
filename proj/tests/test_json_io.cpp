#include <catch2/catch_amalgamated.hpp>

#include "wittlab/json_io.hpp"
#include "wittlab/random_instances.hpp"

using namespace wittlab;

TEST_CASE("module JSON round trip preserves arbitrary precision") {
    QuadraticModule m(FormParameter::symmetric_zero(), 2,
                      Mat(2, 2, {Int("123456789012345678901234567890") * 2, 7, 7, 0}),
                      {MuValue(LambdaSub::zero, Int("123456789012345678901234567890")),
                       MuValue(LambdaSub::zero, 0)});
    REQUIRE(validate(m).ok);
    json j = module_to_json(m);
    REQUIRE(j["gram"][0][0].is_string());
    QuadraticModule back = json_to_module(j);
    REQUIRE(back.gram == m.gram);
    REQUIRE(back.mu[0] == m.mu[0]);
    REQUIRE(back.param == m.param);
}

TEST_CASE("module JSON accepts plain numbers too") {
    json j;
    j["epsilon"] = -1;
    j["lambda"] = "even";
    j["gram"] = json::array({json::array({0, 1}), json::array({-1, 0})});
    j["mu"] = json::array({0, 1});
    QuadraticModule m = json_to_module(j);
    REQUIRE(m.rank == 2);
    REQUIRE(m.mu[1].value() == 1);
    REQUIRE(validate(m).ok);
}

TEST_CASE("bad module JSON is rejected") {
    json j;
    j["epsilon"] = -1;
    j["lambda"] = "half";
    j["gram"] = json::array();
    REQUIRE_THROWS_AS(json_to_module(j), input_error);
    j["lambda"] = "even";
    j["gram"] = json::array({json::array({"0", "1"})});
    REQUIRE_THROWS_AS(json_to_module(j), input_error);  // not square
}

TEST_CASE("complex JSON round trip") {
    auto x = SimplicialComplex::from_facets(4, {{0, 1, 2}, {2, 3}});
    json j = complex_to_json(x);
    REQUIRE(j["vertices"] == "4");
    auto back = json_to_complex(j);
    REQUIRE(back.facets() == x.facets());

    auto flag = SimplicialComplex::flag_from_graph(4, {{0, 1}, {1, 2}, {2, 0}});
    json jf = complex_to_json(flag);
    REQUIRE(jf["flag"].get<bool>());
    auto back_flag = json_to_complex(jf);
    REQUIRE(back_flag.facets() == flag.facets());
}

TEST_CASE("vectors and move words serialise as tagged records") {
    HVector v(FormParameter::skew_even(), {3, -2, 1, 0});
    json jv = hvector_to_json(v);
    REQUIRE(jv[0] == "3");
    REQUIRE(json_to_vec(jv) == v.coords);

    auto red = reduce_to_first_block(HVector(FormParameter::skew_even(), {0, 0, 1, 0}));
    json jw = word_to_json(red.word);
    MoveWord back;
    for (const auto& e : jw) back.push_back(json_to_move(e));
    REQUIRE(back == red.word);
    for (const auto& e : jw) {
        REQUIRE(e.contains("move"));
        if (e["move"] == "rot") {
            REQUIRE(e["block"].is_number());
            REQUIRE(e["sign"].is_number());
        }
    }
}

TEST_CASE("homology report serialises degrees in order") {
    auto h = homology(SimplicialComplex::simplex_boundary(3), 1);
    json j = homology_to_json(h);
    REQUIRE(j.size() == 2);
    REQUIRE(j[0]["degree"] == "0");
    REQUIRE(j[0]["betti"] == "1");
    REQUIRE(j[1]["betti"] == "1");
    REQUIRE(j[1]["torsion"].empty());
}

TEST_CASE("json dumps are deterministic") {
    QuadraticModule m = hyperbolic_module(FormParameter::skew_even(), 2);
    REQUIRE(module_to_json(m).dump(2) == module_to_json(m).dump(2));
}
