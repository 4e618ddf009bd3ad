#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "hilb/fock.hpp"
#include "hilb/hilbloc.hpp"
#include "hilb/jack.hpp"
#include "hilb/json_io.hpp"
#include "hilb/partition.hpp"
#include "hilb/symfunc.hpp"

using namespace hilb;
using nlohmann::json;

TEST_CASE("rational function wire format") {
    RationalFunction f(Poly{Rational(1, 2), Rational(0), Rational(3)},
                       Poly{Rational(1), Rational(1)});
    json j = to_json(f);
    CHECK(j["num"].is_array());
    CHECK(j["num"][0] == "1/2");
    CHECK(rational_function_from_json(j) == f);
    CHECK(rational_function_from_json(to_json(RationalFunction(0))) ==
          RationalFunction(0));

    CHECK_THROWS_AS(rational_function_from_json(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(rational_function_from_json(json{{"num", json::array()}}),
                    std::invalid_argument);
    json bad = to_json(f);
    bad["den"] = json{{"x", 1}};
    CHECK_THROWS_AS(rational_function_from_json(bad), std::invalid_argument);
    bad = to_json(f);
    bad["num"][0] = 7;  // numbers must arrive as strings
    CHECK_THROWS_AS(rational_function_from_json(bad), std::invalid_argument);
}

TEST_CASE("graded scalar wire format") {
    GradedScalar g = gs_kx() + gs_one().scale(Rational(1, 3));
    json j = to_json(g);
    CHECK(j["terms"].is_object());
    CHECK(graded_scalar_from_json(j) == g);
    CHECK(graded_scalar_from_json(to_json(GradedScalar())) == GradedScalar());

    json bad = j;
    bad["terms"] = json{{"one", to_json(RationalFunction(1))}};
    CHECK_THROWS_AS(graded_scalar_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(graded_scalar_from_json(json(3)), std::invalid_argument);
}

TEST_CASE("partition wire format") {
    Partition la{4, 2, 1};
    json j = to_json(la);
    CHECK(j == json::array({4, 2, 1}));
    CHECK(partition_from_json(j) == la);
    CHECK(partition_from_json(json::array()) == Partition{});

    CHECK_THROWS_AS(partition_from_json(json{{"a", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::array({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::array({"2"})), std::invalid_argument);
}

TEST_CASE("symmetric function wire formats") {
    SymFuncR f = jack_function(Partition{2});
    json j = to_json(f);
    CHECK(j["basis"] == "m");
    CHECK(symfunc_r_from_json(j) == f);

    SymFuncG g = fixed_to_monomial(SymFuncG::unit(Basis::fixed_point, Partition{2}, gs_one()));
    CHECK(symfunc_g_from_json(to_json(g)) == g);
    SymFuncG fx = SymFuncG::unit(Basis::fixed_point, Partition{2, 1}, gs_eps2());
    json jfx = to_json(fx);
    CHECK(jfx["basis"] == "fix");
    CHECK(symfunc_g_from_json(jfx) == fx);

    CHECK(symfunc_r_from_json(to_json(SymFuncR())) == SymFuncR());

    json bad = j;
    bad["basis"] = "q";
    CHECK_THROWS_AS(symfunc_r_from_json(bad), std::invalid_argument);
    bad = j;
    bad["terms"] = json{{"partition", json::array()}};
    CHECK_THROWS_AS(symfunc_r_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(symfunc_r_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("laurent character wire format") {
    LaurentChar chi = tangent_char(Partition{2, 1});
    json j = to_json(chi);
    CHECK(j["weights"].is_array());
    CHECK(laurent_char_from_json(j) == chi);
    CHECK(laurent_char_from_json(to_json(LaurentChar())) == LaurentChar());

    json bad = j;
    bad["weights"][0].erase("mult");
    CHECK_THROWS_AS(laurent_char_from_json(bad), std::invalid_argument);
    bad = j;
    bad["weights"][0]["mult"] = 0;
    CHECK_THROWS_AS(laurent_char_from_json(bad), std::invalid_argument);
}

TEST_CASE("report wire format") {
    Report rep{"demo", 3, 12, {{"case", "a", "b"}}};
    json j = to_json(rep);
    CHECK(j["suite"] == "demo");
    CHECK(j["maxdeg"] == 3);
    CHECK(j["checks"] == 12);
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["input"] == "case");
    CHECK(j["failures"][0]["lhs"] == "a");
    CHECK(j["failures"][0]["rhs"] == "b");
}

TEST_CASE("round trips preserve exact arithmetic") {
    for (const Partition& la : enumerate(5)) {
        SymFuncR f = jack_function(la);
        CHECK(symfunc_r_from_json(to_json(f)) == f);
        GradedScalar e = euler_class(tangent_char(la));
        CHECK(graded_scalar_from_json(to_json(e)) == e);
        CHECK(laurent_char_from_json(to_json(tangent_char(la))) == tangent_char(la));
    }
}
