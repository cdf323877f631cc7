#include <doctest.h>

#include "cabletau/cfk.hpp"
#include "cabletau/errors.hpp"
#include "cabletau/io.hpp"

using namespace cabletau;

TEST_CASE("dump then parse then dump is byte-identical") {
    for (const auto& name : knot_library_names()) {
        CfkComplex c = knot_library(name);
        std::string once = dump_complex(c);
        std::string twice = dump_complex(parse_complex(once));
        CHECK(once == twice);
    }
    CfkComplex sum = connected_sum(knot_library("trefoil_rh"), knot_library("figure8"));
    CHECK(dump_complex(sum) == dump_complex(parse_complex(dump_complex(sum))));
}

TEST_CASE("parse round-trips content") {
    CfkComplex c = knot_library("trefoil_rh");
    CfkComplex back = parse_complex(dump_complex(c));
    CHECK(back.name == c.name);
    CHECK(back.gens.size() == c.gens.size());
    CHECK(back.arrows.size() == c.arrows.size());
    CHECK(invariants(back).tau == 1);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_complex("not json at all"), Error);
    CHECK_THROWS_AS(parse_complex("{}"), Error);
    CHECK_THROWS_AS(parse_complex(R"({"generators": [{"id": "x"}]})"), Error);
    CHECK_THROWS_AS(parse_complex(R"({
        "generators": [{"id": "x", "alexander": 0}],
        "arrows": [{"from": "x", "to": "nope", "u_power": 0}]})"),
                    Error);
    CHECK_THROWS_AS(load_complex_file("/nonexistent/path.json"), Error);
}

TEST_CASE("knot expression grammar") {
    CHECK(parse_knot_expression("trefoil_rh").gens.size() == 3);
    CHECK(parse_knot_expression("mirror(trefoil_rh)").gens.size() == 3);
    CHECK(parse_knot_expression("mirror(mirror(figure8))").gens.size() == 5);
    CHECK(parse_knot_expression("trefoil_rh#mirror(trefoil_rh)").gens.size() == 9);
    CHECK(parse_knot_expression(" trefoil_rh # unknot ").gens.size() == 3);
    CHECK(parse_knot_expression("mirror(trefoil_rh#trefoil_lh)").gens.size() == 9);
    CHECK_THROWS_AS(parse_knot_expression("granny"), Error);
    CHECK_THROWS_AS(parse_knot_expression("mirror(trefoil_rh"), Error);
    CHECK_THROWS_AS(parse_knot_expression("trefoil_rh#"), Error);
    CHECK_THROWS_AS(parse_knot_expression("trefoil_rh)"), Error);
    CHECK_THROWS_AS(parse_knot_expression("mirror trefoil_rh"), Error);
}

TEST_CASE("expression evaluates to the expected invariants") {
    CfkComplex c = parse_knot_expression("trefoil_rh#mirror(trefoil_rh)");
    ConcordanceInvariants inv = invariants(c);
    CHECK(inv.tau == 0);
    CHECK(inv.epsilon == 0);
}
