#include <doctest.h>

#include "cabletau/bordered.hpp"
#include "cabletau/errors.hpp"
#include "cabletau/io.hpp"
#include "cabletau/pairing.hpp"

using namespace cabletau;

namespace {

TypeDStructure cfd_of(const std::string& expr, int framing) {
    auto [c, roles] = simplify_both(reduce(parse_knot_expression(expr)));
    return cfd_from_cfk({c, roles, framing});
}

}  // namespace

TEST_CASE("pattern tensor zero-framed unknot: a single generator") {
    FilteredComplex fc = box_tensor(cfa_p1(2), cfd_of("unknot", 0));
    CHECK(fc.gens.size() == 1);
    CHECK(fc.arrows.empty());
    CHECK(total_homology_rank(fc) == 1);
}

TEST_CASE("tensor outputs are complexes of total rank one") {
    for (const char* expr : {"trefoil_rh", "figure8"})
        for (int n : {-1, 0, 1}) {
            FilteredComplex fc = box_tensor(cfa_p1(2), cfd_of(expr, n));
            CHECK(fc.chain().d_squared_zero());
            CHECK(total_homology_rank(fc) == 1);
        }
}

TEST_CASE("homology rank basics") {
    FilteredComplex empty;
    CHECK(total_homology_rank(empty) == 0);
    FilteredComplex pair;
    pair.gens = {{"x", "m"}, {"y", "m"}};
    pair.arrows.insert({0, 1, 1});
    CHECK(total_homology_rank(pair) == 0);
}

TEST_CASE("reduce_filtered cancels exactly the drop-0 arrows") {
    FilteredComplex fc;
    fc.gens = {{"x", "m"}, {"y", "m"}, {"u", "m"}, {"v", "m"}};
    fc.arrows.insert({0, 1, 0});
    fc.arrows.insert({2, 1, 2});
    fc.arrows.insert({0, 3, 1});
    FilteredComplex r = reduce_filtered(fc);
    REQUIRE(r.gens.size() == 2);
    // zig-zag u -> v with drop 2 + 1 - 0
    REQUIRE(r.arrows.size() == 1);
    CHECK(r.arrows.begin()->drop == 3);
}

TEST_CASE("pinning a single component is unique") {
    FilteredComplex fc;
    fc.gens = {{"x", "m"}, {"y", "m"}, {"z", "m"}};
    fc.arrows.insert({0, 1, 2});  // x two above y
    fc.arrows.insert({0, 2, 1});  // x one above z
    PinnedGrading pin = pin_gradings(fc);
    CHECK(pin.num_components == 1);
    CHECK_FALSE(pin.ambiguous);
    REQUIRE(pin.shift_solutions.size() == 1);
    CHECK(pin.absolute[0] == 1);
    CHECK(pin.absolute[1] == -1);
    CHECK(pin.absolute[2] == 0);
}

TEST_CASE("interchangeable components are flagged ambiguous") {
    FilteredComplex fc;
    fc.gens = {{"x", "m"}, {"y", "m"}};
    PinnedGrading pin = pin_gradings(fc, 3);
    CHECK(pin.ambiguous);
    CHECK(pin.shift_solutions.size() > 1);
}

TEST_CASE("conflicting drops raise an error") {
    FilteredComplex fc;
    fc.gens = {{"x", "m"}, {"y", "m"}};
    fc.arrows.insert({0, 1, 1});
    fc.arrows.insert({0, 1, 2});
    CHECK_THROWS_AS(pin_gradings(fc), InconsistentRelativeGrading);
}

TEST_CASE("profiles without a symmetric placement raise an error") {
    FilteredComplex fc;
    fc.gens = {{"x", "m"}, {"y", "m"}, {"z", "m"}};
    fc.arrows.insert({0, 1, 1});
    fc.arrows.insert({2, 1, 0});  // profile {1, 0, 0}: no symmetric shift
    CHECK_THROWS_AS(pin_gradings(fc), NoSymmetricPinning);
}

TEST_CASE("termination guard rejects pure-23 cycles") {
    TypeDStructure d;
    d.gens = {{"x", Idempotent::i2}, {"y", Idempotent::i2}};
    d.edges.insert({0, 1, ReebLabel::r23});
    d.edges.insert({1, 0, ReebLabel::r23});
    CHECK_THROWS_AS(box_tensor(cfa_p1(2), d), UnboundedPairing);
}

TEST_CASE("empty-label edges pair with the unit relation") {
    TypeDStructure d;
    d.gens = {{"x", Idempotent::i1}, {"y", Idempotent::i1}};
    d.edges.insert({0, 1, ReebLabel::empty});
    TypeAModule m = TypeAModule::from_relations({{"g", Idempotent::i1}}, {});
    FilteredComplex fc = box_tensor(m, d);
    REQUIRE(fc.gens.size() == 2);
    REQUIRE(fc.arrows.size() == 1);
    CHECK(fc.arrows.begin()->drop == 0);
}

TEST_CASE("cable tau through the tensor pipeline") {
    CHECK(cable_tau_tensor(knot_library("trefoil_rh"), 2, 1).tau == 3);
    CHECK(cable_tau_tensor(knot_library("trefoil_lh"), 2, -1).tau == -2);
    CHECK(cable_tau_tensor(knot_library("figure8"), 2, 1).tau == 1);
}

TEST_CASE("survivor identity matches the expected generator") {
    // epsilon = 1: a (x) horizontally distinguished element survives.
    auto [rc, roles] = simplify_both(knot_library("trefoil_rh"));
    CableTensorResult r = cable_tau_tensor(knot_library("trefoil_rh"), 2, 1);
    CHECK(r.diagnostics.survivor_pattern_gen == "a");
    CHECK(r.diagnostics.survivor_companion_gen == roles.horizontal_distinguished);

    // epsilon = -1: b1 (x) the D1-successor of the distinguished element, and
    // it sits p - 1 above a (x) x'_0 inside its component.
    auto [lc, lroles] = simplify_both(knot_library("trefoil_lh"));
    const int p = 2, n = -1;
    CableTensorResult rl = cable_tau_tensor(knot_library("trefoil_lh"), p, n);
    CHECK(rl.diagnostics.survivor_pattern_gen == "b1");
    CHECK(rl.diagnostics.survivor_companion_gen ==
          lroles.horizontal_distinguished + "v1");

    TypeDStructure d = cfd_from_cfk({lc, lroles, n});
    FilteredComplex fc = box_tensor(cfa_p1(p), d);
    auto comps = pin_detail::split_components(fc);
    int surv = -1, ax = -1;
    for (int i = 0; i < int(fc.gens.size()); ++i) {
        if (fc.gens[i].first == "b1" &&
            fc.gens[i].second == lroles.horizontal_distinguished + "v1")
            surv = i;
        if (fc.gens[i].first == "a" &&
            fc.gens[i].second == lroles.horizontal_distinguished)
            ax = i;
    }
    REQUIRE(surv >= 0);
    REQUIRE(ax >= 0);
    CHECK(comps.comp[surv] == comps.comp[ax]);
    CHECK(comps.relative[surv] - comps.relative[ax] == p - 1);
}

TEST_CASE("figure-eight tensor contains the torus pattern summand") {
    CableTensorResult r = cable_tau_tensor(knot_library("figure8"), 2, 0);
    FilteredComplex upattern =
        reduce_filtered(box_tensor(cfa_p1(2), cfd_of("unknot", 0)));
    CHECK(contains_filtered_summand(r.diagnostics.reduced, upattern));

    // and not conversely (the summand is proper)
    CHECK_FALSE(contains_filtered_summand(upattern, r.diagnostics.reduced));
}

TEST_CASE("dump is stable and sorted") {
    FilteredComplex fc;
    fc.gens = {{"b", "y"}, {"a", "x"}};
    fc.arrows.insert({0, 1, 2});
    std::string d = fc.dump();
    CHECK(d == "generators:\n  a|x\n  b|y\narrows:\n  b|y -2-> a|x\n");
}

TEST_CASE("pinned dump lists components and gradings") {
    FilteredComplex fc;
    fc.gens = {{"b", "y"}, {"a", "x"}};
    fc.arrows.insert({0, 1, 2});
    PinnedGrading pin = pin_gradings(fc);
    std::string d = dump_pinned(fc, pin);
    CHECK(d.find("a|x c0 r-2 A-1") != std::string::npos);
    CHECK(d.find("b|y c0 r0 A1") != std::string::npos);
    CHECK(d.find("components: 1") != std::string::npos);
}
