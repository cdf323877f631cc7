#include <doctest.h>

#include "cabletau/cfk.hpp"
#include "cabletau/errors.hpp"

using namespace cabletau;

TEST_CASE("trefoil vertical roles") {
    auto [c, roles] = simplify_vertical(knot_library("trefoil_rh"));
    CHECK(roles.vertical_distinguished == "c");
    CHECK(roles.vertical.at("b").kind == RoleKind::source);
    CHECK(roles.vertical.at("b").partner == "a");
    CHECK(roles.vertical.at("b").length == 1);
    CHECK(roles.vertical.at("a").kind == RoleKind::target);
    CHECK(roles.vertical.at("c").kind == RoleKind::isolated);
}

TEST_CASE("trefoil horizontal roles") {
    auto [c, roles] = simplify_horizontal(knot_library("trefoil_rh"));
    CHECK(roles.horizontal_distinguished == "a");
    CHECK(roles.horizontal.at("b").kind == RoleKind::source);
    CHECK(roles.horizontal.at("b").partner == "c");
    CHECK(roles.horizontal.at("b").length == 1);

    auto [l, lroles] = simplify_horizontal(knot_library("trefoil_lh"));
    CHECK(lroles.horizontal_distinguished == "c");
    CHECK(lroles.horizontal.at("a").kind == RoleKind::source);
    CHECK(lroles.horizontal.at("a").partner == "b");
    CHECK(lroles.horizontal.at("a").length == 1);
}

TEST_CASE("unknot is trivially simplified") {
    auto [c, roles] = simplify_both(knot_library("unknot"));
    CHECK(roles.vertical_distinguished == "u");
    CHECK(roles.horizontal_distinguished == "u");
}

TEST_CASE("figure eight roles and distinguished element") {
    auto [c, roles] = simplify_both(knot_library("figure8"));
    CHECK(roles.vertical.at("d").kind == RoleKind::source);
    CHECK(roles.vertical.at("d").partner == "a");
    CHECK(roles.vertical.at("c").kind == RoleKind::source);
    CHECK(roles.vertical.at("c").partner == "b");
    CHECK(roles.vertical_distinguished == "e");
    // The same element is distinguished on both sides.
    CHECK(roles.horizontal_distinguished == "e");
    CHECK(roles.horizontal.at("a").kind == RoleKind::source);
    CHECK(roles.horizontal.at("a").partner == "b");
    CHECK(roles.horizontal.at("d").kind == RoleKind::source);
    CHECK(roles.horizontal.at("d").partner == "c");
}

TEST_CASE("simplified bases preserve the invariants") {
    for (const char* expr : {"trefoil_rh", "figure8"}) {
        CfkComplex c = knot_library(expr);
        ConcordanceInvariants before = invariants(c);
        auto [s, roles] = simplify_both(c);
        CHECK(validate(s).ok());
        ConcordanceInvariants after = invariants(s);
        CHECK(before.tau == after.tau);
        CHECK(before.nu == after.nu);
        CHECK(before.nu_prime == after.nu_prime);
        CHECK(before.epsilon == after.epsilon);
    }
}

TEST_CASE("connected sums acquire simultaneous bases") {
    CfkComplex r = knot_library("trefoil_rh");
    CfkComplex rr = connected_sum(r, r);
    auto [s, roles] = simplify_both(rr);
    CHECK(validate(s).ok());
    int vertical_isolated = 0, horizontal_isolated = 0;
    for (const auto& [id, role] : roles.vertical)
        if (role.kind == RoleKind::isolated) ++vertical_isolated;
    for (const auto& [id, role] : roles.horizontal)
        if (role.kind == RoleKind::isolated) ++horizontal_isolated;
    CHECK(vertical_isolated == 1);
    CHECK(horizontal_isolated == 1);

    CfkComplex rl = connected_sum(r, mirror(r));
    auto [s2, roles2] = simplify_both(rl);
    CHECK(validate(s2).ok());
    // epsilon = 0: one element is distinguished on both sides
    CHECK(roles2.vertical_distinguished == roles2.horizontal_distinguished);
}

TEST_CASE("epsilon sign matches the distinguished element's horizontal role") {
    // The vertically distinguished element is the head of a horizontal arrow
    // when epsilon = 1, the tail when epsilon = -1, isolated when epsilon = 0.
    auto role_of = [](const char* name) {
        CfkComplex c = knot_library(name);
        auto [s, roles] = simplify_both(c);
        return roles.horizontal.at(roles.vertical_distinguished).kind;
    };
    CHECK(role_of("trefoil_rh") == RoleKind::target);
    CHECK(role_of("trefoil_lh") == RoleKind::source);
    CHECK(role_of("figure8") == RoleKind::isolated);
    CHECK(epsilon(knot_library("trefoil_rh")) == 1);
    CHECK(epsilon(knot_library("trefoil_lh")) == -1);
    CHECK(epsilon(knot_library("figure8")) == 0);
}

TEST_CASE("simplify rejects unreduced input") {
    CfkComplex c;
    c.gens = {{"x", 0, {}}, {"y", 0, {}}};
    c.toggle(0, 1, 0);
    CHECK_THROWS_AS(simplify_vertical(c), Error);
    CHECK_THROWS_AS(simplify_both(c), Error);
}
