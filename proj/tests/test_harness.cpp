// Fault-injection checks of the selftest harness itself: the checkers must
// notice a sabotaged multiplication table and a flipped chain direction.
#include <doctest.h>

#include "cabletau/acceptance.hpp"
#include "cabletau/cfk.hpp"
#include "cabletau/pairing.hpp"

using namespace cabletau;

TEST_CASE("algebra consistency checker accepts the real table") {
    CHECK(algebra_tables_consistent(
        [](AlgebraElement a, AlgebraElement b) { return multiply(a, b); }));
}

TEST_CASE("algebra consistency checker rejects a sabotaged product") {
    auto sabotaged = [](AlgebraElement a, AlgebraElement b) {
        if (a == AlgebraElement::r1 && b == AlgebraElement::r2)
            return AlgebraElement::r123;
        return multiply(a, b);
    };
    CHECK_FALSE(algebra_tables_consistent(sabotaged));
}

TEST_CASE("fixture comparison rejects a flipped unstable chain") {
    auto [c, roles] = simplify_both(knot_library("trefoil_rh"));
    TypeDStructure d = cfd_from_cfk({c, roles, 2});
    CHECK(type_d_isomorphic(d, reference_cfd_fixture(1)));

    // reverse the unstable-chain edge
    TypeDStructure flipped = d;
    for (const auto& e : d.edges)
        if (e.label == ReebLabel::r12) {
            flipped.edges.erase(e);
            flipped.edges.insert({e.tgt, e.src, e.label});
        }
    CHECK_FALSE(type_d_isomorphic(flipped, reference_cfd_fixture(1)));
}

TEST_CASE("U-tower oracle stands on its own") {
    CHECK(tau_u_tower(knot_library("unknot")) == 0);
    CHECK(tau_u_tower(knot_library("trefoil_rh")) == 1);
    CHECK(tau_u_tower(knot_library("trefoil_lh")) == -1);
    CHECK(tau_u_tower(knot_library("figure8")) == 0);
    CfkComplex rr = connected_sum(knot_library("trefoil_rh"), knot_library("trefoil_rh"));
    CHECK(tau_u_tower(rr) == 2);
    CHECK(tau_u_tower(rr) == tau(rr));
}
