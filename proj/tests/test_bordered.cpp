#include <doctest.h>

#include "cabletau/acceptance.hpp"
#include "cabletau/bordered.hpp"
#include "cabletau/errors.hpp"
#include "cabletau/pairing.hpp"

using namespace cabletau;

namespace {

TypeDStructure cfd_of(const std::string& name, int framing) {
    auto [c, roles] = simplify_both(knot_library(name));
    return cfd_from_cfk({c, roles, framing});
}

}  // namespace

TEST_CASE("CFD of the zero-framed unknot complement is one loop") {
    TypeDStructure d = cfd_of("unknot", 0);
    REQUIRE(d.gens.size() == 1);
    CHECK(d.gens[0].iota == Idempotent::i1);
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges.begin()->label == ReebLabel::r12);
    CHECK(d.edges.begin()->src == d.edges.begin()->tgt);
    CHECK(d.check().empty());
}

TEST_CASE("CFD of trefoil complements match the golden fixtures") {
    CHECK(type_d_isomorphic(cfd_of("trefoil_rh", 2), reference_cfd_fixture(1)));
    CHECK(type_d_isomorphic(cfd_of("trefoil_lh", -2), reference_cfd_fixture(2)));
    CHECK_FALSE(type_d_isomorphic(cfd_of("trefoil_rh", 2), reference_cfd_fixture(2)));
}

TEST_CASE("unstable chain for framing below 2 tau") {
    // Right trefoil, framing 0: two intermediate generators, pattern
    // D1 / backward-D23 / backward-D3.
    TypeDStructure d = cfd_of("trefoil_rh", 0);
    CHECK(d.gens.size() == 7);
    int c = d.index_of("c"), a = d.index_of("a");
    int z1 = d.index_of("z1"), z2 = d.index_of("z2");
    REQUIRE(c >= 0);
    REQUIRE(z1 >= 0);
    REQUIRE(z2 >= 0);
    CHECK(d.edges.count({c, z1, ReebLabel::r1}));
    CHECK(d.edges.count({z2, z1, ReebLabel::r23}));
    CHECK(d.edges.count({a, z2, ReebLabel::r3}));
    CHECK(d.check().empty());
}

TEST_CASE("Type D condition over built-ins and framings") {
    for (const auto& name : knot_library_names()) {
        auto [c, roles] = simplify_both(knot_library(name));
        int vert_len = 0, horz_len = 0;
        for (const auto& [id, r] : roles.vertical)
            if (r.kind == RoleKind::source) vert_len += r.length;
        for (const auto& [id, r] : roles.horizontal)
            if (r.kind == RoleKind::source) horz_len += r.length;
        int t = tau(c);
        for (int n = -4; n <= 4; ++n) {
            TypeDStructure d = cfd_from_cfk({c, roles, n});
            CHECK(d.check().empty());
            CHECK(int(d.gens.size()) ==
                  int(c.gens.size()) + vert_len + horz_len + std::abs(2 * t - n));
            CHECK_FALSE(has_pure_23_cycle(d));
        }
    }
}

TEST_CASE("structure checks catch bad edges") {
    TypeDStructure d;
    d.gens = {{"x", Idempotent::i1}, {"y", Idempotent::i1}};
    d.edges.insert({0, 1, ReebLabel::r1});  // rho1 ends in iota2
    CHECK_FALSE(d.check().empty());
}

TEST_CASE("Type D condition counts empty-label compositions") {
    TypeDStructure d;
    d.gens = {{"x", Idempotent::i1},
              {"y", Idempotent::i2},
              {"z", Idempotent::i1},
              {"w", Idempotent::i1}};
    d.edges.insert({0, 1, ReebLabel::r1});
    d.edges.insert({1, 2, ReebLabel::r2});
    d.edges.insert({0, 3, ReebLabel::r12});
    d.edges.insert({3, 2, ReebLabel::empty});
    // paths x->y->z and x->w->z both carry rho12: condition holds
    CHECK(d.check().empty());
    d.edges.erase({3, 2, ReebLabel::empty});
    CHECK_FALSE(d.check().empty());
}

TEST_CASE("boundedness is cycle detection") {
    CHECK_FALSE(is_bounded(cfd_of("unknot", 0)));
    CHECK(is_bounded(cfd_of("trefoil_rh", 2)));
    CHECK_FALSE(is_bounded(cfd_of("figure8", 1)));
}

TEST_CASE("pure rho23 cycles") {
    CHECK_FALSE(has_pure_23_cycle(cfd_of("unknot", 0)));
    TypeDStructure d;
    d.gens = {{"x", Idempotent::i2}, {"y", Idempotent::i2}};
    d.edges.insert({0, 1, ReebLabel::r23});
    d.edges.insert({1, 0, ReebLabel::r23});
    CHECK(has_pure_23_cycle(d));
    CHECK_FALSE(is_bounded(d));
}

TEST_CASE("pattern module relations for small p") {
    TypeAModule m2 = cfa_p1(2);
    CHECK(m2.gens.size() == 3);
    int a = m2.index_of("a"), b1 = m2.index_of("b1"), b2 = m2.index_of("b2");

    auto rel = m2.relations_matching(b1, {});
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == std::pair<int, int>{b2, 1});  // m1(b1) = b2, shift 1

    rel = m2.relations_matching(a, {ReebLabel::r3, ReebLabel::r2});
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == std::pair<int, int>{a, 2});  // m3(a, r3, r2) = a, shift 2

    TypeAModule m3 = cfa_p1(3);
    rel = m3.relations_matching(m3.index_of("a"),
                                {ReebLabel::r3, ReebLabel::r2, ReebLabel::r1});
    REQUIRE(rel.size() == 1);
    CHECK(rel[0].first == m3.index_of("b1"));
    CHECK(rel[0].second == 1);  // m4(a, r3, r2, r1) = b1, shift 1

    CHECK_THROWS_AS(cfa_p1(1), Error);
}

TEST_CASE("pattern module has no spurious relations") {
    for (int p : {2, 3, 4}) {
        TypeAModule m = cfa_p1(p);
        int a = m.index_of("a");
        CHECK(m.relations_matching(a, {}).empty());
        CHECK(m.relations_matching(a, {ReebLabel::r12}).empty());
        CHECK(m.relations_matching(a, {ReebLabel::r123}).empty());
        std::vector<ReebLabel> run{ReebLabel::r3};
        for (int i = 0; i < 4; ++i) {
            CHECK(m.relations_matching(a, run).empty());
            run.push_back(ReebLabel::r23);
        }
    }
}

TEST_CASE("prefix matching drives lazy instantiation") {
    TypeAModule m = cfa_p1(2);
    int a = m.index_of("a"), b1 = m.index_of("b1");
    CHECK(m.prefix_matchable(a, {}));
    CHECK(m.prefix_matchable(a, {ReebLabel::r3}));
    CHECK(m.prefix_matchable(a, {ReebLabel::r3, ReebLabel::r23, ReebLabel::r23}));
    CHECK(m.prefix_matchable(a, {ReebLabel::r3, ReebLabel::r2}));
    CHECK_FALSE(m.prefix_matchable(a, {ReebLabel::r123}));
    CHECK_FALSE(m.prefix_matchable(a, {ReebLabel::r2}));
    CHECK_FALSE(m.prefix_matchable(b1, {ReebLabel::r3}));
    // p = 2 leaves no room for rho12 runs after the rho2
    CHECK_FALSE(m.prefix_matchable(a, {ReebLabel::r3, ReebLabel::r2, ReebLabel::r12}));
}

TEST_CASE("instantiated families satisfy the A-infinity conditions") {
    CHECK(a_infinity_violations(cfa_p1(2), 8).empty());
    CHECK(a_infinity_violations(cfa_p1(3), 6).empty());
}

TEST_CASE("enumerate lists each family up to the length cap") {
    TypeAModule m = cfa_p1(2);
    auto rels = m.enumerate(4);
    // lengths <= 4: family 1 (i = 0..2), family 2 (i = 0..1), family 3
    // (j = 0), family 4 (j = 1)
    CHECK(rels.size() == 7);
    for (const auto& r : rels) {
        CHECK(int(r.labels.size()) <= 4);
        CHECK(r.delta_a >= 0);
        if (!r.labels.empty()) {
            CHECK(composable(r.labels));
            CHECK(left_idempotent(r.labels.front()) ==
                  m.idempotent_of(m.index_of(r.input)));
            CHECK(right_idempotent(r.labels.back()) ==
                  m.idempotent_of(m.index_of(r.output)));
        }
    }
}
