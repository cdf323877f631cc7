#include <doctest.h>

#include <algorithm>

#include "cabletau/cfk.hpp"
#include "cabletau/errors.hpp"

using namespace cabletau;

namespace {

// Isomorphism of complexes up to renaming: same Alexander/Maslov data and
// the same arrow set under some bijection of generators.
bool complexes_isomorphic(const CfkComplex& a, const CfkComplex& b) {
    if (a.gens.size() != b.gens.size() || a.arrows.size() != b.arrows.size())
        return false;
    const int n = int(a.gens.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool gens_ok = true;
        for (int i = 0; i < n && gens_ok; ++i) {
            const auto& ga = a.gens[i];
            const auto& gb = b.gens[perm[i]];
            if (ga.alexander != gb.alexander) gens_ok = false;
            if (ga.maslov && gb.maslov && *ga.maslov != *gb.maslov) gens_ok = false;
        }
        if (!gens_ok) continue;
        bool arrows_ok = true;
        for (const auto& ar : a.arrows)
            if (!b.arrows.count({perm[ar.src], perm[ar.tgt], ar.u_power})) arrows_ok = false;
        if (arrows_ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("library complexes validate") {
    for (const auto& name : knot_library_names()) {
        CfkComplex c = knot_library(name);
        ValidationReport rep = validate(c);
        CHECK(rep.ok());
        CHECK(rep.warnings.empty());
    }
    CHECK_THROWS_AS(knot_library("granny"), Error);
}

TEST_CASE("validation catches asymmetric Alexander multiset") {
    CfkComplex c = knot_library("trefoil_rh");
    c.gens.pop_back();  // drop a (A = -1); d^2 still fine, symmetry broken
    std::set<CfkArrow> keep;
    for (const auto& ar : c.arrows)
        if (ar.src < 2 && ar.tgt < 2) keep.insert(ar);
    c.arrows = keep;
    ValidationReport rep = validate(c);
    CHECK(rep.ok());  // warning, not error
    CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("validation catches broken differentials") {
    CfkComplex c;
    c.gens = {{"x", 1, {}}, {"y", 0, {}}, {"z", -1, {}}};
    c.toggle(0, 1, 0);
    c.toggle(1, 2, 0);  // d^2 x = z, odd
    ValidationReport rep = validate(c);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& e : rep.errors)
        if (e.find("d^2") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validation catches unreduced and misgraded arrows") {
    CfkComplex c;
    c.gens = {{"x", 0, {}}, {"y", 0, {}}};
    c.toggle(0, 1, 0);  // u_power 0, no Alexander drop: curable by reduce()
    CHECK(validate(c).ok());
    CHECK_FALSE(validate(c).reduced());

    CfkComplex up;
    up.gens = {{"x", 0, {}}, {"y", 1, {}}};
    up.toggle(0, 1, 0);  // points upward
    CHECK_FALSE(validate(up).ok());

    CfkComplex maslov;
    maslov.gens = {{"x", 1, 0}, {"y", 0, 1}};  // M rises along the arrow
    maslov.toggle(0, 1, 0);
    CHECK_FALSE(validate(maslov).ok());
}

TEST_CASE("reduce cancels filtration-preserving pairs") {
    CfkComplex acyclic;
    acyclic.gens = {{"x", 0, {}}, {"y", 0, {}}};
    acyclic.toggle(0, 1, 0);
    CfkComplex r = reduce(acyclic);
    CHECK(r.gens.empty());

    CfkComplex trefoil = knot_library("trefoil_rh");
    CHECK(reduce(trefoil).gens.size() == 3);  // already reduced

    // Stabilize the trefoil by a cancelling pair hung off generator b.
    CfkComplex stab = trefoil;
    stab.gens.push_back({"p", 0, {}});
    stab.gens.push_back({"q", 0, {}});
    stab.toggle(3, 4, 0);          // p -> q
    stab.toggle(1, 4, 1);          // b -> U q rides along
    CHECK(validate(stab).ok());
    CHECK_FALSE(validate(stab).reduced());
    CfkComplex back = reduce(stab);
    CHECK(validate(back).reduced());
    CHECK(back.gens.size() == 3);
    CHECK(complexes_isomorphic(back, trefoil));
}

TEST_CASE("mirror examples") {
    CfkComplex r = knot_library("trefoil_rh");
    CfkComplex l = knot_library("trefoil_lh");
    CHECK(complexes_isomorphic(mirror(r), l));
    CfkComplex f8 = knot_library("figure8");
    CHECK(complexes_isomorphic(mirror(f8), f8));  // amphichiral

    // Involution on the nose (ids preserved).
    CfkComplex rr = mirror(mirror(r));
    CHECK(rr.gens.size() == r.gens.size());
    CHECK(rr.arrows == r.arrows);
    for (size_t i = 0; i < r.gens.size(); ++i) {
        CHECK(rr.gens[i].id == r.gens[i].id);
        CHECK(rr.gens[i].alexander == r.gens[i].alexander);
    }
}

TEST_CASE("reflect is an exact involution preserving validity") {
    for (const auto& name : knot_library_names()) {
        CfkComplex c = knot_library(name);
        CfkComplex rc = reflect(c);
        CHECK(validate(rc).ok());
        CfkComplex rrc = reflect(rc);
        CHECK(rrc.arrows == c.arrows);
        for (size_t i = 0; i < c.gens.size(); ++i)
            CHECK(rrc.gens[i].alexander == c.gens[i].alexander);
    }
}

TEST_CASE("connected sum with the unknot is the identity") {
    CfkComplex r = knot_library("trefoil_rh");
    CfkComplex s = connected_sum(r, knot_library("unknot"));
    CHECK(complexes_isomorphic(s, r));
}

TEST_CASE("connected sums of trefoils") {
    CfkComplex r = knot_library("trefoil_rh");
    CfkComplex rr = connected_sum(r, r);
    CHECK(validate(rr).ok());
    CHECK(rr.gens.size() == 9);
    CHECK(tau(rr) == 2);
    CHECK(epsilon(rr) == 1);

    CfkComplex rl = connected_sum(r, mirror(r));
    CHECK(validate(rl).ok());
    CHECK(tau(rl) == 0);
    CHECK(epsilon(rl) == 0);
}

TEST_CASE("alexander polynomial") {
    auto poly = [](const CfkComplex& c) { return alexander_polynomial(c); };
    CHECK(poly(knot_library("unknot")) == std::map<int, long long>{{0, 1}});
    CHECK(poly(knot_library("trefoil_rh")) ==
          std::map<int, long long>{{1, 1}, {0, -1}, {-1, 1}});
    CHECK(poly(knot_library("trefoil_lh")) ==
          std::map<int, long long>{{1, 1}, {0, -1}, {-1, 1}});
    CHECK(poly(knot_library("figure8")) ==
          std::map<int, long long>{{1, -1}, {0, 3}, {-1, -1}});

    CfkComplex no_maslov;
    no_maslov.gens = {{"x", 0, {}}};
    CHECK_THROWS_AS(alexander_polynomial(no_maslov), MissingMaslov);
}
