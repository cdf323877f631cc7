#include <doctest.h>

#include <numeric>

#include "cabletau/errors.hpp"
#include "cabletau/formulas.hpp"

using namespace cabletau;

TEST_CASE("cable tau formula, three cases") {
    CHECK(cable_tau_formula({1, 1}, {2, 3}) == 3);
    CHECK(cable_tau_formula({0, 0}, {3, -2}) == -1);
    CHECK(cable_tau_formula({0, 0}, {2, 1}) == 0);
    CHECK(cable_tau_formula({-1, -1}, {2, -1}) == -2);
    CHECK(cable_tau_formula({2, 1}, {3, 7}) == 12);
}

TEST_CASE("cable epsilon formula") {
    CHECK(cable_epsilon_formula({5, 1}, {2, 9}) == 1);
    CHECK(cable_epsilon_formula({-2, -1}, {4, 3}) == -1);
    CHECK(cable_epsilon_formula({0, 0}, {2, 1}) == 0);
    CHECK(cable_epsilon_formula({0, 0}, {2, -1}) == 0);
    CHECK(cable_epsilon_formula({0, 0}, {2, -3}) == -1);
    CHECK(cable_epsilon_formula({0, 0}, {2, 3}) == 1);
}

TEST_CASE("torus knot invariants") {
    KnotInvariantPair t23 = torus_knot_invariants({2, 3});
    CHECK(t23.tau == 1);
    CHECK(t23.epsilon == 1);
    KnotInvariantPair t2m3 = torus_knot_invariants({2, -3});
    CHECK(t2m3.tau == -1);
    CHECK(t2m3.epsilon == -1);
    KnotInvariantPair t31 = torus_knot_invariants({3, 1});
    CHECK(t31.tau == 0);
    CHECK(t31.epsilon == 0);
}

TEST_CASE("iterated cables fold left") {
    KnotInvariantPair r{1, 1};
    KnotInvariantPair once = iterated_cable(r, {{2, 3}});
    CHECK(once.tau == 3);
    CHECK(once.epsilon == 1);
    KnotInvariantPair twice = iterated_cable({0, 0}, {{2, 3}, {2, 7}});
    CHECK(twice.tau == 5);
    CHECK(twice.epsilon == 1);
    KnotInvariantPair none = iterated_cable({-2, -1}, {});
    CHECK(none.tau == -2);
    CHECK(none.epsilon == -1);
}

TEST_CASE("four-genus lower bound") {
    CHECK(g4_lower_bound({0, 1}) == 1);
    CHECK(g4_lower_bound({2, 1}) == 2);
    CHECK(g4_lower_bound({0, 0}) == 0);
    CHECK(g4_lower_bound({-3, -1}) == 3);
    CHECK(g4_lower_bound({3, -1}) == 4);
}

TEST_CASE("witness pairs have equal tau and opposite epsilon") {
    for (int n = -3; n <= 3; ++n) {
        auto [wp, wm] = corollary_witnesses(n);
        CHECK(wp.invariants.tau == n);
        CHECK(wp.invariants.epsilon == 1);
        CHECK(wm.invariants.tau == n);
        CHECK(wm.invariants.epsilon == -1);
        // cables always separate them, by exactly p - 1
        for (int p : {2, 3})
            for (int q : {-7, -5, 5, 7}) {
                if (std::gcd(p, q) != 1) continue;
                int tp = cable_tau_formula(wp.invariants, {p, q});
                int tm = cable_tau_formula(wm.invariants, {p, q});
                CHECK(tm - tp == p - 1);
            }
    }
}

TEST_CASE("connected sum epsilon rules") {
    CHECK(connected_sum_epsilon(1, 1) == 1);
    CHECK(connected_sum_epsilon(0, -1) == -1);
    CHECK(connected_sum_epsilon(-1, 0) == -1);
    CHECK(connected_sum_epsilon(0, 0) == 0);
    CHECK_FALSE(connected_sum_epsilon(1, -1).has_value());
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate_spec({1, 3}), Error);
    CHECK_THROWS_AS(validate_spec({2, 4}), Error);
    CHECK_THROWS_AS(validate_spec({2, 0}), Error);
    CHECK_THROWS_AS(cable_tau_formula({1, 0}, {2, 3}), Error);  // eps 0, tau != 0
}

TEST_CASE("framing and q conversions") {
    CHECK(framing_from_q(2, 3) == 1);
    CHECK(framing_from_q(2, -1) == -1);
    CHECK(framing_from_q(3, -5) == -2);
    CHECK_FALSE(framing_from_q(3, 3).has_value());
    CHECK_FALSE(framing_from_q(2, 4).has_value());
    CHECK(q_from_framing(3, -2) == -5);
}

TEST_CASE("mirror compatibility of the tau formula") {
    for (int tau = -2; tau <= 2; ++tau)
        for (int eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0) continue;
            for (int p : {2, 3, 4})
                for (int q = -9; q <= 9; ++q) {
                    if (q == 0 || std::gcd(p, q) != 1) continue;
                    int direct = cable_tau_formula({tau, eps}, {p, q});
                    int mirrored = cable_tau_formula({-tau, -eps}, {p, -q});
                    CHECK(mirrored == -direct);
                }
        }
}

TEST_CASE("formula lands inside the two-sided cabling bound") {
    for (int tau = -2; tau <= 2; ++tau)
        for (int eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0) continue;
            for (int p : {2, 3})
                for (int q = -9; q <= 9; ++q) {
                    if (q == 0 || std::gcd(p, q) != 1) continue;
                    int t = cable_tau_formula({tau, eps}, {p, q});
                    CHECK(p * tau + (p - 1) * (q - 1) / 2 <= t);
                    CHECK(t <= p * tau + (p - 1) * (q + 1) / 2);
                }
        }
}
