// Closed-form cable invariant arithmetic: the tau and epsilon cabling
// formulas, torus knot values, iterated cables, connected-sum epsilon rules,
// the equal-tau witness pairs, and the four-genus bound.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cabletau {

struct CableSpec {
    int p = 2;
    int q = 1;
};

// Rejects p <= 1 or gcd(p, q) != 1.
void validate_spec(const CableSpec& s);

struct KnotInvariantPair {
    int tau = 0;
    int epsilon = 0;  // in {-1, 0, 1}; epsilon == 0 forces tau == 0
};

int cable_tau_formula(const KnotInvariantPair& kp, const CableSpec& s);
int cable_epsilon_formula(const KnotInvariantPair& kp, const CableSpec& s);
KnotInvariantPair cable_invariants_formula(const KnotInvariantPair& kp, const CableSpec& s);

KnotInvariantPair torus_knot_invariants(const CableSpec& s);

KnotInvariantPair iterated_cable(KnotInvariantPair kp, const std::vector<CableSpec>& specs);

// |tau| when epsilon == sgn(tau), else |tau| + 1.
int g4_lower_bound(const KnotInvariantPair& kp);

struct Witness {
    std::string description;
    CableSpec cable;  // cable of a trefoil realizing the invariants
    KnotInvariantPair invariants;
};

// Two knots with tau = n and epsilon = +1 / -1: the (2, 2n-3)-cable of the
// right trefoil and the (2, 2n+3)-cable of the left trefoil.
std::pair<Witness, Witness> corollary_witnesses(int n);

// Equal values pass through; a zero defers to the other side; opposite
// nonzero signs are undetermined.
std::optional<int> connected_sum_epsilon(int e1, int e2);

// q = p*n + 1 <-> n conversion; nullopt when q is not 1 mod p.
std::optional<int> framing_from_q(int p, int q);
int q_from_framing(int p, int n);

}  // namespace cabletau
