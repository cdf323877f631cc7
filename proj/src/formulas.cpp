#include "cabletau/formulas.hpp"

#include <numeric>

#include "cabletau/errors.hpp"

namespace cabletau {

void validate_spec(const CableSpec& s) {
    if (s.p <= 1) throw Error("cable spec requires p > 1");
    if (std::gcd(s.p, s.q) != 1) throw Error("cable spec requires gcd(p, q) = 1");
}

namespace {

void validate_pair(const KnotInvariantPair& kp) {
    if (kp.epsilon < -1 || kp.epsilon > 1) throw Error("epsilon outside {-1, 0, 1}");
    if (kp.epsilon == 0 && kp.tau != 0) throw Error("epsilon = 0 forces tau = 0");
}

}  // namespace

int cable_tau_formula(const KnotInvariantPair& kp, const CableSpec& s) {
    validate_spec(s);
    validate_pair(kp);
    const int p = s.p, q = s.q;
    if (kp.epsilon == 1) return p * kp.tau + (p - 1) * (q - 1) / 2;
    if (kp.epsilon == -1) return p * kp.tau + (p - 1) * (q + 1) / 2;
    return q < 0 ? (p - 1) * (q + 1) / 2 : (p - 1) * (q - 1) / 2;
}

int cable_epsilon_formula(const KnotInvariantPair& kp, const CableSpec& s) {
    validate_spec(s);
    validate_pair(kp);
    if (kp.epsilon != 0) return kp.epsilon;
    if (s.q == 1 || s.q == -1) return 0;
    return s.q > 1 ? 1 : -1;
}

KnotInvariantPair cable_invariants_formula(const KnotInvariantPair& kp, const CableSpec& s) {
    return {cable_tau_formula(kp, s), cable_epsilon_formula(kp, s)};
}

KnotInvariantPair torus_knot_invariants(const CableSpec& s) {
    return cable_invariants_formula({0, 0}, s);
}

KnotInvariantPair iterated_cable(KnotInvariantPair kp, const std::vector<CableSpec>& specs) {
    for (const auto& s : specs) kp = cable_invariants_formula(kp, s);
    return kp;
}

int g4_lower_bound(const KnotInvariantPair& kp) {
    validate_pair(kp);
    const int sgn = kp.tau > 0 ? 1 : kp.tau < 0 ? -1 : 0;
    return std::abs(kp.tau) + (kp.epsilon != sgn ? 1 : 0);
}

std::pair<Witness, Witness> corollary_witnesses(int n) {
    Witness plus, minus;
    plus.cable = {2, 2 * n - 3};
    plus.description = "(2," + std::to_string(2 * n - 3) + ")-cable of the right trefoil";
    plus.invariants = cable_invariants_formula({1, 1}, plus.cable);
    minus.cable = {2, 2 * n + 3};
    minus.description = "(2," + std::to_string(2 * n + 3) + ")-cable of the left trefoil";
    minus.invariants = cable_invariants_formula({-1, -1}, minus.cable);
    return {plus, minus};
}

std::optional<int> connected_sum_epsilon(int e1, int e2) {
    if (e1 == e2) return e1;
    if (e1 == 0) return e2;
    if (e2 == 0) return e1;
    return std::nullopt;
}

std::optional<int> framing_from_q(int p, int q) {
    int r = (q - 1) % p;
    if (r < 0) r += p;
    if (r != 0) return std::nullopt;
    return (q - 1) / p;
}

int q_from_framing(int p, int n) { return p * n + 1; }

}  // namespace cabletau
