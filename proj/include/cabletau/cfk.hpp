// The CFK^- data model over F2[U] and everything computed directly from it:
// validation, reduction, simplified bases, the A_s / A'_s subquotients, and
// the concordance invariants tau, nu, nu', epsilon.
//
// A generator x sits at (0, A(x)) in the (i, j)-plane; an arrow x -> U^k y
// records a differential term with U-exponent k. Arrows form a set with
// mod-2 semantics.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cabletau/filtered_complex.hpp"

namespace cabletau {

struct CfkGenerator {
    std::string id;
    int alexander = 0;
    std::optional<int> maslov;
};

struct CfkArrow {
    int src = 0;
    int tgt = 0;
    int u_power = 0;
    auto operator<=>(const CfkArrow&) const = default;
};

class CfkComplex {
public:
    std::string name;
    std::vector<CfkGenerator> gens;
    std::set<CfkArrow> arrows;

    int index_of(const std::string& id) const;  // -1 if absent
    bool all_maslov() const;
    void toggle(int src, int tgt, int u_power);

    // Filtered change of basis e_t := e_t + e_m (requires A(m) <= A(t)).
    void basis_add(int t, int m);

    // Remove generators marked dead and all arrows touching them.
    CfkComplex compacted(const std::vector<bool>& alive) const;
};

struct ValidationReport {
    std::vector<std::string> errors;       // structural violations
    std::vector<std::string> not_reduced;  // curable by reduce()
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
    bool reduced() const { return not_reduced.empty(); }
};

ValidationReport validate(const CfkComplex& c);

// Cancel filtration-preserving differentials (u_power 0, equal Alexander
// grading) until the complex is reduced.
CfkComplex reduce(const CfkComplex& c);

enum class RoleKind { isolated, source, target };

struct GenRole {
    RoleKind kind = RoleKind::isolated;
    std::string partner;  // matched generator when source/target
    int length = 0;       // arrow length when source/target
};

struct BasisRoles {
    std::map<std::string, GenRole> vertical;
    std::map<std::string, GenRole> horizontal;
    std::string vertical_distinguished;    // the unique vertically isolated id
    std::string horizontal_distinguished;  // the unique horizontally isolated id
};

// Filtered change of basis making the mod-U differential a perfect matching
// (one isolated generator for a knot complex). Input must be reduced.
std::pair<CfkComplex, BasisRoles> simplify_vertical(const CfkComplex& c);
std::pair<CfkComplex, BasisRoles> simplify_horizontal(const CfkComplex& c);

// Alternating passes until one basis is simultaneously vertically and
// horizontally simplified; throws NoSimultaneousBasis if that never happens.
std::pair<CfkComplex, BasisRoles> simplify_both(const CfkComplex& c);

// Reverse the roles of the two filtrations: A(x) -> -A(x), arrow (k, v) ->
// (v, k) where v is the Alexander drop. Exact involution on complexes.
CfkComplex reflect(const CfkComplex& c);

struct SubquotientComplex {
    enum class Kind { vertical, a_s, aprime_s };
    Kind kind = Kind::vertical;
    int s = 0;
    std::vector<std::pair<std::string, int>> basis;  // (generator id, u_offset)
    std::set<std::pair<int, int>> arrows;            // F2 differential on basis indices
};

SubquotientComplex build_vertical(const CfkComplex& c);
SubquotientComplex build_As(const CfkComplex& c, int s);
SubquotientComplex build_Aprime_s(const CfkComplex& c, int s);

// tau via filtered cancellation of the vertical complex.
int tau(const CfkComplex& c);

// Is v_s : A_s -> C{i=0} (resp. v'_s : C{i=0} -> A'_s) nontrivial on homology?
bool v_s_nontrivial(const CfkComplex& c, int s);
bool v_prime_s_nontrivial(const CfkComplex& c, int s);

// nu and nu' through v_tau / v'_tau and the windows nu in {tau, tau+1},
// nu' in {tau-1, tau}.
int nu(const CfkComplex& c);
int nu_prime(const CfkComplex& c);

// Full scans over s, for property testing against the window shortcut.
int nu_scan(const CfkComplex& c);
int nu_prime_scan(const CfkComplex& c);

int epsilon(const CfkComplex& c);

struct ConcordanceInvariants {
    int tau = 0;
    int nu = 0;
    int nu_prime = 0;
    int epsilon = 0;
};

ConcordanceInvariants invariants(const CfkComplex& c);

CfkComplex mirror(const CfkComplex& c);
CfkComplex connected_sum(const CfkComplex& a, const CfkComplex& b);

// Graded Euler characteristic of the reduced complex, normalized to value 1
// at t = 1. Requires Maslov gradings. Exponent -> coefficient.
std::map<int, long long> alexander_polynomial(const CfkComplex& c);

CfkComplex knot_library(const std::string& name);
std::vector<std::string> knot_library_names();

}  // namespace cabletau
