// Type D structures and Type A modules over the torus algebra: the
// CFD-from-CFK algorithm with its unstable chain, the parametric relation
// table of the (p,1)-cable pattern module, and structural checks.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cabletau/cfk.hpp"
#include "cabletau/torus_algebra.hpp"

namespace cabletau {

struct TypeDGenerator {
    std::string id;
    Idempotent iota = Idempotent::i1;
};

struct TypeDEdge {
    int src = 0;
    int tgt = 0;
    ReebLabel label = ReebLabel::empty;  // `empty` encodes a plain differential
    auto operator<=>(const TypeDEdge&) const = default;
};

struct TypeDStructure {
    std::vector<TypeDGenerator> gens;
    std::set<TypeDEdge> edges;

    int index_of(const std::string& id) const;  // -1 if absent
    // Violations of idempotent compatibility and the Type D condition.
    std::vector<std::string> check() const;
    // Edge-list text dump, one sorted "src -label-> tgt" line each.
    std::string dump() const;
};

// True iff the delta^1 edge graph is acyclic.
bool is_bounded(const TypeDStructure& d);

// True iff some directed cycle uses only rho_23-labeled edges (the box-tensor
// termination guard against the (p,1) pattern module).
bool has_pure_23_cycle(const TypeDStructure& d);

struct FramedComplement {
    CfkComplex complex;  // reduced, simultaneously simplified basis
    BasisRoles roles;
    int framing = 0;
};

TypeDStructure cfd_from_cfk(const FramedComplement& fc);

struct TypeARelation {
    std::string input;
    std::vector<ReebLabel> labels;  // empty encodes an m_1 relation
    std::string output;
    int delta_a = 0;
};

// An A-infinity module over A(T^2) presented by relations. Either a finite
// explicit list, or the six parametric families of the (p,1)-cable pattern
// instantiated lazily against concrete label sequences.
class TypeAModule {
public:
    std::vector<std::pair<std::string, Idempotent>> gens;

    int index_of(const std::string& id) const;
    Idempotent idempotent_of(int gen) const { return gens[gen].second; }

    // All relations on `input` whose label sequence is exactly `labels`.
    std::vector<std::pair<int, int>> relations_matching(int input,
                                                        const std::vector<ReebLabel>& labels) const;
    // Could `labels` be extended (by zero or more labels) to a relation?
    bool prefix_matchable(int input, const std::vector<ReebLabel>& labels) const;

    // Every relation with at most max_labels labels (families instantiated).
    std::vector<TypeARelation> enumerate(int max_labels) const;

    int cable_p() const { return p_; }

    static TypeAModule from_relations(std::vector<std::pair<std::string, Idempotent>> gens,
                                      std::vector<TypeARelation> relations);
    friend TypeAModule cfa_p1(int p);

private:
    int p_ = 0;  // 0 = explicit-only module
    std::vector<TypeARelation> explicit_;
};

// The pattern module of the (p,1)-torus knot in the solid torus.
TypeAModule cfa_p1(int p);

// Truncated A-infinity check over all composable label sequences of at most
// max_labels labels; returns violations (empty = pass).
std::vector<std::string> a_infinity_violations(const TypeAModule& m, int max_labels);

}  // namespace cabletau
