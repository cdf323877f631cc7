// The acceptance suite: one entry per criterion, each printing a pass/fail
// line. Also home of the independent tau oracle (the U-tower definition),
// which deliberately shares no code path with cfk's filtered cancellation.
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cabletau/bordered.hpp"
#include "cabletau/cfk.hpp"
#include "cabletau/torus_algebra.hpp"

namespace cabletau {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CriterionResult> run_acceptance_criteria();

// Prints one line per criterion; returns true iff all pass.
bool run_acceptance(std::ostream& os);

// tau = -max{ s : some class in HFK^-(K, s) survives every power of U },
// computed from the Alexander-graded (horizontal) part of the differential.
int tau_u_tower(const CfkComplex& c);

// Golden Type D structures of simple framed complements: 0 = unknot with
// framing 0, 1 = right trefoil with framing 2, 2 = left trefoil with
// framing -2.
TypeDStructure reference_cfd_fixture(int which);

// Associativity and unit laws over all basis triples for an arbitrary
// product table (parameterized so tests can inject faults).
bool algebra_tables_consistent(
    const std::function<AlgebraElement(AlgebraElement, AlgebraElement)>& mult);

}  // namespace cabletau
