// The torus algebra A(T^2): two idempotents, six Reeb elements, their
// products, and the idempotent-compatibility queries used by the bordered
// structures. Everything is a constant lookup table.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cabletau {

enum class Idempotent : uint8_t { i1 = 0, i2 = 1 };

// Coefficient-map labels. `empty` stands for rho_emptyset = i1 + i2 (a plain
// differential when used as an edge label); the other six are Reeb elements.
enum class ReebLabel : uint8_t { empty = 0, r1, r2, r3, r12, r23, r123 };

// Basis elements of A(T^2) together with zero. rho_emptyset is not an
// element here (it is the unit i1 + i2, not a basis element).
enum class AlgebraElement : uint8_t { zero = 0, i1, i2, r1, r2, r3, r12, r23, r123 };

const char* to_string(Idempotent i);
const char* to_string(ReebLabel r);
const char* to_string(AlgebraElement a);
std::optional<ReebLabel> reeb_label_from_string(const std::string& s);

AlgebraElement element_of(Idempotent i);
AlgebraElement element_of(ReebLabel r);  // rejects `empty`

// Product of two basis elements; total, returns zero for non-composable pairs.
AlgebraElement multiply(AlgebraElement a, AlgebraElement b);

// Left/right idempotents of a nonzero element per the compatibility table.
Idempotent left_idempotent(AlgebraElement a);
Idempotent right_idempotent(AlgebraElement a);
Idempotent left_idempotent(ReebLabel r);
Idempotent right_idempotent(ReebLabel r);
std::pair<Idempotent, Idempotent> idempotents_of(AlgebraElement a);

// True iff consecutive labels compose through matching idempotents.
// Precondition: seq nonempty, no `empty` entries.
bool composable(const std::vector<ReebLabel>& seq);

inline const std::array<AlgebraElement, 9> kAllElements = {
    AlgebraElement::zero, AlgebraElement::i1,  AlgebraElement::i2,
    AlgebraElement::r1,   AlgebraElement::r2,  AlgebraElement::r3,
    AlgebraElement::r12,  AlgebraElement::r23, AlgebraElement::r123};

inline const std::array<ReebLabel, 6> kReebLabels = {
    ReebLabel::r1,  ReebLabel::r2,  ReebLabel::r3,
    ReebLabel::r12, ReebLabel::r23, ReebLabel::r123};

}  // namespace cabletau
