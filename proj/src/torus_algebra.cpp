#include "cabletau/torus_algebra.hpp"

#include "cabletau/errors.hpp"

namespace cabletau {

namespace {

// Nonzero products between Reeb elements: r1*r2 = r12, r2*r3 = r23,
// r1*r23 = r12*r3 = r123.
AlgebraElement reeb_product(AlgebraElement a, AlgebraElement b) {
    using E = AlgebraElement;
    if (a == E::r1 && b == E::r2) return E::r12;
    if (a == E::r2 && b == E::r3) return E::r23;
    if (a == E::r1 && b == E::r23) return E::r123;
    if (a == E::r12 && b == E::r3) return E::r123;
    return E::zero;
}

}  // namespace

const char* to_string(Idempotent i) { return i == Idempotent::i1 ? "i1" : "i2"; }

const char* to_string(ReebLabel r) {
    switch (r) {
        case ReebLabel::empty: return "-";
        case ReebLabel::r1: return "1";
        case ReebLabel::r2: return "2";
        case ReebLabel::r3: return "3";
        case ReebLabel::r12: return "12";
        case ReebLabel::r23: return "23";
        case ReebLabel::r123: return "123";
    }
    return "?";
}

const char* to_string(AlgebraElement a) {
    switch (a) {
        case AlgebraElement::zero: return "0";
        case AlgebraElement::i1: return "i1";
        case AlgebraElement::i2: return "i2";
        case AlgebraElement::r1: return "rho1";
        case AlgebraElement::r2: return "rho2";
        case AlgebraElement::r3: return "rho3";
        case AlgebraElement::r12: return "rho12";
        case AlgebraElement::r23: return "rho23";
        case AlgebraElement::r123: return "rho123";
    }
    return "?";
}

std::optional<ReebLabel> reeb_label_from_string(const std::string& s) {
    if (s == "-" || s == "0" || s.empty()) return ReebLabel::empty;
    if (s == "1") return ReebLabel::r1;
    if (s == "2") return ReebLabel::r2;
    if (s == "3") return ReebLabel::r3;
    if (s == "12") return ReebLabel::r12;
    if (s == "23") return ReebLabel::r23;
    if (s == "123") return ReebLabel::r123;
    return std::nullopt;
}

AlgebraElement element_of(Idempotent i) {
    return i == Idempotent::i1 ? AlgebraElement::i1 : AlgebraElement::i2;
}

AlgebraElement element_of(ReebLabel r) {
    switch (r) {
        case ReebLabel::r1: return AlgebraElement::r1;
        case ReebLabel::r2: return AlgebraElement::r2;
        case ReebLabel::r3: return AlgebraElement::r3;
        case ReebLabel::r12: return AlgebraElement::r12;
        case ReebLabel::r23: return AlgebraElement::r23;
        case ReebLabel::r123: return AlgebraElement::r123;
        case ReebLabel::empty: break;
    }
    throw Error("rho_emptyset is the unit, not a basis element");
}

Idempotent left_idempotent(AlgebraElement a) {
    using E = AlgebraElement;
    switch (a) {
        case E::i1: case E::r1: case E::r3: case E::r12: case E::r123:
            return Idempotent::i1;
        case E::i2: case E::r2: case E::r23:
            return Idempotent::i2;
        case E::zero: break;
    }
    throw Error("left_idempotent of zero");
}

Idempotent right_idempotent(AlgebraElement a) {
    using E = AlgebraElement;
    switch (a) {
        case E::i1: case E::r2: case E::r12:
            return Idempotent::i1;
        case E::i2: case E::r1: case E::r3: case E::r23: case E::r123:
            return Idempotent::i2;
        case E::zero: break;
    }
    throw Error("right_idempotent of zero");
}

Idempotent left_idempotent(ReebLabel r) { return left_idempotent(element_of(r)); }
Idempotent right_idempotent(ReebLabel r) { return right_idempotent(element_of(r)); }

std::pair<Idempotent, Idempotent> idempotents_of(AlgebraElement a) {
    return {left_idempotent(a), right_idempotent(a)};
}

AlgebraElement multiply(AlgebraElement a, AlgebraElement b) {
    using E = AlgebraElement;
    if (a == E::zero || b == E::zero) return E::zero;
    if (right_idempotent(a) != left_idempotent(b)) return E::zero;
    const bool a_idem = (a == E::i1 || a == E::i2);
    const bool b_idem = (b == E::i1 || b == E::i2);
    if (a_idem && b_idem) return a == b ? a : E::zero;
    if (a_idem) return b;  // absorbed by the matching idempotent
    if (b_idem) return a;
    return reeb_product(a, b);
}

bool composable(const std::vector<ReebLabel>& seq) {
    if (seq.empty()) throw Error("composable: empty sequence");
    for (ReebLabel r : seq)
        if (r == ReebLabel::empty) throw Error("composable: rho_emptyset entry");
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (right_idempotent(seq[i]) != left_idempotent(seq[i + 1])) return false;
    return true;
}

}  // namespace cabletau
