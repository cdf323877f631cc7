// Subquotient complexes of CFK^infty and the invariants tau, nu, nu', epsilon.
//
// A_s has basis U^{n_i} x_i with n_i = max(0, A(x_i) - s); A'_s has basis
// U^{m_i} x_i with m_i = min(0, A(x_i) - s). The induced differential keeps a
// term exactly when the shifted U-exponent equals the target's offset.
#include <algorithm>

#include "cabletau/cfk.hpp"
#include "cabletau/errors.hpp"
#include "cabletau/gf2.hpp"

namespace cabletau {

namespace {

SubquotientComplex build_offset_complex(const CfkComplex& c, SubquotientComplex::Kind kind,
                                        int s, const std::vector<int>& offset) {
    SubquotientComplex sub;
    sub.kind = kind;
    sub.s = s;
    for (int i = 0; i < int(c.gens.size()); ++i)
        sub.basis.push_back({c.gens[i].id, offset[i]});
    for (const auto& a : c.arrows)
        if (offset[a.src] + a.u_power == offset[a.tgt]) {
            auto key = std::make_pair(a.src, a.tgt);
            if (sub.arrows.count(key))
                sub.arrows.erase(key);
            else
                sub.arrows.insert(key);
        }
    return sub;
}

Gf2Matrix boundary_of(const SubquotientComplex& sub) {
    const int n = int(sub.basis.size());
    Gf2Matrix m(n, n);
    for (const auto& [src, tgt] : sub.arrows) m.flip(tgt, src);
    return m;
}

std::vector<Gf2Vec> boundary_image(const SubquotientComplex& sub) {
    const int n = int(sub.basis.size());
    Gf2Matrix m = boundary_of(sub);
    std::vector<Gf2Vec> cols;
    for (int j = 0; j < n; ++j) {
        Gf2Vec v(n, false);
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            if (m.get(i, j)) { v[i] = true; nonzero = true; }
        if (nonzero) cols.push_back(std::move(v));
    }
    return cols;
}

}  // namespace

SubquotientComplex build_vertical(const CfkComplex& c) {
    SubquotientComplex sub;
    sub.kind = SubquotientComplex::Kind::vertical;
    sub.s = 0;
    for (int i = 0; i < int(c.gens.size()); ++i) sub.basis.push_back({c.gens[i].id, 0});
    for (const auto& a : c.arrows)
        if (a.u_power == 0) sub.arrows.insert({a.src, a.tgt});
    return sub;
}

SubquotientComplex build_As(const CfkComplex& c, int s) {
    std::vector<int> off(c.gens.size());
    for (int i = 0; i < int(c.gens.size()); ++i)
        off[i] = std::max(0, c.gens[i].alexander - s);
    return build_offset_complex(c, SubquotientComplex::Kind::a_s, s, off);
}

SubquotientComplex build_Aprime_s(const CfkComplex& c, int s) {
    std::vector<int> off(c.gens.size());
    for (int i = 0; i < int(c.gens.size()); ++i)
        off[i] = std::min(0, c.gens[i].alexander - s);
    return build_offset_complex(c, SubquotientComplex::Kind::aprime_s, s, off);
}

int tau(const CfkComplex& c) {
    SubquotientComplex vert = build_vertical(c);
    const int n = int(vert.basis.size());
    FilteredF2Complex f(n);
    for (const auto& [src, tgt] : vert.arrows)
        f.toggle(src, tgt, c.gens[src].alexander - c.gens[tgt].alexander);
    if (f.homology_rank() != 1)
        throw NotAKnotComplex("vertical homology rank is " +
                              std::to_string(f.homology_rank()) + " for " + c.name);
    int survivor = f.cancel_to_survivor();
    return c.gens[survivor].alexander;
}

bool v_s_nontrivial(const CfkComplex& c, int s) {
    SubquotientComplex as = build_As(c, s);
    SubquotientComplex vert = build_vertical(c);
    const int n = int(c.gens.size());

    std::vector<Gf2Vec> target_boundaries = boundary_image(vert);
    std::vector<Gf2Vec> cycles = gf2_kernel_basis(boundary_of(as));

    // v_s keeps exactly the offset-0 part of a cycle.
    std::vector<Gf2Vec> mixed = target_boundaries;
    const int base_rank = gf2_rank(target_boundaries);
    for (const auto& z : cycles) {
        Gf2Vec img(n, false);
        for (int i = 0; i < n; ++i)
            if (z[i] && as.basis[i].second == 0) img[i] = true;
        mixed.push_back(std::move(img));
    }
    return gf2_rank(mixed) > base_rank;
}

bool v_prime_s_nontrivial(const CfkComplex& c, int s) {
    SubquotientComplex aps = build_Aprime_s(c, s);
    SubquotientComplex vert = build_vertical(c);
    const int n = int(c.gens.size());

    // A representative cycle for the homology generator of C{i=0}.
    std::vector<Gf2Vec> vert_boundaries = boundary_image(vert);
    Gf2Vec gen;
    for (const auto& z : gf2_kernel_basis(boundary_of(vert)))
        if (!gf2_in_span(vert_boundaries, z)) { gen = z; break; }
    if (gen.empty())
        throw NotAKnotComplex("vertical homology vanishes for " + c.name);

    Gf2Vec img(n, false);
    for (int i = 0; i < n; ++i)
        if (gen[i] && c.gens[i].alexander >= s) img[i] = true;
    return !gf2_in_span(boundary_image(aps), img);
}

int nu(const CfkComplex& c) {
    int t = tau(c);
    return v_s_nontrivial(c, t) ? t : t + 1;
}

int nu_prime(const CfkComplex& c) {
    int t = tau(c);
    return v_prime_s_nontrivial(c, t) ? t : t - 1;
}

namespace {

std::pair<int, int> alexander_range(const CfkComplex& c) {
    int lo = 0, hi = 0;
    for (const auto& g : c.gens) {
        lo = std::min(lo, g.alexander);
        hi = std::max(hi, g.alexander);
    }
    return {lo, hi};
}

}  // namespace

int nu_scan(const CfkComplex& c) {
    auto [lo, hi] = alexander_range(c);
    for (int s = lo - 1; s <= hi + 1; ++s)
        if (v_s_nontrivial(c, s)) return s;
    throw InternalError("nu_scan: no nontrivial v_s found");
}

int nu_prime_scan(const CfkComplex& c) {
    auto [lo, hi] = alexander_range(c);
    for (int s = hi + 1; s >= lo - 1; --s)
        if (v_prime_s_nontrivial(c, s)) return s;
    throw InternalError("nu_prime_scan: no nontrivial v'_s found");
}

int epsilon(const CfkComplex& c) { return 2 * tau(c) - nu(c) - nu_prime(c); }

ConcordanceInvariants invariants(const CfkComplex& c) {
    ConcordanceInvariants inv;
    inv.tau = tau(c);
    inv.nu = nu(c);
    inv.nu_prime = nu_prime(c);
    inv.epsilon = 2 * inv.tau - inv.nu - inv.nu_prime;
    return inv;
}

}  // namespace cabletau
