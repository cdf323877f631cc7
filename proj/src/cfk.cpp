// CFK^- data model: validation, reduction, mirrors, connected sums, the
// built-in knot library, and the Alexander polynomial diagnostic.
#include "cabletau/cfk.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cabletau/errors.hpp"

namespace cabletau {

int CfkComplex::index_of(const std::string& id) const {
    for (int i = 0; i < int(gens.size()); ++i)
        if (gens[i].id == id) return i;
    return -1;
}

bool CfkComplex::all_maslov() const {
    for (const auto& g : gens)
        if (!g.maslov) return false;
    return true;
}

void CfkComplex::toggle(int src, int tgt, int u_power) {
    CfkArrow a{src, tgt, u_power};
    auto it = arrows.find(a);
    if (it != arrows.end())
        arrows.erase(it);
    else
        arrows.insert(a);
}

void CfkComplex::basis_add(int t, int m) {
    if (t == m) throw InternalError("basis_add: t == m");
    if (gens[m].alexander > gens[t].alexander)
        throw InternalError("basis_add: unfiltered change of basis");
    // e_t := e_t + e_m. Derived from conjugating the differential:
    //  (a) arrows (j -> t, c) spawn (j -> m, c),
    //  (b) arrows (m -> i, c) spawn (t -> i, c),
    //  (c) an arrow (m -> t, c) spawns (t -> m, c).
    std::vector<CfkArrow> toggles;
    for (const auto& a : arrows) {
        if (a.tgt == t) toggles.push_back({a.src, m, a.u_power});
        if (a.src == m) toggles.push_back({t, a.tgt, a.u_power});
        if (a.src == m && a.tgt == t) toggles.push_back({t, m, a.u_power});
    }
    for (const auto& a : toggles) {
        if (a.src == a.tgt) throw InternalError("basis_add: self arrow produced");
        toggle(a.src, a.tgt, a.u_power);
    }
}

CfkComplex CfkComplex::compacted(const std::vector<bool>& alive) const {
    CfkComplex out;
    out.name = name;
    std::vector<int> remap(gens.size(), -1);
    for (int i = 0; i < int(gens.size()); ++i) {
        if (!alive[i]) continue;
        remap[i] = int(out.gens.size());
        out.gens.push_back(gens[i]);
    }
    for (const auto& a : arrows) {
        if (remap[a.src] < 0 || remap[a.tgt] < 0) continue;
        out.arrows.insert({remap[a.src], remap[a.tgt], a.u_power});
    }
    return out;
}

ValidationReport validate(const CfkComplex& c) {
    ValidationReport rep;
    auto err = [&rep](const std::string& m) { rep.errors.push_back(m); };

    std::map<std::string, int> seen;
    for (const auto& g : c.gens)
        if (++seen[g.id] == 2) err("duplicate generator id: " + g.id);

    const int n = int(c.gens.size());
    for (const auto& a : c.arrows) {
        if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) {
            err("arrow endpoint out of range");
            continue;
        }
        std::ostringstream where;
        where << c.gens[a.src].id << " -> U^" << a.u_power << " " << c.gens[a.tgt].id;
        if (a.src == a.tgt) err("self arrow: " + where.str());
        if (a.u_power < 0) err("negative U power: " + where.str());
        const int As = c.gens[a.src].alexander, At = c.gens[a.tgt].alexander;
        if (At - a.u_power > As)
            err("arrow points up/right: " + where.str());
        if (a.u_power == 0 && At >= As)
            rep.not_reduced.push_back("filtration-preserving arrow: " + where.str());
        const auto &ms = c.gens[a.src].maslov, &mt = c.gens[a.tgt].maslov;
        if (ms && mt && *mt - 2 * a.u_power != *ms - 1)
            err("arrow does not drop Maslov by 1: " + where.str());
    }

    // d^2 = 0 over F2[U]: two-step paths counted per (src, tgt, total power).
    std::map<int, std::vector<CfkArrow>> out;
    for (const auto& a : c.arrows) out[a.src].push_back(a);
    std::map<std::tuple<int, int, int>, int> paths;
    for (const auto& a : c.arrows) {
        auto it = out.find(a.tgt);
        if (it == out.end()) continue;
        for (const auto& b : it->second)
            paths[{a.src, b.tgt, a.u_power + b.u_power}] ^= 1;
    }
    for (const auto& [key, parity] : paths)
        if (parity) {
            std::ostringstream os;
            os << "d^2 != 0: paths " << c.gens[std::get<0>(key)].id << " -> U^"
               << std::get<2>(key) << " " << c.gens[std::get<1>(key)].id
               << " have odd count";
            err(os.str());
        }

    // Alexander multiset symmetric (warning only, to permit exploratory input).
    std::map<int, int> hist;
    for (const auto& g : c.gens) hist[g.alexander]++;
    for (const auto& [s, cnt] : hist) {
        auto it = hist.find(-s);
        if (it == hist.end() || it->second != cnt) {
            rep.warnings.push_back("Alexander grading multiset not symmetric");
            break;
        }
    }
    return rep;
}

CfkComplex reduce(const CfkComplex& c) {
    CfkComplex cur = c;
    std::vector<bool> alive(cur.gens.size(), true);
    for (;;) {
        const CfkArrow* pick = nullptr;
        for (const auto& a : cur.arrows) {
            if (a.u_power != 0) continue;
            if (cur.gens[a.src].alexander != cur.gens[a.tgt].alexander) continue;
            bool parallel = false;
            for (const auto& b : cur.arrows)
                if (b.src == a.src && b.tgt == a.tgt && b.u_power != a.u_power)
                    parallel = true;
            if (!parallel) { pick = &a; break; }
            if (!pick) pick = &a;
        }
        if (!pick) break;
        CfkArrow a = *pick;
        for (const auto& b : cur.arrows)
            if (b.src == a.src && b.tgt == a.tgt && b.u_power != a.u_power)
                throw InternalError("reduce: non-unit coefficient on cancelled arrow");
        // Zig-zag: (u -> U^p y) and (x -> U^q v) combine to (u -> U^{p+q} v).
        std::vector<CfkArrow> into_y, out_of_x, touching;
        for (const auto& e : cur.arrows) {
            if (e == a) continue;
            if (e.tgt == a.tgt && e.src != a.src) into_y.push_back(e);
            if (e.src == a.src && e.tgt != a.tgt) out_of_x.push_back(e);
            if (e.src == a.src || e.src == a.tgt || e.tgt == a.src || e.tgt == a.tgt)
                touching.push_back(e);
        }
        cur.arrows.erase(a);
        for (const auto& e : touching) cur.arrows.erase(e);
        for (const auto& u : into_y)
            for (const auto& v : out_of_x) cur.toggle(u.src, v.tgt, u.u_power + v.u_power);
        alive[a.src] = false;
        alive[a.tgt] = false;
        cur = cur.compacted(alive);
        alive.assign(cur.gens.size(), true);
    }
    return cur;
}

CfkComplex mirror(const CfkComplex& c) {
    CfkComplex out;
    out.name = "mirror(" + c.name + ")";
    out.gens.reserve(c.gens.size());
    for (const auto& g : c.gens) {
        CfkGenerator m;
        m.id = g.id;
        m.alexander = -g.alexander;
        if (g.maslov) m.maslov = -*g.maslov;
        out.gens.push_back(std::move(m));
    }
    for (const auto& a : c.arrows) out.arrows.insert({a.tgt, a.src, a.u_power});
    return out;
}

CfkComplex reflect(const CfkComplex& c) {
    CfkComplex out;
    out.name = c.name;
    out.gens.reserve(c.gens.size());
    for (const auto& g : c.gens) {
        CfkGenerator r;
        r.id = g.id;
        r.alexander = -g.alexander;
        if (g.maslov) r.maslov = *g.maslov - 2 * g.alexander;
        out.gens.push_back(std::move(r));
    }
    for (const auto& a : c.arrows) {
        int v = c.gens[a.src].alexander - (c.gens[a.tgt].alexander - a.u_power);
        out.arrows.insert({a.src, a.tgt, v});
    }
    return out;
}

CfkComplex connected_sum(const CfkComplex& a, const CfkComplex& b) {
    CfkComplex out;
    out.name = a.name + "#" + b.name;
    const int nb = int(b.gens.size());
    auto idx = [nb](int i, int j) { return i * nb + j; };
    for (const auto& ga : a.gens)
        for (const auto& gb : b.gens) {
            CfkGenerator g;
            g.id = ga.id + "." + gb.id;
            g.alexander = ga.alexander + gb.alexander;
            if (ga.maslov && gb.maslov) g.maslov = *ga.maslov + *gb.maslov;
            out.gens.push_back(std::move(g));
        }
    for (const auto& ar : a.arrows)
        for (int j = 0; j < nb; ++j)
            out.arrows.insert({idx(ar.src, j), idx(ar.tgt, j), ar.u_power});
    for (const auto& br : b.arrows)
        for (int i = 0; i < int(a.gens.size()); ++i)
            out.arrows.insert({idx(i, br.src), idx(i, br.tgt), br.u_power});
    return reduce(out);
}

std::map<int, long long> alexander_polynomial(const CfkComplex& c) {
    if (!c.all_maslov()) throw MissingMaslov("alexander_polynomial needs Maslov gradings");
    CfkComplex r = reduce(c);
    std::map<int, long long> poly;
    for (const auto& g : r.gens) {
        long long sign = (*g.maslov % 2 == 0) ? 1 : -1;
        poly[g.alexander] += sign;
    }
    for (auto it = poly.begin(); it != poly.end();)
        it = it->second == 0 ? poly.erase(it) : std::next(it);
    long long at_one = 0;
    for (const auto& [e, co] : poly) at_one += co;
    if (at_one == -1)
        for (auto& [e, co] : poly) co = -co;
    return poly;
}

namespace {

CfkComplex make_complex(std::string name,
                        std::vector<std::tuple<std::string, int, int>> gens,
                        std::vector<std::tuple<std::string, std::string, int>> arrows) {
    CfkComplex c;
    c.name = std::move(name);
    for (auto& [id, A, M] : gens) c.gens.push_back({id, A, M});
    for (auto& [s, t, k] : arrows) c.arrows.insert({c.index_of(s), c.index_of(t), k});
    return c;
}

}  // namespace

CfkComplex knot_library(const std::string& name) {
    if (name == "unknot")
        return make_complex("unknot", {{"u", 0, 0}}, {});
    if (name == "trefoil_rh")
        return make_complex("trefoil_rh",
                            {{"c", 1, 0}, {"b", 0, -1}, {"a", -1, -2}},
                            {{"b", "a", 0}, {"b", "c", 1}});
    if (name == "trefoil_lh")
        return make_complex("trefoil_lh",
                            {{"c", 1, 2}, {"b", 0, 1}, {"a", -1, 0}},
                            {{"c", "b", 0}, {"a", "b", 1}});
    if (name == "figure8")
        return make_complex("figure8",
                            {{"a", -1, -1}, {"b", 0, 0}, {"c", 1, 1}, {"d", 0, 0}, {"e", 0, 0}},
                            {{"d", "a", 0}, {"d", "c", 1}, {"c", "b", 0}, {"a", "b", 1}});
    throw Error("unknown built-in knot: " + name);
}

std::vector<std::string> knot_library_names() {
    return {"unknot", "trefoil_rh", "trefoil_lh", "figure8"};
}

}  // namespace cabletau
