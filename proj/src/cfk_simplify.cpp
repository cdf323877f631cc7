// Vertically/horizontally simplified bases via the inductive filtered change
// of basis: process vertical sources in ascending order of differential drop,
// merge each source's targets into its top target, then clear every other
// incoming vertical arrow of that target.
//
// Finding a basis that is simplified in both directions at once alternates
// the two passes. Convergence depends on tie-breaking choices inside a pass,
// so simplify_both retries a fixed list of orderings before giving up.
#include <algorithm>
#include <map>
#include <optional>

#include "cabletau/cfk.hpp"
#include "cabletau/errors.hpp"

namespace cabletau {

namespace {

// Tie-breaking for the processing order inside a simplification pass.
struct Strategy {
    int single_bias = 0;  // +1 single-target sources first, -1 last, 0 ignore
    bool index_desc = false;
    bool target_desc = false;
};

bool has_arrow_between(const CfkComplex& c, int src, int tgt) {
    for (const auto& a : c.arrows)
        if (a.src == src && a.tgt == tgt) return true;
    return false;
}

void require_reduced(const CfkComplex& c) {
    for (const auto& a : c.arrows)
        if (a.u_power == 0 && c.gens[a.tgt].alexander >= c.gens[a.src].alexander)
            throw Error("complex is not reduced");
}

struct VerticalView {
    std::map<int, std::vector<int>> out, in;
};

VerticalView vertical_view(const CfkComplex& c) {
    VerticalView v;
    for (const auto& a : c.arrows)
        if (a.u_power == 0) {
            v.out[a.src].push_back(a.tgt);
            v.in[a.tgt].push_back(a.src);
        }
    return v;
}

bool is_matching(const CfkComplex& c, const VerticalView& v) {
    for (int i = 0; i < int(c.gens.size()); ++i) {
        auto o = v.out.find(i), n = v.in.find(i);
        int no = o == v.out.end() ? 0 : int(o->second.size());
        int ni = n == v.in.end() ? 0 : int(n->second.size());
        if (no > 1 || ni > 1 || (no == 1 && ni == 1)) return false;
    }
    return true;
}

// Roles read off by inspection; nullopt when the mod-U differential is not a
// perfect matching.
std::optional<std::map<std::string, GenRole>> read_roles_vertical(const CfkComplex& c) {
    VerticalView v = vertical_view(c);
    if (!is_matching(c, v)) return std::nullopt;
    std::map<std::string, GenRole> roles;
    for (int i = 0; i < int(c.gens.size()); ++i) roles[c.gens[i].id] = GenRole{};
    for (const auto& [src, tgts] : v.out) {
        int tgt = tgts[0];
        int len = c.gens[src].alexander - c.gens[tgt].alexander;
        roles[c.gens[src].id] = {RoleKind::source, c.gens[tgt].id, len};
        roles[c.gens[tgt].id] = {RoleKind::target, c.gens[src].id, len};
    }
    return roles;
}

std::optional<std::map<std::string, GenRole>> read_roles_horizontal(const CfkComplex& c) {
    // Horizontal arrows of c are the vertical arrows of reflect(c), with the
    // same ids and lengths.
    return read_roles_vertical(reflect(c));
}

std::string unique_isolated(const std::map<std::string, GenRole>& roles) {
    std::string iso;
    int count = 0;
    for (const auto& [id, r] : roles)
        if (r.kind == RoleKind::isolated) {
            iso = id;
            ++count;
        }
    return count == 1 ? iso : std::string{};
}

CfkComplex simplify_vertical_pass(const CfkComplex& input, const Strategy& st) {
    CfkComplex cur = input;
    const int n = int(cur.gens.size());
    const long limit = 16L * n * n + 64;
    for (long step = 0;; ++step) {
        if (step > limit) throw InternalError("simplify pass: no convergence");
        VerticalView v = vertical_view(cur);

        auto is_clean = [&](int j) {
            const auto& tg = v.out.at(j);
            if (tg.size() != 1) return false;
            int k = tg[0];
            if (v.in.count(j)) return false;
            if (v.out.count(k)) return false;
            return v.in.at(k).size() == 1;
        };

        // Candidate sources, minimal differential drop first, then the
        // strategy's tie-breaks.
        int pick = -1, pick_drop = 0;
        bool pick_single = false;
        for (const auto& [j, tgts] : v.out) {
            if (is_clean(j)) continue;
            int top = tgts[0];
            for (int t : tgts)
                if (cur.gens[t].alexander > cur.gens[top].alexander) top = t;
            int drop = cur.gens[j].alexander - cur.gens[top].alexander;
            bool single = tgts.size() == 1;
            bool better = false;
            if (pick < 0) {
                better = true;
            } else if (drop != pick_drop) {
                better = drop < pick_drop;
            } else if (st.single_bias != 0 && single != pick_single) {
                better = st.single_bias > 0 ? single : !single;
            } else {
                better = st.index_desc ? j > pick : false;
            }
            if (better) {
                pick = j;
                pick_drop = drop;
                pick_single = single;
            }
        }
        if (pick < 0) break;  // perfect matching

        const int j = pick;
        std::vector<int> tgts = v.out.at(j);
        if (st.target_desc)
            std::sort(tgts.begin(), tgts.end(), std::greater<int>());
        const int topA = cur.gens[j].alexander - pick_drop;
        // Top target; prefer one with no arrows from the other targets so the
        // merge is a legal triangular change of basis.
        int k = -1;
        for (int t : tgts) {
            if (cur.gens[t].alexander != topA) continue;
            bool blocked = false;
            for (int y : tgts)
                if (y != t && has_arrow_between(cur, y, t)) blocked = true;
            if (!blocked) { k = t; break; }
        }
        if (k < 0) throw InternalError("simplify pass: all top targets blocked");

        for (int y : tgts)
            if (y != k) cur.basis_add(k, y);  // e_k := vertical boundary of e_j

        // Other vertical arrows into k are cleared through e_l := e_l + e_j.
        for (;;) {
            int other = -1;
            for (const auto& a : cur.arrows)
                if (a.u_power == 0 && a.tgt == k && a.src != j) other = a.src;
            if (other < 0) break;
            if (cur.gens[other].alexander < cur.gens[j].alexander ||
                has_arrow_between(cur, j, other))
                throw InternalError("simplify pass: blocked incoming clear");
            cur.basis_add(other, j);
        }
    }
    return cur;
}

CfkComplex simplify_horizontal_pass(const CfkComplex& c, const Strategy& st) {
    return reflect(simplify_vertical_pass(reflect(c), st));
}

BasisRoles roles_from(const std::map<std::string, GenRole>& vr,
                      const std::map<std::string, GenRole>& hr) {
    BasisRoles br;
    br.vertical = vr;
    br.horizontal = hr;
    br.vertical_distinguished = unique_isolated(vr);
    br.horizontal_distinguished = unique_isolated(hr);
    return br;
}

const std::vector<Strategy>& strategy_list() {
    static const std::vector<Strategy> list = {
        {+1, false, false}, {0, false, false}, {+1, true, false},
        {-1, false, false}, {0, true, true},   {+1, false, true},
        {-1, true, false},  {0, false, true},
    };
    return list;
}

// Connected components of the undirected arrow graph (direct summands).
std::vector<std::vector<int>> arrow_components(const CfkComplex& c) {
    const int n = int(c.gens.size());
    std::vector<int> comp(n, -1);
    int count = 0;
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : c.arrows) {
        adj[a.src].push_back(a.tgt);
        adj[a.tgt].push_back(a.src);
    }
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(count);
    for (int i = 0; i < n; ++i) out[comp[i]].push_back(i);
    return out;
}

CfkComplex subcomplex(const CfkComplex& c, const std::vector<int>& idxs) {
    CfkComplex out;
    out.name = c.name;
    std::map<int, int> remap;
    for (int i : idxs) {
        remap[i] = int(out.gens.size());
        out.gens.push_back(c.gens[i]);
    }
    for (const auto& a : c.arrows)
        if (remap.count(a.src) && remap.count(a.tgt))
            out.arrows.insert({remap[a.src], remap[a.tgt], a.u_power});
    return out;
}

CfkComplex merge_complexes(const std::vector<CfkComplex>& parts, const std::string& name) {
    CfkComplex out;
    out.name = name;
    for (const auto& p : parts) {
        int base = int(out.gens.size());
        for (const auto& g : p.gens) out.gens.push_back(g);
        for (const auto& a : p.arrows)
            out.arrows.insert({a.src + base, a.tgt + base, a.u_power});
    }
    return out;
}

bool simultaneous(const CfkComplex& c) {
    return read_roles_vertical(c).has_value() && read_roles_horizontal(c).has_value();
}

// Alternating passes, component by component; summands that split off along
// the way are handled recursively.
std::optional<CfkComplex> solve_both(const CfkComplex& c, int depth) {
    if (depth > 8) return std::nullopt;
    auto comps = arrow_components(c);
    if (comps.size() > 1) {
        std::vector<CfkComplex> parts;
        for (const auto& idxs : comps) {
            auto part = solve_both(subcomplex(c, idxs), depth + 1);
            if (!part) return std::nullopt;
            parts.push_back(std::move(*part));
        }
        return merge_complexes(parts, c.name);
    }
    if (simultaneous(c)) return c;
    for (bool horizontal_first : {false, true}) {
        for (const Strategy& st : strategy_list()) {
            CfkComplex cur = c;
            for (int round = 0; round < 8; ++round) {
                if (horizontal_first) {
                    cur = simplify_horizontal_pass(cur, st);
                    cur = simplify_vertical_pass(cur, st);
                } else {
                    cur = simplify_vertical_pass(cur, st);
                    cur = simplify_horizontal_pass(cur, st);
                }
                if (simultaneous(cur)) return cur;
                if (arrow_components(cur).size() > 1) {
                    auto split = solve_both(cur, depth + 1);
                    if (split) return split;
                    break;  // splitting failed; try the next strategy
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<CfkComplex, BasisRoles> simplify_vertical(const CfkComplex& c) {
    require_reduced(c);
    CfkComplex out = simplify_vertical_pass(c, Strategy{});
    auto roles = read_roles_vertical(out);
    if (!roles) throw InternalError("simplify_vertical: result not a matching");
    BasisRoles br;
    br.vertical = *roles;
    br.vertical_distinguished = unique_isolated(*roles);
    return {out, br};
}

std::pair<CfkComplex, BasisRoles> simplify_horizontal(const CfkComplex& c) {
    require_reduced(c);
    CfkComplex out = simplify_horizontal_pass(c, Strategy{});
    auto roles = read_roles_horizontal(out);
    if (!roles) throw InternalError("simplify_horizontal: result not a matching");
    BasisRoles br;
    br.horizontal = *roles;
    br.horizontal_distinguished = unique_isolated(*roles);
    return {out, br};
}

std::pair<CfkComplex, BasisRoles> simplify_both(const CfkComplex& c) {
    require_reduced(c);
    auto solved = solve_both(c, 0);
    if (!solved)
        throw NoSimultaneousBasis("no simultaneously simplified basis found for " + c.name);
    auto vr = read_roles_vertical(*solved);
    auto hr = read_roles_horizontal(*solved);
    if (!vr || !hr) throw InternalError("simplify_both: merged result not simplified");
    return {*solved, roles_from(*vr, *hr)};
}

}  // namespace cabletau
