// Type D structures over A(T^2) and the CFD-from-CFK algorithm.
//
// Chain shapes (note the backward arrows on vertical chains):
//   vertical arrow x_i -> x_{i+1} of length l:
//     x_i --D1--> y_1 <--D23-- y_2 <-- ... <--D23-- y_l <--D123-- x_{i+1}
//   horizontal arrow x'_i -> x'_{i+1} of length l:
//     x'_i --D3--> w_1 --D23--> ... --D23--> w_l --D2--> x'_{i+1}
//   unstable chain, m intermediates:
//     n < 2tau:  x_0 --D1--> z_1 <--D23-- ... <--D23-- z_m <--D3-- x'_0
//     n = 2tau:  x_0 --D12--> x'_0
//     n > 2tau:  x_0 --D123--> z_1 --D23--> ... --D23--> z_m --D2--> x'_0
#include "cabletau/bordered.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cabletau/errors.hpp"

namespace cabletau {

int TypeDStructure::index_of(const std::string& id) const {
    for (int i = 0; i < int(gens.size()); ++i)
        if (gens[i].id == id) return i;
    return -1;
}

std::vector<std::string> TypeDStructure::check() const {
    std::vector<std::string> out;
    auto effective = [this](const TypeDEdge& e) {
        return e.label == ReebLabel::empty ? element_of(gens[e.src].iota)
                                           : element_of(e.label);
    };
    for (const auto& e : edges) {
        if (e.label == ReebLabel::empty) {
            if (gens[e.src].iota != gens[e.tgt].iota)
                out.push_back("empty-label edge between distinct idempotents: " +
                              gens[e.src].id + " -> " + gens[e.tgt].id);
            continue;
        }
        if (left_idempotent(e.label) != gens[e.src].iota ||
            right_idempotent(e.label) != gens[e.tgt].iota)
            out.push_back("idempotent mismatch on edge " + gens[e.src].id + " -" +
                          to_string(e.label) + "-> " + gens[e.tgt].id);
    }
    // Type D condition: for every generator pair and every nonzero algebra
    // basis element, two-step paths with that label product come in pairs.
    std::map<int, std::vector<TypeDEdge>> out_edges;
    for (const auto& e : edges) out_edges[e.src].push_back(e);
    std::map<std::tuple<int, int, AlgebraElement>, int> counts;
    for (const auto& e1 : edges) {
        auto it = out_edges.find(e1.tgt);
        if (it == out_edges.end()) continue;
        for (const auto& e2 : it->second) {
            AlgebraElement prod = multiply(effective(e1), effective(e2));
            if (prod == AlgebraElement::zero) continue;
            counts[{e1.src, e2.tgt, prod}] ^= 1;
        }
    }
    for (const auto& [key, parity] : counts)
        if (parity) {
            std::ostringstream os;
            os << "Type D condition fails: odd number of " << gens[std::get<0>(key)].id
               << " -> " << gens[std::get<1>(key)].id << " paths with product "
               << to_string(std::get<2>(key));
            out.push_back(os.str());
        }
    return out;
}

std::string TypeDStructure::dump() const {
    std::vector<std::string> lines;
    for (const auto& e : edges) {
        std::ostringstream os;
        os << gens[e.src].id << " -" << to_string(e.label) << "-> " << gens[e.tgt].id;
        lines.push_back(os.str());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

namespace {

bool has_cycle(const TypeDStructure& d, bool only_23) {
    const int n = int(d.gens.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : d.edges)
        if (!only_23 || e.label == ReebLabel::r23) adj[e.src].push_back(e.tgt);
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s]) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < adj[v].size()) {
                int w = adj[v][i++];
                if (state[w] == 1) return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

bool is_bounded(const TypeDStructure& d) { return !has_cycle(d, false); }
bool has_pure_23_cycle(const TypeDStructure& d) { return has_cycle(d, true); }

TypeDStructure cfd_from_cfk(const FramedComplement& fc) {
    const CfkComplex& c = fc.complex;
    const BasisRoles& roles = fc.roles;
    if (roles.vertical_distinguished.empty() || roles.horizontal_distinguished.empty())
        throw NotAKnotComplex("basis has no unique distinguished elements: " + c.name);

    TypeDStructure d;
    for (const auto& g : c.gens) d.gens.push_back({g.id, Idempotent::i1});
    auto add_gen = [&d](const std::string& id) {
        std::string unique = id;
        while (d.index_of(unique) >= 0) unique += "'";
        d.gens.push_back({unique, Idempotent::i2});
        return int(d.gens.size()) - 1;
    };
    auto edge = [&d](int s, int t, ReebLabel l) { d.edges.insert({s, t, l}); };

    // Vertical chains.
    for (const auto& [id, role] : roles.vertical) {
        if (role.kind != RoleKind::source) continue;
        int src = d.index_of(id), tgt = d.index_of(role.partner);
        std::vector<int> y;
        for (int k = 1; k <= role.length; ++k)
            y.push_back(add_gen(id + "v" + std::to_string(k)));
        edge(src, y[0], ReebLabel::r1);
        for (int k = 0; k + 1 < role.length; ++k) edge(y[k + 1], y[k], ReebLabel::r23);
        edge(tgt, y[role.length - 1], ReebLabel::r123);
    }
    // Horizontal chains.
    for (const auto& [id, role] : roles.horizontal) {
        if (role.kind != RoleKind::source) continue;
        int src = d.index_of(id), tgt = d.index_of(role.partner);
        std::vector<int> w;
        for (int k = 1; k <= role.length; ++k)
            w.push_back(add_gen(id + "h" + std::to_string(k)));
        edge(src, w[0], ReebLabel::r3);
        for (int k = 0; k + 1 < role.length; ++k) edge(w[k], w[k + 1], ReebLabel::r23);
        edge(w[role.length - 1], tgt, ReebLabel::r2);
    }
    // Unstable chain between the distinguished generators.
    const int x0 = d.index_of(roles.vertical_distinguished);
    const int x0p = d.index_of(roles.horizontal_distinguished);
    const int two_tau = 2 * tau(c);
    const int n = fc.framing;
    if (n < two_tau) {
        const int m = two_tau - n;
        std::vector<int> z;
        for (int k = 1; k <= m; ++k) z.push_back(add_gen("z" + std::to_string(k)));
        edge(x0, z[0], ReebLabel::r1);
        for (int k = 0; k + 1 < m; ++k) edge(z[k + 1], z[k], ReebLabel::r23);
        edge(x0p, z[m - 1], ReebLabel::r3);
    } else if (n == two_tau) {
        edge(x0, x0p, ReebLabel::r12);
    } else {
        const int m = n - two_tau;
        std::vector<int> z;
        for (int k = 1; k <= m; ++k) z.push_back(add_gen("z" + std::to_string(k)));
        edge(x0, z[0], ReebLabel::r123);
        for (int k = 0; k + 1 < m; ++k) edge(z[k], z[k + 1], ReebLabel::r23);
        edge(z[m - 1], x0p, ReebLabel::r2);
    }
    return d;
}

}  // namespace cabletau
