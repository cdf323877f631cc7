// Absolute Alexander pinning: components, relative gradings, and the search
// for shift assignments making the merged graded-dimension profile symmetric.
// The search runs in two modes: full enumeration (pin_gradings) and
// existence with some components pinned (used to test candidate tau values).
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cabletau/errors.hpp"
#include "cabletau/pairing.hpp"

namespace cabletau {

namespace pin_detail {

Components split_components(const FilteredComplex& fc) {
    const int n = int(fc.gens.size());
    Components out;
    out.comp.assign(n, -1);
    out.relative.assign(n, 0);
    std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (nbr, delta)
    for (const auto& a : fc.arrows) {
        adj[a.src].push_back({a.tgt, -a.drop});
        adj[a.tgt].push_back({a.src, +a.drop});
    }
    for (int s = 0; s < n; ++s) {
        if (out.comp[s] >= 0) continue;
        int c = out.count++;
        std::vector<int> stack{s};
        out.comp[s] = c;
        out.relative[s] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (auto [w, delta] : it->second) {
                int g = out.relative[v] + delta;
                if (out.comp[w] < 0) {
                    out.comp[w] = c;
                    out.relative[w] = g;
                    stack.push_back(w);
                } else if (out.relative[w] != g) {
                    throw InconsistentRelativeGrading(
                        "conflicting drops between " + fc.gen_name(v) + " and " +
                        fc.gen_name(w));
                }
            }
        }
    }
    return out;
}

ComponentProfiles component_profiles(const FilteredComplex& fc, const Components& comps) {
    ComponentProfiles cp;
    cp.profile.resize(comps.count);
    cp.lo.assign(comps.count, 0);
    cp.hi.assign(comps.count, 0);
    cp.size.assign(comps.count, 0);
    cp.group.assign(comps.count, 0);
    for (int i = 0; i < int(fc.gens.size()); ++i)
        cp.profile[comps.comp[i]][comps.relative[i]]++;
    std::map<std::map<int, int>, int> group_of;
    for (int c = 0; c < comps.count; ++c) {
        cp.lo[c] = cp.profile[c].begin()->first;
        cp.hi[c] = cp.profile[c].rbegin()->first;
        for (auto& [g, k] : cp.profile[c]) cp.size[c] += k;
        auto it = group_of.find(cp.profile[c]);
        if (it == group_of.end())
            it = group_of.insert({cp.profile[c], int(group_of.size())}).first;
        cp.group[c] = it->second;
    }
    return cp;
}

// Backtracking over shift assignments. Branches chase the most extreme
// unbalanced grading; balanced states place the next free component anywhere
// in the window. While enumerating, components with equal profiles carry
// nondecreasing shifts along a fixed order (consumers expand permutations);
// the existence mode instead treats them as interchangeable and memoizes
// failed (remaining-per-group, imbalance) states.
struct SymmetricSearch {
    const ComponentProfiles& cp;
    int window;
    long node_budget;
    bool enumerate_all;
    int solution_cap;

    std::vector<std::optional<int>> shift;
    std::map<int, int> counts;
    std::vector<int> order;
    std::vector<int> pos_in_order;
    std::set<std::vector<int>> solutions;
    std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> failed;
    bool overflow = false;
    long nodes = 0;
    int free_mass = 0;  // total generators not yet placed

    SymmetricSearch(const ComponentProfiles& profiles, int win, long budget,
                    bool enumerate, int cap)
        : cp(profiles), window(win), node_budget(budget), enumerate_all(enumerate),
          solution_cap(cap) {
        const int n = int(cp.profile.size());
        shift.assign(n, std::nullopt);
        order.resize(n);
        for (int c = 0; c < n; ++c) order[c] = c;
        std::sort(order.begin(), order.end(), [this](int a, int b) {
            int sa = cp.hi[a] - cp.lo[a], sb = cp.hi[b] - cp.lo[b];
            if (sa != sb) return sa > sb;
            if (cp.size[a] != cp.size[b]) return cp.size[a] > cp.size[b];
            if (cp.group[a] != cp.group[b]) return cp.group[a] < cp.group[b];
            return a < b;
        });
        pos_in_order.resize(n);
        for (int i = 0; i < n; ++i) pos_in_order[order[i]] = i;
    }

    void place(int c, int s, int dir) {
        for (const auto& [g, k] : cp.profile[c]) counts[g + s] += dir * k;
        free_mass -= dir * cp.size[c];
    }

    void pin(int c, int s) {
        shift[c] = s;
        for (const auto& [g, k] : cp.profile[c]) counts[g + s] += k;
    }

    // Only used while enumerating: canonical solutions carry nondecreasing
    // shifts along the order inside each group of identical components.
    bool canonical_ok(int c, int s) const {
        if (!enumerate_all) return true;
        for (int c2 = 0; c2 < int(shift.size()); ++c2) {
            if (c2 == c || cp.group[c2] != cp.group[c] || !shift[c2]) continue;
            if (pos_in_order[c2] < pos_in_order[c] && *shift[c2] > s) return false;
            if (pos_in_order[c2] > pos_in_order[c] && *shift[c2] < s) return false;
        }
        return true;
    }

    // Memo key for the existence search: identical components are
    // interchangeable and their placed shifts are absorbed into `counts`, so
    // (unplaced count per group, imbalance profile) characterizes the state.
    std::pair<std::vector<int>, std::vector<std::pair<int, int>>> state_key() const {
        int groups = 0;
        for (int g : cp.group) groups = std::max(groups, g + 1);
        std::vector<int> remaining(groups, 0);
        for (int c = 0; c < int(shift.size()); ++c)
            if (!shift[c]) remaining[cp.group[c]]++;
        std::vector<std::pair<int, int>> imbalance;
        for (const auto& [g, k] : counts) {
            if (g <= 0) continue;
            int other = counts.count(-g) ? counts.at(-g) : 0;
            if (k - other != 0) imbalance.push_back({g, k - other});
        }
        for (const auto& [g, k] : counts) {
            if (g >= 0) continue;
            int other = counts.count(-g) ? counts.at(-g) : 0;
            if (other == 0 && k != 0) imbalance.push_back({-g, -k});
        }
        std::sort(imbalance.begin(), imbalance.end());
        return {std::move(remaining), std::move(imbalance)};
    }

    // Total imbalance must be coverable by the unplaced mass.
    bool prunable() const {
        long imbalance = 0;
        for (const auto& [g, k] : counts) {
            if (g < 0) continue;
            int other = counts.count(-g) ? counts.at(-g) : 0;
            imbalance += std::abs(k - other);
            if (g == 0) imbalance -= std::abs(k - other);  // g = 0 is balanced
        }
        return imbalance > free_mass;
    }

    // Branch on which component realizes the extreme level +e (only its top
    // profile point can sit there once the window equals e).
    bool seed_extreme(int e) {
        if (counts.count(e) && counts.at(e) > 0) return recurse();
        std::set<int> groups_tried;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int c = *it;
            if (shift[c]) continue;
            if (!groups_tried.insert(cp.group[c]).second) continue;
            int s = e - cp.hi[c];
            if (s + cp.lo[c] < -window) continue;
            if (!canonical_ok(c, s)) continue;
            shift[c] = s;
            place(c, s, +1);
            bool stop = recurse();
            place(c, s, -1);
            shift[c].reset();
            if (stop) return true;
        }
        return false;
    }

    // Returns true to stop the whole search (existence found or cap).
    bool recurse() {
        if (nodes++ > node_budget) {
            overflow = true;
            return true;
        }
        if (int(solutions.size()) >= solution_cap) {
            overflow = true;
            return true;
        }
        if (prunable()) return false;
        std::optional<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> key;
        if (!enumerate_all) {
            key = state_key();
            if (failed.count(*key)) return false;
        }
        bool found_any = step();
        if (!enumerate_all && !found_any && !overflow) failed.insert(*key);
        return found_any;
    }

    bool step() {
        int star = 0;
        bool unbalanced = false;
        for (const auto& [g, k] : counts) {
            int other = counts.count(-g) ? counts.at(-g) : 0;
            if (k != other && (!unbalanced || std::abs(g) > std::abs(star))) {
                star = g;
                unbalanced = true;
            }
        }
        if (!unbalanced) {
            int next = -1;
            for (int c : order)
                if (!shift[c]) { next = c; break; }
            if (next < 0) {
                std::vector<int> sol(shift.size());
                for (size_t c = 0; c < shift.size(); ++c) sol[c] = *shift[c];
                solutions.insert(std::move(sol));
                return !enumerate_all;
            }
            // Prefer placements closest to the component's own mirror point.
            std::vector<int> ss;
            for (int s = -window - cp.lo[next]; s <= window - cp.hi[next]; ++s)
                ss.push_back(s);
            std::stable_sort(ss.begin(), ss.end(), [&](int a, int b) {
                return std::abs(2 * a + cp.lo[next] + cp.hi[next]) <
                       std::abs(2 * b + cp.lo[next] + cp.hi[next]);
            });
            for (int s : ss) {
                if (!canonical_ok(next, s)) continue;
                shift[next] = s;
                place(next, s, +1);
                bool stop = recurse();
                place(next, s, -1);
                shift[next].reset();
                if (stop) return true;
            }
            return false;
        }
        int here = counts.count(star) ? counts.at(star) : 0;
        int there = counts.count(-star) ? counts.at(-star) : 0;
        int target = here > there ? -star : star;
        std::set<int> groups_tried;
        for (int c : order) {
            if (shift[c]) continue;
            // identical components are interchangeable: one member per group
            if (!enumerate_all && !groups_tried.insert(cp.group[c]).second) continue;
            // Covering an extreme deficit: try the placement that keeps the
            // component on the inward side first (top at a negative target
            // digs further down; bottom at it stays compact).
            std::vector<int> points;
            for (const auto& [g, k] : cp.profile[c]) points.push_back(g);
            if (target > 0) std::reverse(points.begin(), points.end());
            std::set<int> tried;
            for (int g : points) {
                int s = target - g;
                if (!tried.insert(s).second) continue;
                if (s + cp.lo[c] < -window || s + cp.hi[c] > window) continue;
                if (!canonical_ok(c, s)) continue;
                shift[c] = s;
                place(c, s, +1);
                bool stop = recurse();
                place(c, s, -1);
                shift[c].reset();
                if (stop) return true;
            }
        }
        return false;
    }
};

std::optional<std::vector<int>> find_symmetric_completion(
    const ComponentProfiles& cp, const std::vector<std::pair<int, int>>& pinned,
    int window, int extreme_level, long node_budget, bool* unknown) {
    SymmetricSearch search(cp, window, node_budget, /*enumerate=*/false,
                           /*cap=*/1);
    for (int c = 0; c < int(cp.profile.size()); ++c) search.free_mass += cp.size[c];
    for (auto [c, s] : pinned) {
        if (s + cp.lo[c] < -window || s + cp.hi[c] > window) {
            if (unknown) *unknown = false;
            return std::nullopt;
        }
        search.pin(c, s);
        search.free_mass -= cp.size[c];
    }
    if (extreme_level >= 0)
        search.seed_extreme(extreme_level);
    else
        search.recurse();
    if (unknown) *unknown = search.overflow && search.solutions.empty();
    if (search.solutions.empty()) return std::nullopt;
    return *search.solutions.begin();
}

}  // namespace pin_detail

std::string dump_pinned(const FilteredComplex& fc, const PinnedGrading& pin) {
    std::ostringstream os;
    std::vector<int> order(fc.gens.size());
    for (int i = 0; i < int(fc.gens.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return fc.gen_name(a) < fc.gen_name(b);
    });
    os << "generators (component, relative, absolute):\n";
    for (int i : order) {
        os << "  " << fc.gen_name(i) << " c" << pin.component[i] << " r"
           << pin.relative[i];
        if (!pin.absolute.empty()) os << " A" << pin.absolute[i];
        os << "\n";
    }
    std::vector<std::string> lines;
    for (const auto& a : fc.arrows) {
        std::ostringstream l;
        l << "  " << fc.gen_name(a.src) << " -" << a.drop << "-> " << fc.gen_name(a.tgt);
        lines.push_back(l.str());
    }
    std::sort(lines.begin(), lines.end());
    os << "arrows:\n";
    for (const auto& l : lines) os << l << "\n";
    os << "components: " << pin.num_components
       << (pin.ambiguous ? " (pinning ambiguous)\n" : "\n");
    return os.str();
}

PinnedGrading pin_gradings(const FilteredComplex& fc, int window) {
    using namespace pin_detail;
    const int n = int(fc.gens.size());
    PinnedGrading pg;
    if (n == 0) return pg;
    Components comps = split_components(fc);
    ComponentProfiles cp = component_profiles(fc, comps);
    pg.component = comps.comp;
    pg.relative = comps.relative;
    pg.num_components = comps.count;
    pg.group = cp.group;

    if (window < 0) {
        int max_span = 0, total = 0;
        for (int c = 0; c < comps.count; ++c) {
            max_span = std::max(max_span, cp.hi[c] - cp.lo[c]);
            total += cp.size[c];
        }
        window = total + max_span + 4;
    }

    SymmetricSearch search(cp, window, /*budget=*/3000000, /*enumerate=*/true,
                           /*cap=*/512);
    for (int c = 0; c < comps.count; ++c) search.free_mass += cp.size[c];
    search.recurse();
    pg.overflow = search.overflow;
    if (search.solutions.empty() && !pg.overflow)
        throw NoSymmetricPinning("no symmetric shift assignment exists");
    for (const auto& s : search.solutions) pg.shift_solutions.push_back(s);

    bool group_play = false;
    for (const auto& sol : pg.shift_solutions) {
        std::map<int, std::set<int>> by_group;
        for (int c = 0; c < comps.count; ++c) by_group[cp.group[c]].insert(sol[c]);
        for (const auto& [g, vals] : by_group)
            if (vals.size() > 1) group_play = true;
    }
    pg.ambiguous = pg.shift_solutions.size() != 1 || pg.overflow || group_play;
    if (!pg.shift_solutions.empty()) {
        pg.shift = pg.shift_solutions.front();
        pg.absolute.assign(n, 0);
        for (int i = 0; i < n; ++i)
            pg.absolute[i] = pg.relative[i] + pg.shift[comps.comp[i]];
    }
    return pg;
}

}  // namespace cabletau
