#include "cabletau/filtered_complex.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "cabletau/errors.hpp"

namespace cabletau {

int FilteredF2Complex::alive_count() const {
    return int(std::count(alive_.begin(), alive_.end(), true));
}

void FilteredF2Complex::toggle(int src, int tgt, int drop) {
    if (src == tgt) throw InternalError("filtered complex: self arrow");
    FilteredArrow a{src, tgt, drop};
    auto it = arrows_.find(a);
    if (it != arrows_.end())
        arrows_.erase(it);
    else
        arrows_.insert(a);
}

Gf2Matrix FilteredF2Complex::boundary_matrix() const {
    Gf2Matrix m(size(), size());
    for (const auto& a : arrows_) m.flip(a.tgt, a.src);
    return m;
}

bool FilteredF2Complex::d_squared_zero() const {
    // Count two-step paths per (src, tgt) mod 2, ignoring drops.
    std::map<int, std::vector<const FilteredArrow*>> out;
    for (const auto& a : arrows_) out[a.src].push_back(&a);
    std::map<std::pair<int, int>, int> paths;
    for (const auto& a : arrows_) {
        auto it = out.find(a.tgt);
        if (it == out.end()) continue;
        for (const auto* b : it->second) paths[{a.src, b->tgt}] ^= 1;
    }
    for (const auto& [k, parity] : paths)
        if (parity) return false;
    return true;
}

int FilteredF2Complex::homology_rank() const {
    return alive_count() - 2 * boundary_matrix().rank();
}

void FilteredF2Complex::cancel(FilteredArrow a) {
    if (!arrows_.count(a)) throw InternalError("cancel: arrow not present");
    std::vector<FilteredArrow> into_y, out_of_x, touching;
    for (const auto& e : arrows_) {
        if (e.src == a.src && e.tgt == a.tgt && e.drop == a.drop) continue;
        if (e.tgt == a.tgt && e.src != a.src) into_y.push_back(e);
        if (e.src == a.src && e.tgt != a.tgt) out_of_x.push_back(e);
        if (e.src == a.src || e.src == a.tgt || e.tgt == a.src || e.tgt == a.tgt)
            touching.push_back(e);
    }
    // Parallel arrows between the cancelled pair would make the coefficient
    // a non-unit; callers avoid this by cancelling minimal drops first.
    for (const auto& e : arrows_)
        if (e.src == a.src && e.tgt == a.tgt && e.drop != a.drop)
            throw InternalError("cancel: parallel arrow on cancelled pair");
    arrows_.erase(a);
    for (const auto& e : touching) arrows_.erase(e);
    for (const auto& u : into_y)
        for (const auto& v : out_of_x) {
            int d = u.drop + v.drop - a.drop;
            if (d < 0) throw InternalError("cancel: negative drop produced");
            toggle(u.src, v.tgt, d);
        }
    alive_[a.src] = false;
    alive_[a.tgt] = false;
}

bool FilteredF2Complex::has_parallel(const FilteredArrow& a) const {
    for (const auto& e : arrows_)
        if (e.src == a.src && e.tgt == a.tgt && e.drop != a.drop) return true;
    return false;
}

void FilteredF2Complex::reduce_drop0() {
    for (;;) {
        const FilteredArrow* pick = nullptr;
        for (const auto& e : arrows_) {
            if (e.drop != 0) continue;
            if (!has_parallel(e)) { pick = &e; break; }
            if (!pick) pick = &e;
        }
        if (!pick) return;
        cancel(*pick);
    }
}

int FilteredF2Complex::cancel_to_survivor() {
    while (!arrows_.empty()) {
        int min_drop = arrows_.begin()->drop;
        for (const auto& e : arrows_) min_drop = std::min(min_drop, e.drop);
        const FilteredArrow* pick = nullptr;
        for (const auto& e : arrows_) {
            if (e.drop != min_drop) continue;
            if (!has_parallel(e)) { pick = &e; break; }
            if (!pick) pick = &e;
        }
        cancel(*pick);
    }
    int survivor = -1;
    for (int i = 0; i < size(); ++i) {
        if (!alive_[i]) continue;
        if (survivor >= 0) throw InternalError("cancel_to_survivor: multiple survivors");
        survivor = i;
    }
    if (survivor < 0) throw InternalError("cancel_to_survivor: empty complex");
    return survivor;
}

}  // namespace cabletau
