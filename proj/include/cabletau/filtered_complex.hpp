// A finite F2 chain complex whose arrows carry Alexander filtration drops.
// Used for the vertical complex in the tau computation and as the underlying
// machinery of the box-tensor output. Arrows are a set with mod-2 toggle
// semantics: an arrow appearing twice is no arrow.
#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cabletau/gf2.hpp"

namespace cabletau {

struct FilteredArrow {
    int src = 0;
    int tgt = 0;
    int drop = 0;  // Alexander filtration decrease, >= 0
    auto operator<=>(const FilteredArrow&) const = default;
};

class FilteredF2Complex {
public:
    FilteredF2Complex() = default;
    explicit FilteredF2Complex(int n) : alive_(n, true) {}

    int size() const { return int(alive_.size()); }
    int alive_count() const;
    bool alive(int i) const { return alive_[i]; }
    const std::set<FilteredArrow>& arrows() const { return arrows_; }

    void toggle(int src, int tgt, int drop);

    // F2 boundary matrix (parallel arrows of distinct drops add mod 2),
    // indexed over all slots; dead slots give zero rows/columns.
    Gf2Matrix boundary_matrix() const;

    bool d_squared_zero() const;
    int homology_rank() const;

    // Cancel the arrow (x -> y): zig-zag the remaining arrows through the
    // pair and delete both generators. The arrow must be present, and for
    // filtered correctness its drop must be minimal among arrows into y.
    void cancel(FilteredArrow a);

    // Cancel drop-0 arrows until none remain.
    void reduce_drop0();

    // Cancel arrows in ascending drop order until none remain. With rank-1
    // homology exactly one generator survives; returns its index.
    int cancel_to_survivor();

    bool has_parallel(const FilteredArrow& a) const;

private:
    std::vector<bool> alive_;
    std::set<FilteredArrow> arrows_;
};

}  // namespace cabletau
