#include "cabletau/gf2.hpp"

namespace cabletau {

std::vector<Gf2Vec> gf2_kernel_basis(const Gf2Matrix& m) {
    const int rows = m.rows(), cols = m.cols();
    Gf2Matrix red = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (red.get(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        red.swap_rows(piv, r);
        for (int i = 0; i < rows; ++i)
            if (i != r && red.get(i, c)) red.xor_row(i, r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<Gf2Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Gf2Vec v(cols, false);
        v[c] = true;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            if (red.get(int(i), c)) v[pivot_col[i]] = true;
        basis.push_back(std::move(v));
    }
    return basis;
}

int gf2_rank(const std::vector<Gf2Vec>& vecs) {
    if (vecs.empty()) return 0;
    const int n = int(vecs[0].size());
    Gf2Matrix m(int(vecs.size()), n);
    for (int i = 0; i < int(vecs.size()); ++i)
        for (int j = 0; j < n; ++j)
            if (vecs[i][j]) m.set(i, j, true);
    return m.rank();
}

bool gf2_in_span(const std::vector<Gf2Vec>& span, const Gf2Vec& v) {
    std::vector<Gf2Vec> all = span;
    all.push_back(v);
    return gf2_rank(all) == gf2_rank(span);
}

}  // namespace cabletau
