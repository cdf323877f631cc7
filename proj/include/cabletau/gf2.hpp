// Dense GF(2) linear algebra on bit-packed rows. Sizes here are tiny
// (tens of generators), so simplicity beats blocking tricks.
#pragma once

#include <cstdint>
#include <vector>

namespace cabletau {

class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(size_t(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[size_t(r) * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool v) {
        uint64_t& w = data_[size_t(r) * words_ + c / 64];
        uint64_t m = uint64_t(1) << (c % 64);
        if (v) w |= m; else w &= ~m;
    }
    void flip(int r, int c) { data_[size_t(r) * words_ + c / 64] ^= uint64_t(1) << (c % 64); }

    void xor_row(int dst, int src) {
        for (int w = 0; w < words_; ++w)
            data_[size_t(dst) * words_ + w] ^= data_[size_t(src) * words_ + w];
    }

    // Rank via row reduction on a copy.
    int rank() const {
        Gf2Matrix m = *this;
        int r = 0;
        for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
            int piv = -1;
            for (int i = r; i < m.rows_; ++i)
                if (m.get(i, c)) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, r);
            for (int i = 0; i < m.rows_; ++i)
                if (i != r && m.get(i, c)) m.xor_row(i, r);
            ++r;
        }
        return r;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int w = 0; w < words_; ++w)
            std::swap(data_[size_t(a) * words_ + w], data_[size_t(b) * words_ + w]);
    }

private:
    int rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

using Gf2Vec = std::vector<bool>;

// Basis of the null space of M (solutions x of M x = 0), columns as vectors.
std::vector<Gf2Vec> gf2_kernel_basis(const Gf2Matrix& m);

// True iff v lies in the span of the given vectors (all of equal length).
bool gf2_in_span(const std::vector<Gf2Vec>& span, const Gf2Vec& v);

// Rank of a list of vectors.
int gf2_rank(const std::vector<Gf2Vec>& vecs);

}  // namespace cabletau
