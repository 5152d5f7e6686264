#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "glab/errors.hpp"
#include "glab/gf2k.hpp"

namespace glab {

// dst += c * src, elementwise over the field. All fields here have
// characteristic 2, so this is also the row-elimination step. The
// coefficient is taken by value: callers pass entries of dst itself.
template <class F>
void row_axpy(std::vector<F>& dst, const std::vector<F>& src, F c) {
    if (c.is_zero()) return;
    if constexpr (std::is_same_v<F, Gf2k<64>>) {
        static_assert(sizeof(Gf2k<64>) == 8 && std::is_standard_layout_v<Gf2k<64>>);
        auto* d = reinterpret_cast<uint64_t*>(dst.data());
        auto* s = reinterpret_cast<const uint64_t*>(src.data());
        if (c == F::one())
            simd::xor_words(d, s, dst.size());
        else
            simd::gf2k64_axpy(d, s, dst.size(), c.word(), Gf2k<64>::modulus_low);
    } else {
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    }
}

template <class F>
void row_scale(std::vector<F>& row, const F& c) {
    for (auto& x : row) x *= c;
}

// reduced row echelon form with unit pivots
template <class F>
struct Rref {
    std::vector<std::vector<F>> rows;
    std::vector<std::size_t> pivot_cols; // one per row, strictly increasing scan order
    std::size_t rank() const { return rows.size(); }
};

template <class F>
Rref<F> rref(std::vector<std::vector<F>> m) {
    Rref<F> out;
    if (m.empty()) return out;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i][c].is_invertible()) {
                piv = i;
                break;
            }
        }
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        row_scale(m[r], m[r][c].inverse());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i != r && !m[i][c].is_zero()) row_axpy(m[i], m[r], m[i][c]);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

template <class F>
std::size_t matrix_rank(std::vector<std::vector<F>> m) {
    return rref(std::move(m)).rank();
}

// solve square A x = b; pivots must be invertible elements (over dual-lifted
// scalars an entry can be nonzero yet non-invertible, which counts as singular)
template <class F>
std::vector<F> solve_square(std::vector<std::vector<F>> a, std::vector<F> b) {
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (a[i][c].is_invertible()) {
                piv = i;
                break;
            }
        }
        if (piv == n) throw singular_solve("no invertible pivot in column");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        F ic = a[c][c].inverse();
        row_scale(a[c], ic);
        b[c] *= ic;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && !a[i][c].is_zero()) {
                F f = a[i][c];
                row_axpy(a[i], a[c], f);
                b[i] += f * b[c];
            }
        }
    }
    return b;
}

} // namespace glab
