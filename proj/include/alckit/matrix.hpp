#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "alckit/rational.hpp"

namespace alckit {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = Rat(1);
    return m;
}

// Gauss-Jordan inverse.  Pivot choice is the first nonzero entry so the
// result is deterministic; throws on singular input.
inline RatMat rat_inverse(const RatMat& a) {
    std::size_t n = a.size();
    RatMat m = a;
    RatMat inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero())
            ++piv;
        if (piv == n)
            throw std::domain_error("rat_inverse: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero())
                continue;
            Rat f = m[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Row echelon rank; the input is copied.
inline std::size_t rat_rank(RatMat m) {
    if (m.empty())
        return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        Rat p = m[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            m[rank][j] /= p;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rank || m[row][col].is_zero())
                continue;
            Rat f = m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[row][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Kernel basis of m (as row constraints on a vector of `cols` unknowns).
// One basis vector per free column, unit at the free column, in increasing
// column order.
inline std::vector<RatVec> rat_nullspace(RatMat m, std::size_t cols) {
    std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero())
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        Rat p = m[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            m[rank][j] /= p;
        for (std::size_t row = 0; row < rows; ++row) {
            if (row == rank || m[row][col].is_zero())
                continue;
            Rat f = m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[row][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RatVec v(cols, Rat(0));
        v[free] = Rat(1);
        for (std::size_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace alckit
