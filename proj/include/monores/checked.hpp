#pragma once

// Overflow-checked integer arithmetic and the small amount of exact integer
// linear algebra the polyhedral code needs (determinants, rank, null vectors).

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "monores/error.hpp"

namespace monores {

using Int = std::int64_t;
using Wide = __int128;

inline Int checkedAdd(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition");
    return r;
}

inline Int checkedSub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction");
    return r;
}

inline Int checkedMul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication");
    return r;
}

inline Int narrow(Wide w, const char* where) {
    if (w > static_cast<Wide>(INT64_MAX) || w < static_cast<Wide>(INT64_MIN))
        throw OverflowError(where);
    return static_cast<Int>(w);
}

inline Int checkedDot(std::span<const Int> a, std::span<const Int> b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checkedAdd(s, checkedMul(a[i], b[i]));
    return s;
}

/// Dense row-major integer matrix used only as scratch space.
using IntMatrix = std::vector<std::vector<Int>>;

namespace detail {

inline Wide wideMul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("determinant");
    return r;
}

inline Wide wideSub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("determinant");
    return r;
}

// Fraction-free (Bareiss) elimination in place. Returns the rank; `sign`
// collects row swaps so that for square input the determinant is
// sign * m[rank-1][rank-1] when rank == size.
inline std::size_t bareiss(std::vector<std::vector<Wide>>& m, int& sign) {
    sign = 1;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    Wide prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(m[piv], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = wideSub(wideMul(m[i][j], m[r][c]), wideMul(m[i][c], m[r][j])) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

inline std::vector<std::vector<Wide>> widen(const IntMatrix& m) {
    std::vector<std::vector<Wide>> w(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
    return w;
}

}  // namespace detail

/// Exact determinant of a square matrix. The empty matrix has determinant 1.
inline Int determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw DimensionMismatch(n, row.size());
    auto w = detail::widen(m);
    int sign = 1;
    // Bareiss needs the pivots on the diagonal, so eliminate column by column
    // and bail out as soon as a column has no pivot.
    Wide prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && w[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(w[piv], w[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                w[i][j] = detail::wideSub(detail::wideMul(w[i][j], w[k][k]),
                                          detail::wideMul(w[i][k], w[k][j])) /
                          prev;
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    return narrow(sign * w[n - 1][n - 1], "determinant");
}

/// Rank of an arbitrary (possibly empty) integer matrix.
inline std::size_t rank(const IntMatrix& m) {
    if (m.empty() || m[0].empty()) return 0;
    auto w = detail::widen(m);
    int sign = 1;
    return detail::bareiss(w, sign);
}

/// Generalized cross product of k = n-1 row vectors in Z^n: the vector whose
/// j-th entry is (-1)^j times the minor with column j removed. It is orthogonal
/// to every row, and zero exactly when the rows are linearly dependent.
inline std::vector<Int> nullVector(const IntMatrix& rows, std::size_t n) {
    std::vector<Int> out(n, 0);
    IntMatrix minor(rows.size(), std::vector<Int>(n == 0 ? 0 : n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) minor[i][c++] = rows[i][k];
        }
        Int d = determinant(minor);
        out[j] = (j % 2 == 0) ? d : checkedSub(0, d);
    }
    return out;
}

/// Divide by the gcd of the entries. A zero vector is returned unchanged.
inline std::vector<Int> primitive(std::vector<Int> v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

}  // namespace monores
