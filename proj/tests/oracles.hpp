#pragma once

// Independent reference implementations used only to check the library:
// a bubble-sort blade product, a hand-rolled Gauss-Jordan nullspace over
// plain std::vector storage, and a cofactor-expansion determinant. None of
// them share code with the implementation paths they verify.

#include <cstdint>
#include <utility>
#include <vector>

#include "cartan/bilinear.hpp"
#include "cartan/scalar.hpp"

namespace oracles {

using cartan::Rational;
using cartan::Signature;

// Multiply e_A e_B by listing the generator indices, bubble-sorting with a
// sign flip per adjacent swap, then cancelling equal neighbours with the
// metric sign.
inline std::pair<int, std::uint32_t> naive_blade_product(std::uint32_t a, std::uint32_t b,
                                                         const Signature& sig) {
    std::vector<int> idx;
    for (int i = 0; i < sig.dim(); ++i)
        if (a & (1u << i))
            idx.push_back(i);
    for (int i = 0; i < sig.dim(); ++i)
        if (b & (1u << i))
            idx.push_back(i);

    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t t = 0; t + 1 < idx.size(); ++t)
            if (idx[t] > idx[t + 1]) {
                std::swap(idx[t], idx[t + 1]);
                sign = -sign;
                moved = true;
            }
    }
    for (size_t t = 0; t + 1 < idx.size();) {
        if (idx[t] == idx[t + 1]) {
            if (idx[t] >= sig.p)
                sign = -sign;
            idx.erase(idx.begin() + static_cast<long>(t), idx.begin() + static_cast<long>(t) + 2);
            t = 0;
        } else {
            ++t;
        }
    }
    std::uint32_t blade = 0;
    for (int i : idx)
        blade |= 1u << i;
    return {sign, blade};
}

using Table = std::vector<std::vector<Rational>>;

// Nullspace of an n x n rational matrix by Gauss-Jordan elimination on raw
// vectors-of-vectors.
inline std::vector<std::vector<Rational>> nullspace(Table m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != Rational(0)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        Rational f = m[r][c];
        for (int j = 0; j < cols; ++j)
            m[r][j] /= f;
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            Rational g = m[i][c];
            if (g == Rational(0))
                continue;
            for (int j = 0; j < cols; ++j)
                m[i][j] -= g * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        bool is_pivot = false;
        for (int pc : pivot_col)
            if (pc == free)
                is_pivot = true;
        if (is_pivot)
            continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free)] = Rational(1);
        for (size_t t = 0; t < pivot_col.size(); ++t)
            v[static_cast<size_t>(pivot_col[t])] = -m[t][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Determinant by cofactor expansion along the first row.
inline Rational cofactor_determinant(const Table& m) {
    const size_t n = m.size();
    if (n == 0)
        return Rational(1);
    if (n == 1)
        return m[0][0];
    Rational det(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == Rational(0))
            continue;
        Table minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace oracles
