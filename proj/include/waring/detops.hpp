#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "waring/poly.hpp"
#include "waring/unipoly.hpp"

namespace waring {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant over a field by Gaussian elimination with row pivoting.
/// Exact for QQi; for C64 the pivot is the largest magnitude in the column.
template <class R>
R det_field(Matrix<R> m) {
    const size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_field: not square");
    R det = ring_ops<R>::one();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        if constexpr (ring_ops<R>::exact) {
            while (piv < n && ring_ops<R>::is_zero(m[piv][k])) ++piv;
            if (piv == n) return ring_ops<R>::zero();
        } else {
            double best = ring_ops<R>::abs_est(m[k][k]);
            for (size_t i = k + 1; i < n; ++i) {
                double v = ring_ops<R>::abs_est(m[i][k]);
                if (v > best) best = v, piv = i;
            }
            if (best == 0.0) return ring_ops<R>::zero();
        }
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        R inv = ring_ops<R>::one() / m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (ring_ops<R>::is_zero(m[i][k])) continue;
            R f = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

/// Rank over a field.  rel_tol only matters for C64 (entries below
/// rel_tol * max_entry count as zero).
template <class R>
int rank_field(Matrix<R> m, double rel_tol = 1e-9) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    double scale = 0;
    if constexpr (!ring_ops<R>::exact) {
        for (auto& row : m)
            for (auto& v : row) scale = std::max(scale, ring_ops<R>::abs_est(v));
        if (scale == 0.0) return 0;
    }
    auto negligible = [&](const R& v) {
        if constexpr (ring_ops<R>::exact)
            return ring_ops<R>::is_zero(v);
        else
            return ring_ops<R>::abs_est(v) <= rel_tol * scale;
    };
    int rank = 0;
    size_t r = 0;
    for (size_t k = 0; k < cols && r < rows; ++k) {
        size_t piv = r;
        double best = -1;
        for (size_t i = r; i < rows; ++i) {
            double v = ring_ops<R>::abs_est(m[i][k]);
            if (v > best) best = v, piv = i;
        }
        if (negligible(m[piv][k])) continue;
        std::swap(m[piv], m[r]);
        R inv = ring_ops<R>::one() / m[r][k];
        for (size_t i = r + 1; i < rows; ++i) {
            R f = m[i][k] * inv;
            for (size_t j = k; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

/// Fraction-free Bareiss determinant for matrices with exact polynomial
/// entries; every division is exact by the Bareiss identity.
template <class R>
Poly<R> det_bareiss(Matrix<Poly<R>> m) {
    static_assert(ring_ops<R>::exact, "det_bareiss needs an exact coefficient ring");
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det_bareiss: empty matrix");
    int nv = m[0][0].nvars();
    auto one = Poly<R>::constant(nv, ring_ops<R>::one());
    Poly<R> prev = one;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly<R>(nv);  // zero column below diagonal
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly<R> t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (k == 0) {
                    m[i][j] = t;
                } else {
                    auto q = try_divide(t, prev);
                    if (!q) throw std::logic_error("det_bareiss: inexact division");
                    m[i][j] = *q;
                }
            }
            m[i][k] = Poly<R>(nv);
        }
        prev = m[k][k];
    }
    Poly<R> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Cofactor expansion; fine for the small float matrices (n <= 5).
template <class R>
Poly<R> det_laplace(const Matrix<Poly<R>>& m) {
    const size_t n = m.size();
    int nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    Poly<R> acc(nv);
    Matrix<Poly<R>> sub(n - 1, std::vector<Poly<R>>(n - 1, Poly<R>(nv)));
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        for (size_t i = 0, si = 0; i < n; ++i) {
            if (i == r) continue;
            for (size_t j = 1; j < n; ++j) sub[si][j - 1] = m[i][j];
            ++si;
        }
        Poly<R> c = m[r][0] * det_laplace(sub);
        acc = (r % 2 == 0) ? acc + c : acc - c;
    }
    return acc;
}

/// Sylvester matrix of (g, h) at formal degrees (dg, dh): dh rows of g's
/// coefficients leading-first, then dg rows of h's.
template <class T, class P>
Matrix<T> sylvester_matrix(const P& g, const P& h, int dg, int dh, const T& zero) {
    int n = dg + dh;
    if (n <= 0) throw std::invalid_argument("sylvester_matrix: both degrees zero");
    Matrix<T> m(n, std::vector<T>(n, zero));
    for (int r = 0; r < dh; ++r)
        for (int j = 0; j <= dg; ++j) m[r][r + j] = g.coeff(dg - j);
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= dh; ++j) m[dh + r][r + j] = h.coeff(dh - j);
    return m;
}

}  // namespace waring
