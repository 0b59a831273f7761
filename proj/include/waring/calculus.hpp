#pragma once

#include "waring/detops.hpp"

namespace waring {

template <class R>
Matrix<Poly<R>> hessian_matrix(const Poly<R>& p) {
    int n = p.nvars();
    Matrix<Poly<R>> h(size_t(n), std::vector<Poly<R>>(size_t(n), Poly<R>(n)));
    for (int i = 0; i < n; ++i) {
        Poly<R> di = derivative(p, i);
        for (int j = i; j < n; ++j) {
            h[size_t(i)][size_t(j)] = derivative(di, j);
            if (j != i) h[size_t(j)][size_t(i)] = h[size_t(i)][size_t(j)];
        }
    }
    return h;
}

/// Determinant of the matrix of second partials.  Fraction-free elimination
/// on the exact track, cofactor expansion on the float track; n <= 5.
inline PolyQ hessian_det(const PolyQ& p) {
    if (p.nvars() > 5) throw std::invalid_argument("hessian_det: too many variables");
    return det_bareiss(hessian_matrix(p));
}
inline PolyC hessian_det(const PolyC& p) {
    if (p.nvars() > 5) throw std::invalid_argument("hessian_det: too many variables");
    return det_laplace(hessian_matrix(p));
}

/// Maximal e >= 0 with alpha^e dividing p, alpha a nonzero linear form.
/// A coordinate change sends alpha to the pivot variable; the answer is the
/// minimal exponent of that variable afterwards, so no division is needed.
template <class R>
int divides_power_impl(const Poly<R>& p, const Poly<R>& alpha, double rel_tol) {
    if (alpha.total_degree() != 1) throw std::invalid_argument("divides_power: alpha not linear");
    if (p.is_zero()) throw std::invalid_argument("divides_power: zero polynomial");
    int n = p.nvars();
    std::vector<R> a(size_t(n), ring_ops<R>::zero());
    for (auto& [m, c] : alpha.terms())
        for (int i = 0; i < n; ++i)
            if (m.e[i] == 1) a[size_t(i)] = c;
    int piv = -1;
    double best = -1;
    for (int i = 0; i < n; ++i) {
        double v = ring_ops<R>::abs_est(a[size_t(i)]);
        if (v > best) best = v, piv = i;
    }
    // invert y_piv = alpha(x), y_i = x_i elsewhere:
    //   x_piv = (y_piv - sum_{i != piv} a_i y_i) / a_piv
    std::vector<std::vector<R>> rows(size_t(n), std::vector<R>(size_t(n), ring_ops<R>::zero()));
    for (int i = 0; i < n; ++i) rows[size_t(i)][size_t(i)] = ring_ops<R>::one();
    R inv = ring_ops<R>::one() / a[size_t(piv)];
    for (int i = 0; i < n; ++i)
        rows[size_t(piv)][size_t(i)] = (i == piv) ? inv : -(a[size_t(i)] * inv);
    Poly<R> q = substitute_linear(p, rows);
    double cut = ring_ops<R>::exact ? 0.0 : rel_tol * q.max_abs_coeff();
    int e = std::numeric_limits<int>::max();
    for (auto& [m, c] : q.terms()) {
        if (ring_ops<R>::abs_est(c) <= cut) continue;
        e = std::min(e, m.e[size_t(piv)]);
        if (e == 0) break;
    }
    return e;
}

inline int divides_power(const PolyQ& p, const PolyQ& alpha) {
    return divides_power_impl(p, alpha, 0.0);
}
inline int divides_power(const PolyC& p, const PolyC& alpha, double rel_tol = 1e-9) {
    return divides_power_impl(p, alpha, rel_tol);
}

}  // namespace waring
