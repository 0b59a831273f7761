#pragma once

#include <array>

#include "waring/poly.hpp"
#include "waring/unipoly.hpp"

namespace waring {

/// One linear factor a*x + b*y of a binary form, with multiplicity.
struct BinaryFactor {
    std::array<C64, 2> form;
    int mult;
};

struct BinaryFactorization {
    std::vector<BinaryFactor> factors;
    C64 scale;  // h = scale * product of factors
};

/// Dehomogenize a nonzero homogeneous binary form: coefficient of x^j y^(D-j)
/// becomes the u^j coefficient of the returned polynomial (u = x/y).
template <class R>
UniPoly<R> dehomogenize_binary(const Poly<R>& h) {
    if (h.nvars() != 2) throw std::invalid_argument("dehomogenize_binary: need 2 variables");
    int d = h.total_degree();
    std::vector<R> c(size_t(d + 1), ring_ops<R>::zero());
    for (auto& [m, v] : h.terms()) c[size_t(m.e[0])] = v;
    return UniPoly<R>(std::move(c));
}

template <class R>
Poly<R> homogenize_binary(const UniPoly<R>& g, int degree) {
    Poly<R> h(2);
    for (int j = 0; j <= g.degree(); ++j) {
        if (ring_ops<R>::is_zero(g.c[size_t(j)])) continue;
        Mono m(2);
        m.e[0] = j;
        m.e[1] = degree - j;
        h.add_term(m, g.c[size_t(j)]);
    }
    return h;
}

/// Full factorization into linear forms over C.  The root at infinity shows
/// up as the factor y with the appropriate multiplicity.
BinaryFactorization binary_factor(const PolyC& h, double tol = 1e-9);
BinaryFactorization binary_factor(const PolyQ& h, double tol = 1e-9);

/// Reassemble scale * product(factors) as a PolyC; test helper.
PolyC assemble_binary(const BinaryFactorization& f, int degree);

/// Maximal e with h = scale * base^e; base normalized to leading
/// coefficient 1.  Exact over QQi, tolerance-checked over C64.
template <class R>
struct PerfectPower {
    int e = 1;
    Poly<R> base;
    R scale;
};

PerfectPower<QQi> perfect_power_test(const PolyQ& h);
PerfectPower<C64> perfect_power_test(const PolyC& h, double tol = 1e-9);

}  // namespace waring
