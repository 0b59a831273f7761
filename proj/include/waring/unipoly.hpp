#pragma once

#include <utility>
#include <vector>

#include "waring/scalar.hpp"

namespace waring {

/// Dense univariate polynomial, degree-indexed coefficients.  Leading
/// coefficient is nonzero unless the polynomial is zero (degree -1).
template <class R>
struct UniPoly {
    std::vector<R> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<R> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly constant(const R& v) {
        UniPoly p;
        p.c.push_back(v);
        p.trim();
        return p;
    }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const R& lc() const { return c.back(); }
    R coeff(int i) const { return (i >= 0 && i < int(c.size())) ? c[i] : ring_ops<R>::zero(); }

    void trim() {
        while (!c.empty() && ring_ops<R>::is_zero(c.back())) c.pop_back();
    }

    R operator()(const R& x) const {
        R acc = ring_ops<R>::zero();
        for (int i = degree(); i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<R> r(std::max(a.c.size(), b.c.size()), ring_ops<R>::zero());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<R> r(std::max(a.c.size(), b.c.size()), ring_ops<R>::zero());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<R> r(a.c.size());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = -a.c[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<R> r(a.c.size() + b.c.size() - 1, ring_ops<R>::zero());
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const R& s, const UniPoly& a) {
        std::vector<R> r(a.c.size());
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = s * a.c[i];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

    double max_abs_coeff() const {
        double s = 0;
        for (auto& v : c) s = std::max(s, ring_ops<R>::abs_est(v));
        return s;
    }
};

using UniQ = UniPoly<QQi>;
using UniC = UniPoly<C64>;

template <class R>
UniPoly<R> derivative(const UniPoly<R>& p) {
    if (p.degree() <= 0) return UniPoly<R>();
    std::vector<R> r(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = ring_ops<R>::from_long(long(i)) * p.c[i];
    return UniPoly<R>(std::move(r));
}

template <class R>
UniPoly<R> monic(const UniPoly<R>& p) {
    if (p.is_zero()) return p;
    R inv = ring_ops<R>::one() / p.lc();
    return inv * p;
}

/// Field division with remainder.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divrem(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("divrem: zero divisor");
    UniPoly<R> rem = a, quo;
    quo.c.assign(std::max<size_t>(1, a.c.size()), ring_ops<R>::zero());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        R f = rem.lc() / b.lc();
        quo.c[k] = quo.c[k] + f;
        for (int i = 0; i <= b.degree(); ++i) rem.c[i + k] = rem.c[i + k] - f * b.c[i];
        rem.c.pop_back();  // leading term cancels exactly by construction
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

UniC to_c64(const UniQ& p);

/// Monic gcd via the Euclidean remainder sequence; exact over QQ(i).
UniQ gcd_exact(const UniQ& a, const UniQ& b);

/// Yun squarefree decomposition: list of (squarefree factor, multiplicity),
/// multiplicities strictly increasing, product of f_i^{m_i} = monic(p).
std::vector<std::pair<UniQ, int>> squarefree_decomposition(const UniQ& p);

/// Complex root with its cluster data.
struct RootCluster {
    C64 value;
    int mult = 1;
    double radius = 0.0;
    bool warn = false;  // set when the clustering looked ill-conditioned
};

/// All complex roots with multiplicity.  Exact input goes through the
/// squarefree decomposition, so multiplicities are exact; float input uses
/// companion-matrix eigenvalues with multiplicity-adaptive merging.
std::vector<RootCluster> univariate_roots(const UniC& p, double tol = 1e-9);
std::vector<RootCluster> univariate_roots(const UniQ& p, double tol = 1e-9);

/// Approximate monic gcd by root matching at the given tolerance.
UniC gcd_float(const UniC& a, const UniC& b, double tol = 1e-9);

/// Sylvester resultant at the declared formal degrees, rows of g first.
/// Errors when both formal degrees are zero.
QQi resultant_uni(const UniQ& g, const UniQ& h, int deg_g, int deg_h);
C64 resultant_uni(const UniC& g, const UniC& h, int deg_g, int deg_h);

template <class R>
R resultant_uni(const UniPoly<R>& g, const UniPoly<R>& h) {
    return resultant_uni(g, h, g.degree(), h.degree());
}

/// deg gcd: exact for QQi, root matching for C64.
int common_root_degree(const UniQ& g, const UniQ& h);
int common_root_degree(const UniC& g, const UniC& h, double tol);

}  // namespace waring
