#include "waring/binary.hpp"

#include <cmath>
#include <numeric>

namespace waring {

PolyC to_c64(const PolyQ& p) {
    PolyC r(p.nvars());
    for (auto& [m, c] : p.terms()) r.add_term(m, c.to_c64());
    return r;
}

static void check_binary(int nvars, bool zero) {
    if (nvars != 2) throw std::invalid_argument("binary form expected (2 variables)");
    if (zero) throw std::invalid_argument("binary form must be nonzero");
}

static BinaryFactorization factor_from_roots(const std::vector<RootCluster>& roots, const C64& lc,
                                             int degree, int deg_g) {
    BinaryFactorization out;
    out.scale = lc;
    if (degree > deg_g) out.factors.push_back({{C64(0, 0), C64(1, 0)}, degree - deg_g});
    for (auto& r : roots) out.factors.push_back({{C64(1, 0), -r.value}, r.mult});
    return out;
}

BinaryFactorization binary_factor(const PolyC& h, double tol) {
    check_binary(h.nvars(), h.is_zero());
    PolyC hh = h.pruned(1e-13);
    int d = hh.total_degree();
    UniC g = dehomogenize_binary(hh);
    if (g.degree() <= 0) {  // pure power of y
        BinaryFactorization out;
        out.scale = g.coeff(0);
        out.factors.push_back({{C64(0, 0), C64(1, 0)}, d});
        return out;
    }
    return factor_from_roots(univariate_roots(g, tol), g.lc(), d, g.degree());
}

BinaryFactorization binary_factor(const PolyQ& h, double tol) {
    check_binary(h.nvars(), h.is_zero());
    int d = h.total_degree();
    UniQ g = dehomogenize_binary(h);
    if (g.degree() <= 0) {
        BinaryFactorization out;
        out.scale = g.coeff(0).to_c64();
        out.factors.push_back({{C64(0, 0), C64(1, 0)}, d});
        return out;
    }
    return factor_from_roots(univariate_roots(g, tol), g.lc().to_c64(), d, g.degree());
}

PolyC assemble_binary(const BinaryFactorization& f, int /*degree*/) {
    PolyC p = PolyC::constant(2, f.scale);
    for (auto& fac : f.factors) {
        PolyC lin(2);
        lin.add_term(Mono({1, 0}), fac.form[0]);
        lin.add_term(Mono({0, 1}), fac.form[1]);
        for (int i = 0; i < fac.mult; ++i) p = p * lin;
    }
    return p;
}

// e-th root of q with q(0)=1 by coefficient recursion; nullopt when q is not
// a perfect e-th power (exact) or misses the tolerance (float).
template <class R>
static std::optional<UniPoly<R>> series_root(const UniPoly<R>& q, int e, double tol) {
    int dq = q.degree();
    if (dq % e != 0) return std::nullopt;
    int dp = dq / e;
    std::vector<R> p(size_t(dp + 1), ring_ops<R>::zero());
    p[0] = ring_ops<R>::one();
    UniPoly<R> acc = UniPoly<R>::constant(ring_ops<R>::one());  // (partial p)^e
    R einv = ring_ops<R>::one() / ring_ops<R>::from_long(e);
    for (int j = 1; j <= dp; ++j) {
        p[size_t(j)] = (q.coeff(j) - acc.coeff(j)) * einv;
        UniPoly<R> pp(std::vector<R>(p.begin(), p.begin() + j + 1));
        acc = UniPoly<R>::constant(ring_ops<R>::one());
        for (int t = 0; t < e; ++t) acc = pp * acc;
    }
    UniPoly<R> root(std::move(p));
    UniPoly<R> diff = acc - q;
    if constexpr (ring_ops<R>::exact) {
        if (!diff.is_zero()) return std::nullopt;
    } else {
        if (diff.max_abs_coeff() > tol * std::max(1.0, q.max_abs_coeff())) return std::nullopt;
    }
    return root;
}

template <class R>
static PerfectPower<R> perfect_power_impl(const Poly<R>& h, const UniPoly<R>& g,
                                          const std::vector<int>& mults, double tol) {
    const int dh = h.total_degree();
    const int yb = dh - g.degree();
    int xa = 0;
    while (ring_ops<R>::is_zero(g.coeff(xa))) ++xa;
    UniPoly<R> ghat(std::vector<R>(g.c.begin() + xa, g.c.end()));

    int gc = std::gcd(xa, yb);
    for (int m : mults) gc = std::gcd(gc, m);
    if (mults.empty() && ghat.degree() > 0) gc = 1;  // no multiplicity information

    PerfectPower<R> out;
    for (int e = gc; e >= 2; --e) {
        if (gc % e != 0) continue;
        R c0 = ghat.coeff(0);
        UniPoly<R> q = (ring_ops<R>::one() / c0) * ghat;
        auto root = series_root(q, e, tol);
        if (!root) continue;
        Poly<R> base(2);
        base.add_term(Mono({xa / e, yb / e}), ring_ops<R>::one());
        base = base * homogenize_binary(*root, ghat.degree() / e);
        R lead = base.terms().begin()->second;
        out.e = e;
        out.base = (ring_ops<R>::one() / lead) * base;
        R lp = c0;
        for (int t = 0; t < e; ++t) lp = lp * lead;
        out.scale = lp;
        return out;
    }
    out.e = 1;
    R lead = h.terms().begin()->second;
    out.base = (ring_ops<R>::one() / lead) * h;
    out.scale = lead;
    return out;
}

PerfectPower<QQi> perfect_power_test(const PolyQ& h) {
    check_binary(h.nvars(), h.is_zero());
    UniQ g = dehomogenize_binary(h);
    std::vector<int> mults;
    if (g.degree() > 0) {
        int xa = 0;
        while (ring_ops<QQi>::is_zero(g.coeff(xa))) ++xa;
        UniQ ghat(std::vector<QQi>(g.c.begin() + xa, g.c.end()));
        for (auto& [f, m] : squarefree_decomposition(ghat))
            for (int t = 0; t < f.degree(); ++t) mults.push_back(m);
    }
    return perfect_power_impl(h, g, mults, 0.0);
}

PerfectPower<C64> perfect_power_test(const PolyC& h, double tol) {
    check_binary(h.nvars(), h.is_zero());
    PolyC hh = h.pruned(1e-12);
    UniC g = dehomogenize_binary(hh);
    std::vector<int> mults;
    if (g.degree() > 0) {
        int xa = 0;
        while (ring_ops<C64>::is_zero(g.coeff(xa))) ++xa;
        UniC ghat(std::vector<C64>(g.c.begin() + xa, g.c.end()));
        if (ghat.degree() > 0)
            for (auto& r : univariate_roots(ghat, tol)) mults.push_back(r.mult);
    }
    return perfect_power_impl(hh, g, mults, tol);
}

}  // namespace waring
