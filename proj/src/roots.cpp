#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "waring/detops.hpp"
#include "waring/unipoly.hpp"

namespace waring {

UniC to_c64(const UniQ& p) {
    std::vector<C64> c(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) c[i] = p.c[i].to_c64();
    return UniC(std::move(c));
}

UniQ gcd_exact(const UniQ& a, const UniQ& b) {
    UniQ f = monic(a), g = monic(b);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    while (!g.is_zero()) {
        auto [q, r] = divrem(f, g);
        f = g;
        g = monic(r);
    }
    return f;  // already monic
}

std::vector<std::pair<UniQ, int>> squarefree_decomposition(const UniQ& p) {
    // Yun's algorithm, characteristic zero.
    std::vector<std::pair<UniQ, int>> out;
    UniQ f = monic(p);
    if (f.degree() <= 0) return out;
    UniQ fp = derivative(f);
    UniQ a = gcd_exact(f, fp);
    UniQ b = divrem(f, a).first;
    UniQ c = divrem(fp, a).first - derivative(b);
    int m = 1;
    while (b.degree() > 0) {
        UniQ g = gcd_exact(b, c);
        if (g.degree() > 0) out.push_back({g, m});
        b = divrem(b, g).first;
        c = divrem(c, g).first - derivative(b);
        ++m;
    }
    return out;
}

static std::vector<C64> companion_eigenvalues(const UniC& p) {
    int n = p.degree();
    std::vector<C64> roots;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-p.c[0] / p.c[1]);
        return roots;
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    C64 inv = C64(1.0, 0.0) / p.lc();
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) m(i + 1, i) = 1.0;
        m(i, n - 1) = -p.c[i] * inv;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

// Multiplicity-adaptive single-linkage merging.  An m-fold eigenvalue of a
// companion matrix scatters on a scale of eps^(1/m), so the merge radius has
// to grow with the cluster size under consideration.
static std::vector<RootCluster> cluster_roots(std::vector<C64> vals, double tol) {
    std::vector<RootCluster> cl;
    std::sort(vals.begin(), vals.end(), [](const C64& a, const C64& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (auto& v : vals) cl.push_back({v, 1, 0.0, false});

    const double base_eps = 1e-13;
    auto radius = [&](int m, double scale) {
        double r = tol * scale;
        if (m > 1) r = std::max(r, 30.0 * scale * std::pow(base_eps, 1.0 / m));
        return r;
    };

    bool merged = true;
    while (merged && cl.size() > 1) {
        merged = false;
        // closest pair; n is small here
        size_t bi = 0, bj = 1;
        double bd = std::abs(cl[0].value - cl[1].value);
        for (size_t i = 0; i < cl.size(); ++i)
            for (size_t j = i + 1; j < cl.size(); ++j) {
                double d = std::abs(cl[i].value - cl[j].value);
                if (d < bd) bd = d, bi = i, bj = j;
            }
        int m = cl[bi].mult + cl[bj].mult;
        double scale = std::max(1.0, std::abs(cl[bi].value));
        if (bd <= radius(m, scale)) {
            double wi = double(cl[bi].mult), wj = double(cl[bj].mult);
            C64 rep = (wi * cl[bi].value + wj * cl[bj].value) / (wi + wj);
            double rad = std::max({cl[bi].radius, cl[bj].radius, bd / 2});
            cl[bi] = {rep, m, rad, false};
            cl.erase(cl.begin() + long(bj));
            merged = true;
        }
    }
    // warn when a cluster's spread is large relative to its separation
    for (size_t i = 0; i < cl.size(); ++i) {
        double sep = 1e300;
        for (size_t j = 0; j < cl.size(); ++j)
            if (j != i) sep = std::min(sep, std::abs(cl[i].value - cl[j].value));
        if (cl[i].radius > 0 && sep < 10 * cl[i].radius) cl[i].warn = true;
    }
    return cl;
}

std::vector<RootCluster> univariate_roots(const UniC& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    return cluster_roots(companion_eigenvalues(p), tol);
}

std::vector<RootCluster> univariate_roots(const UniQ& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("univariate_roots: zero polynomial");
    std::vector<RootCluster> out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        auto simple = companion_eigenvalues(to_c64(factor));
        for (auto& v : simple) out.push_back({v, mult, 0.0, false});
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    (void)tol;
    return out;
}

UniC gcd_float(const UniC& a, const UniC& b, double tol) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    auto ra = univariate_roots(a, tol);
    auto rb = univariate_roots(b, tol);
    UniC g = UniC::constant(C64(1.0, 0.0));
    std::vector<bool> used(rb.size(), false);
    for (auto& ca : ra) {
        // best unused match in b
        int best = -1;
        double bd = 1e300;
        for (size_t j = 0; j < rb.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(ca.value - rb[j].value);
            if (d < bd) bd = d, best = int(j);
        }
        if (best < 0) continue;
        double scale = std::max(1.0, std::abs(ca.value));
        double rad = std::max({tol * scale, 10 * ca.radius, 10 * rb[best].radius});
        if (bd > rad) continue;
        used[best] = true;
        int m = std::min(ca.mult, rb[best].mult);
        C64 root = (ca.value + rb[best].value) * 0.5;
        UniC lin(std::vector<C64>{-root, C64(1.0, 0.0)});
        for (int i = 0; i < m; ++i) g = g * lin;
    }
    return g;
}

QQi resultant_uni(const UniQ& g, const UniQ& h, int dg, int dh) {
    if (dg <= 0 && dh <= 0) throw std::invalid_argument("resultant_uni: both inputs constant");
    if (g.is_zero() || h.is_zero()) throw std::invalid_argument("resultant_uni: zero input");
    auto m = sylvester_matrix(g, h, dg, dh, QQi());
    return det_field(std::move(m));
}

C64 resultant_uni(const UniC& g, const UniC& h, int dg, int dh) {
    if (dg <= 0 && dh <= 0) throw std::invalid_argument("resultant_uni: both inputs constant");
    if (g.is_zero() || h.is_zero()) throw std::invalid_argument("resultant_uni: zero input");
    auto m = sylvester_matrix(g, h, dg, dh, C64(0.0, 0.0));
    return det_field(std::move(m));
}

int common_root_degree(const UniQ& g, const UniQ& h) {
    return std::max(0, gcd_exact(g, h).degree());
}

int common_root_degree(const UniC& g, const UniC& h, double tol) {
    return std::max(0, gcd_float(g, h, tol).degree());
}

}  // namespace waring
