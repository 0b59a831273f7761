#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/monomial.hpp"
#include "waring/scalar.hpp"

namespace waring {

/// Sparse multivariate polynomial over R in {QQi, C64}.  Zero coefficients
/// are never stored; terms iterate in descending grlex order, so begin() is
/// the leading term.  Values are immutable in spirit: every operation
/// returns a fresh polynomial.
template <class R>
class Poly {
public:
    using Terms = std::map<Mono, R, GrlexGreater>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const R& c) {
        Poly p(nvars);
        p.add_term(Mono(nvars), c);
        return p;
    }
    static Poly variable(int nvars, int i, const R& c = ring_ops<R>::one()) {
        Poly p(nvars);
        Mono m(nvars);
        m.e[i] = 1;
        p.add_term(m, c);
        return p;
    }
    /// Linear form from a coefficient vector.
    static Poly linear(const std::vector<R>& coeffs) {
        Poly p(int(coeffs.size()));
        for (size_t i = 0; i < coeffs.size(); ++i) {
            Mono m(int(coeffs.size()));
            m.e[i] = 1;
            p.add_term(m, coeffs[i]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.deg(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.deg();
        for (auto& [m, c] : terms_)
            if (m.deg() != d) return false;
        return true;
    }

    const R* coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add_term(const Mono& m, const R& c) {
        if (int(m.e.size()) != nvars_) throw std::invalid_argument("Poly: monomial arity mismatch");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (ring_ops<R>::is_zero(it->second)) terms_.erase(it);
        } else if (ring_ops<R>::is_zero(c)) {
            terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_arity(a, b);
        Poly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check_arity(a, b);
        Poly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_arity(a, b);
        Poly r(a.nvars_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const R& c, const Poly& a) {
        Poly r(a.nvars_);
        if (ring_ops<R>::is_zero(c)) return r;
        for (auto& [m, v] : a.terms_) {
            R cv = c * v;
            if (!ring_ops<R>::is_zero(cv)) r.terms_.emplace(m, cv);
        }
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Largest coefficient magnitude; scale reference for float tolerances.
    double max_abs_coeff() const {
        double s = 0;
        for (auto& [m, c] : terms_) s = std::max(s, ring_ops<R>::abs_est(c));
        return s;
    }

    /// Drop terms with |coeff| <= eps * max_abs_coeff (float hygiene).
    Poly pruned(double eps) const {
        double cut = eps * max_abs_coeff();
        Poly r(nvars_);
        for (auto& [m, c] : terms_)
            if (ring_ops<R>::abs_est(c) > cut) r.terms_.emplace(m, c);
        return r;
    }

private:
    static void check_arity(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    }

    int nvars_;
    Terms terms_;
};

using PolyQ = Poly<QQi>;
using PolyC = Poly<C64>;

template <class R>
Poly<R> pow_poly(const Poly<R>& p, int e) {
    if (e < 0) throw std::invalid_argument("pow_poly: negative exponent");
    Poly<R> r = Poly<R>::constant(p.nvars(), ring_ops<R>::one());
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

template <class R>
Poly<R> derivative(const Poly<R>& p, int var) {
    if (var < 0 || var >= p.nvars()) throw std::out_of_range("derivative: bad variable index");
    Poly<R> r(p.nvars());
    for (auto& [m, c] : p.terms()) {
        if (m.e[var] == 0) continue;
        Mono q = m;
        q.e[var] -= 1;
        r.add_term(q, ring_ops<R>::from_long(m.e[var]) * c);
    }
    return r;
}

template <class R>
R evaluate(const Poly<R>& p, std::span<const R> point) {
    if (int(point.size()) != p.nvars()) throw std::invalid_argument("evaluate: dimension mismatch");
    // power tables per variable
    std::vector<std::vector<R>> pw(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) pw[i].push_back(ring_ops<R>::one());
    R acc = ring_ops<R>::zero();
    for (auto& [m, c] : p.terms()) {
        R t = c;
        for (int i = 0; i < p.nvars(); ++i) {
            while (int(pw[i].size()) <= m.e[i]) pw[i].push_back(pw[i].back() * point[i]);
            t = t * pw[i][m.e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

template <class R>
R evaluate(const Poly<R>& p, const std::vector<R>& point) {
    return evaluate(p, std::span<const R>(point));
}

/// p(l_1,...,l_n) where variable i is replaced by the linear form rows[i]
/// over n_out variables.  Used for coordinate changes and dehomogenization.
template <class R>
Poly<R> substitute_linear(const Poly<R>& p, const std::vector<std::vector<R>>& rows) {
    if (int(rows.size()) != p.nvars()) throw std::invalid_argument("substitute_linear: row count");
    int n_out = rows.empty() ? 0 : int(rows[0].size());
    std::vector<Poly<R>> forms;
    forms.reserve(rows.size());
    for (auto& row : rows) {
        if (int(row.size()) != n_out) throw std::invalid_argument("substitute_linear: ragged rows");
        forms.push_back(Poly<R>::linear(row));
    }
    std::vector<std::vector<Poly<R>>> pw(p.nvars());
    for (int i = 0; i < p.nvars(); ++i)
        pw[i].push_back(Poly<R>::constant(n_out, ring_ops<R>::one()));
    Poly<R> acc(n_out);
    for (auto& [m, c] : p.terms()) {
        Poly<R> t = Poly<R>::constant(n_out, c);
        for (int i = 0; i < p.nvars(); ++i) {
            while (int(pw[i].size()) <= m.e[i]) pw[i].push_back(pw[i].back() * forms[i]);
            t = t * pw[i][m.e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

/// Affine substitution x_i -> rows[i] + shift[i].
template <class R>
Poly<R> substitute_affine(const Poly<R>& p, const std::vector<std::vector<R>>& rows,
                          const std::vector<R>& shift) {
    int n_out = rows.empty() ? int(shift.size()) : int(rows[0].size());
    std::vector<Poly<R>> forms;
    for (size_t i = 0; i < rows.size(); ++i) {
        Poly<R> f = Poly<R>::linear(rows[i]);
        f.add_term(Mono(n_out), shift[i]);
        forms.push_back(f);
    }
    std::vector<std::vector<Poly<R>>> pw(p.nvars());
    for (int i = 0; i < p.nvars(); ++i)
        pw[i].push_back(Poly<R>::constant(n_out, ring_ops<R>::one()));
    Poly<R> acc(n_out);
    for (auto& [m, c] : p.terms()) {
        Poly<R> t = Poly<R>::constant(n_out, c);
        for (int i = 0; i < p.nvars(); ++i) {
            while (int(pw[i].size()) <= m.e[i]) pw[i].push_back(pw[i].back() * forms[i]);
            t = t * pw[i][m.e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

/// Exact single-divisor division; nullopt if q does not divide p.
/// Over a field, leading-term division decides divisibility.
template <class R>
std::optional<Poly<R>> try_divide(const Poly<R>& p, const Poly<R>& q) {
    if (q.is_zero()) return std::nullopt;
    Poly<R> rem = p, quo(p.nvars());
    const auto& qlt = *q.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().begin();
        if (!qlt.first.divides(rlt.first)) return std::nullopt;
        Mono m = rlt.first / qlt.first;
        R c = rlt.second / qlt.second;
        quo.add_term(m, c);
        Poly<R> t(p.nvars());
        t.add_term(m, c);
        rem = rem - t * q;
    }
    return quo;
}

std::string poly_str(const PolyQ& p, const std::vector<std::string>& vars);
std::string poly_str(const PolyC& p, const std::vector<std::string>& vars);

PolyC to_c64(const PolyQ& p);

}  // namespace waring
