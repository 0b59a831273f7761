#pragma once

#include <numeric>
#include <vector>

namespace waring {

/// Exponent vector of a monomial; length equals the ambient variable count.
struct Mono {
    std::vector<int> e;

    Mono() = default;
    explicit Mono(int nvars) : e(nvars, 0) {}
    explicit Mono(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return int(e.size()); }
    int deg() const { return std::accumulate(e.begin(), e.end(), 0); }

    friend Mono operator*(const Mono& a, const Mono& b) {
        Mono r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    /// Componentwise a/b; caller must know b divides a.
    friend Mono operator/(const Mono& a, const Mono& b) {
        Mono r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
        return r;
    }
    bool divides(const Mono& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

/// Graded lexicographic order with x1 > x2 > ..., descending: the map's
/// begin() is the leading term.
struct GrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.deg(), db = b.deg();
        if (da != db) return da > db;
        return a.e > b.e;  // lexicographic on exponent vectors
    }
};

}  // namespace waring
