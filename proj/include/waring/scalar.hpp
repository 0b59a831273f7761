#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace waring {

using Rat = mpq_class;
using C64 = std::complex<double>;

enum class RingTag { qq_i, c64 };

std::string ring_name(RingTag tag);
RingTag ring_from_name(const std::string& name);

/// Exact Gaussian rational re + im*i.  Both parts are kept in reduced
/// normal form by mpq_class itself.
struct QQi {
    Rat re, im;

    QQi() : re(0), im(0) {}
    QQi(long v) : re(v), im(0) {}
    QQi(const Rat& r) : re(r), im(0) {}
    QQi(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    QQi conj() const { return QQi(re, -im); }
    Rat norm() const { return re * re + im * im; }

    C64 to_c64() const { return C64(re.get_d(), im.get_d()); }

    friend QQi operator+(const QQi& a, const QQi& b) { return QQi(a.re + b.re, a.im + b.im); }
    friend QQi operator-(const QQi& a, const QQi& b) { return QQi(a.re - b.re, a.im - b.im); }
    friend QQi operator-(const QQi& a) { return QQi(-a.re, -a.im); }
    friend QQi operator*(const QQi& a, const QQi& b) {
        return QQi(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend QQi operator/(const QQi& a, const QQi& b) {
        Rat n = b.norm();
        if (sgn(n) == 0) throw std::domain_error("QQi: division by zero");
        return QQi((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    QQi& operator+=(const QQi& b) { re += b.re; im += b.im; return *this; }
    QQi& operator-=(const QQi& b) { re -= b.re; im -= b.im; return *this; }
    QQi& operator*=(const QQi& b) { *this = *this * b; return *this; }

    friend bool operator==(const QQi& a, const QQi& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QQi& a, const QQi& b) { return !(a == b); }
    // Lexicographic; used only for deterministic ordering, not as a field order.
    friend bool operator<(const QQi& a, const QQi& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

/// "p/q" or "p"; throws on malformed input.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);
std::string qqi_str(const QQi& z);

// ---------------------------------------------------------------------------
// Ring traits for the templated polynomial kernels.  Every public operation
// is instantiated for QQi (exact track) and C64 (float track).

template <class R>
struct ring_ops;

template <>
struct ring_ops<QQi> {
    static constexpr RingTag tag = RingTag::qq_i;
    static constexpr bool exact = true;
    static QQi zero() { return QQi(); }
    static QQi one() { return QQi(1); }
    static QQi from_long(long v) { return QQi(v); }
    static bool is_zero(const QQi& x) { return x.is_zero(); }
    static C64 to_c64(const QQi& x) { return x.to_c64(); }
    static double abs_est(const QQi& x) { return std::abs(x.to_c64()); }
};

template <>
struct ring_ops<C64> {
    static constexpr RingTag tag = RingTag::c64;
    static constexpr bool exact = false;
    static C64 zero() { return C64(0.0, 0.0); }
    static C64 one() { return C64(1.0, 0.0); }
    static C64 from_long(long v) { return C64(double(v), 0.0); }
    static bool is_zero(const C64& x) { return x.real() == 0.0 && x.imag() == 0.0; }
    static C64 to_c64(const C64& x) { return x; }
    static double abs_est(const C64& x) { return std::abs(x); }
};

inline bool finite(const C64& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Deterministic random rationals for tests and grid sampling.
struct RatSampler {
    std::uint64_t state;
    explicit RatSampler(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next_u64();
    /// uniform in [lo, hi] with denominator <= max_den, never zero if nonzero=true
    Rat next(long lo, long hi, long max_den, bool nonzero);
    double next_unit();  // uniform in [0,1)
};

}  // namespace waring
