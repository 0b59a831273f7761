#include "waring/scalar.hpp"

namespace waring {

std::string ring_name(RingTag tag) { return tag == RingTag::qq_i ? "qq_i" : "c64"; }

RingTag ring_from_name(const std::string& name) {
    if (name == "qq_i") return RingTag::qq_i;
    if (name == "c64") return RingTag::c64;
    throw std::invalid_argument("unknown ring tag: " + name);
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(Rat(r.get_den())) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string qqi_str(const QQi& z) {
    if (z.is_real()) return rat_str(z.re);
    return rat_str(z.re) + (sgn(z.im) >= 0 ? "+" : "") + rat_str(z.im) + "*i";
}

std::uint64_t RatSampler::next_u64() {
    // splitmix64
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rat RatSampler::next(long lo, long hi, long max_den, bool nonzero) {
    for (;;) {
        long span = hi - lo + 1;
        long num = lo + long(next_u64() % std::uint64_t(span));
        long den = 1 + long(next_u64() % std::uint64_t(max_den));
        Rat r(num, den);
        r.canonicalize();
        if (nonzero && sgn(r) == 0) continue;
        return r;
    }
}

double RatSampler::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace waring
