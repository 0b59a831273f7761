#include <sstream>

#include "waring/poly_json.hpp"

namespace waring {

// Scalars: exact values ride as strings "p/q" (object form when the
// imaginary part is nonzero), float values as JSON numbers.
Json scalar_to_json(const QQi& c) {
    if (c.is_real()) return rat_str(c.re);
    return Json{{"re", rat_str(c.re)}, {"im", rat_str(c.im)}};
}

Json scalar_to_json(const C64& c) {
    if (c.imag() == 0.0) return c.real();
    return Json{{"re", c.real()}, {"im", c.imag()}};
}

QQi qqi_from_json(const Json& j) {
    if (j.is_string()) return QQi(parse_rat(j.get<std::string>()));
    if (j.is_number_integer()) return QQi(Rat(j.get<long>()));
    if (j.is_object()) {
        Rat re = j.contains("re") ? parse_rat(j.at("re").get<std::string>()) : Rat(0);
        Rat im = j.contains("im") ? parse_rat(j.at("im").get<std::string>()) : Rat(0);
        return QQi(re, im);
    }
    throw std::invalid_argument("exact scalar must be \"p/q\" or {re,im}");
}

C64 c64_from_json(const Json& j) {
    if (j.is_number()) return C64(j.get<double>(), 0.0);
    if (j.is_string()) {
        Rat r = parse_rat(j.get<std::string>());
        return C64(r.get_d(), 0.0);
    }
    if (j.is_object()) {
        double re = j.contains("re") ? j.at("re").get<double>() : 0.0;
        double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return C64(re, im);
    }
    throw std::invalid_argument("float scalar must be a number or {re,im}");
}

Json poly_to_json(const PolyQ& p) {
    Json terms = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = m.e;
        t["re"] = rat_str(c.re);
        t["im"] = rat_str(c.im);
        terms.push_back(std::move(t));
    }
    return Json{{"vars", p.nvars()}, {"ring", "qq_i"}, {"terms", std::move(terms)}};
}

Json poly_to_json(const PolyC& p) {
    Json terms = Json::array();
    for (auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = m.e;
        t["re"] = c.real();
        t["im"] = c.imag();
        terms.push_back(std::move(t));
    }
    return Json{{"vars", p.nvars()}, {"ring", "c64"}, {"terms", std::move(terms)}};
}

template <class R, class Conv>
static Poly<R> poly_from_json_impl(const Json& j, Conv conv) {
    int n = j.at("vars").get<int>();
    Poly<R> p(n);
    for (auto& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        if (int(e.size()) != n) throw std::invalid_argument("poly term arity mismatch");
        p.add_term(Mono(std::move(e)), conv(t));
    }
    return p;
}

PolyQ poly_q_from_json(const Json& j) {
    if (j.contains("ring") && j.at("ring").get<std::string>() != "qq_i")
        throw std::invalid_argument("polynomial is not in the exact ring");
    return poly_from_json_impl<QQi>(j, [](const Json& t) {
        Rat re = t.contains("re") ? parse_rat(t.at("re").get<std::string>()) : Rat(0);
        Rat im = t.contains("im") ? parse_rat(t.at("im").get<std::string>()) : Rat(0);
        return QQi(re, im);
    });
}

PolyC poly_c_from_json(const Json& j) {
    return poly_from_json_impl<C64>(j, [](const Json& t) {
        double re = t.contains("re") ? t.at("re").get<double>() : 0.0;
        double im = t.contains("im") ? t.at("im").get<double>() : 0.0;
        return C64(re, im);
    });
}

template <class R>
static std::string poly_str_impl(const Poly<R>& p, const std::vector<std::string>& vars,
                                 const std::function<std::string(const R&)>& fmt) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        std::string cs = fmt(c);
        if (!first) os << (cs.size() && cs[0] == '-' ? " - " : " + ");
        else if (cs.size() && cs[0] == '-') os << "-";
        first = false;
        std::string mag = (cs.size() && cs[0] == '-') ? cs.substr(1) : cs;
        bool has_vars = m.deg() > 0;
        if (mag != "1" || !has_vars) os << mag;
        bool star = mag != "1" || !has_vars;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << (i < int(vars.size()) ? vars[i] : "x" + std::to_string(i + 1));
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

std::string poly_str(const PolyQ& p, const std::vector<std::string>& vars) {
    return poly_str_impl<QQi>(p, vars, [](const QQi& c) {
        return c.is_real() ? rat_str(c.re) : "(" + qqi_str(c) + ")";
    });
}

std::string poly_str(const PolyC& p, const std::vector<std::string>& vars) {
    return poly_str_impl<C64>(p, vars, [](const C64& c) {
        std::ostringstream os;
        if (c.imag() == 0.0) os << c.real();
        else os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        return os.str();
    });
}

}  // namespace waring
