#ifndef QSL_RATIONAL_HPP
#define QSL_RATIONAL_HPP

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsl {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "a" or "a/b" with optional sign; rejects b = 0.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    Int num = r.get_num(), den = r.get_den();
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    Rat root(sn, sd);
    root.canonicalize();
    return root;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("negative power of zero");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(base.get_den(), base.get_num()) : base;
    b.canonicalize();
    unsigned long k = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace qsl

#endif
