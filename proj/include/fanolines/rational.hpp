#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanolines {

// Exact rational arithmetic. mpq_class keeps values canonical: gcd-reduced,
// denominator > 0, zero stored as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(std::string_view s) {
    Rat r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    if (r.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat acc(1), b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// gcd on rationals: gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); gcd(x,0)=|x|.
// This is the content notion used for integer-normalizing polynomials.
inline Rat rat_gcd(const Rat& x, const Rat& y) {
    if (x == 0) return abs(y);
    if (y == 0) return abs(x);
    Int num, den;
    mpz_gcd(num.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace fanolines
