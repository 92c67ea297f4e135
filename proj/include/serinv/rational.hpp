#pragma once

#include <gmpxx.h>

#include <string>

#include "serinv/errors.hpp"

namespace serinv {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are constructed canonically, which the
// helpers below guarantee.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw Error("invalid rational literal '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw DomainError("rational with zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

// Exact value of a decimal string such as "12.25" -> 49/4.
inline Rational rational_from_decimal(const std::string& digits, const std::string& fraction) {
    mpz_class num(digits.empty() ? "0" : digits);
    mpz_class den(1);
    for (char c : fraction) {
        num *= 10;
        num += c - '0';
        den *= 10;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

inline int sign(const Rational& r) {
    return sgn(r);
}

inline Rational rational_pow(Rational base, unsigned long e) {
    Rational out(1);
    while (e > 0) {
        if (e & 1)
            out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace serinv
