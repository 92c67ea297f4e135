#pragma once
// Thin wrapper over __float128 plus an overload set shared with double, so
// numeric code can be written once against a Real template parameter.
//
// quadmath.h's convenience macros (FLT128_EPSILON etc.) expand to Q-suffixed
// literals that need -fext-numeric-literals; we avoid them and build the few
// constants we need from ldexpq/strtoflt128 instead.

#include <quadmath.h>

#include <cmath>
#include <cstdio>
#include <string>

#include <serinv/rational.hpp>

namespace serinv {

using QReal = __float128;

// --- overloads shared by double and QReal ---------------------------------

inline double real_abs(double x) { return std::fabs(x); }
inline QReal real_abs(QReal x) { return fabsq(x); }

inline double real_sqrt(double x) { return std::sqrt(x); }
inline QReal real_sqrt(QReal x) { return sqrtq(x); }

inline double real_exp(double x) { return std::exp(x); }
inline QReal real_exp(QReal x) { return expq(x); }

inline double real_expm1(double x) { return std::expm1(x); }
inline QReal real_expm1(QReal x) { return expm1q(x); }

inline double real_log1p(double x) { return std::log1p(x); }
inline QReal real_log1p(QReal x) { return log1pq(x); }

inline double real_log(double x) { return std::log(x); }
inline QReal real_log(QReal x) { return logq(x); }

inline double real_sin(double x) { return std::sin(x); }
inline QReal real_sin(QReal x) { return sinq(x); }

inline double real_cos(double x) { return std::cos(x); }
inline QReal real_cos(QReal x) { return cosq(x); }

inline double real_tan(double x) { return std::tan(x); }
inline QReal real_tan(QReal x) { return tanq(x); }

inline double real_atan(double x) { return std::atan(x); }
inline QReal real_atan(QReal x) { return atanq(x); }

inline bool real_finite(double x) { return std::isfinite(x); }
inline bool real_finite(QReal x) { return !isnanq(x) && !isinfq(x); }

inline double to_double(QReal x) { return static_cast<double>(x); }

// Machine epsilon of the 113-bit significand.
inline QReal q_epsilon() { return ldexpq(1, -112); }

// Exact conversion for machine-word rationals, decimal-string round trip
// (40 significant digits, beyond the 34 the type can hold) otherwise.
inline QReal q_from_rational(const Rational& r) {
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (num.fits_slong_p() && den.fits_slong_p())
        return QReal(num.get_si()) / QReal(den.get_si());
    QReal n = strtoflt128(num.get_str().c_str(), nullptr);
    QReal d = strtoflt128(den.get_str().c_str(), nullptr);
    return n / d;
}

inline std::string q_to_string(QReal x, int digits = 36) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, x);
    return std::string(buf);
}

} // namespace serinv
