#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "kval/errors.hpp"

namespace kval {

// Arbitrary-precision rational. mpq_class is kept canonical (reduced,
// positive denominator) by construction and by canonicalize() after
// raw-string initialization.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal '" + s + "'", 1, 1, "integer or p/q");
    }
}

// Canonical text: "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1ULL;
    }
    return acc;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace kval
