#pragma once

#include <string>
#include <utility>

#include "kval/field.hpp"
#include "kval/gamma.hpp"

namespace kval {

// Krull valuation: trivial on rationals, v(X_n) = g_n, multiplicative, and
// on a polynomial the (uniquely attained) maximum over its monomials.
GammaVal val(const Poly& p);
GammaVal val(const FieldElem& a);

// Distance value: 0 or 2^-m. phi produces m >= 1; bracket caps may use m = 0.
struct DyadicDist {
    bool is_zero = true;
    long long m = 0;

    static DyadicDist zero() { return {}; }
    static DyadicDist pow2(long long m) { return {false, m}; }

    bool operator==(const DyadicDist& o) const {
        return is_zero == o.is_zero && (is_zero || m == o.m);
    }
    bool operator!=(const DyadicDist& o) const { return !(*this == o); }
    // Numeric order: zero < 2^-m, and 2^-m grows as m shrinks.
    bool operator<(const DyadicDist& o) const {
        if (is_zero) return !o.is_zero;
        if (o.is_zero) return false;
        return m > o.m;
    }
    bool operator<=(const DyadicDist& o) const { return *this == o || *this < o; }
};

std::string dyadic_to_string(const DyadicDist& d);

// Least m >= 1 with X_m^{-1} <= x, together with 2^-m. Requires x > 0.
// The scan provably halts at (max variable index of x) + 1.
std::pair<long long, DyadicDist> phi_index(const FieldElem& x);

DyadicDist dist(const FieldElem& x, const FieldElem& y);

// Image in the residue field of the valuation ring {v <= 1}. Requires
// val(a) <= 1; returns the unique rational c with val(a - c) < 1.
Rational residue(const FieldElem& a);

// One of the two neighborhood families: order-open balls with a positive
// radius from the field, and valuation balls with a group radius.
struct Ball {
    enum class Kind { OrderOpen, ValClosed, ValOpen };

    Kind kind;
    FieldElem center;
    FieldElem t;  // OrderOpen radius, > 0
    GammaVal r;   // valuation radius, != Zero

    static Ball order_open(FieldElem center, FieldElem t);
    static Ball val_closed(FieldElem center, GammaVal r);
    static Ball val_open(FieldElem center, GammaVal r);
};

bool ball_contains(const Ball& b, const FieldElem& x);

std::string ball_to_string(const Ball& b);

}  // namespace kval
