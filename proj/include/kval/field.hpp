#pragma once

#include <string>

#include "kval/gamma.hpp"
#include "kval/poly.hpp"

namespace kval {

// Element of the rational-function tower, kept as a canonical quotient:
// gcd(num, den) = 1 in Z[X...] (integer coefficients, coprime contents) and
// the denominator positive under the tower's sign rule. Zero is 0/1.
class FieldElem {
public:
    FieldElem() : num_(), den_(Poly::constant(1)) {}
    FieldElem(long v) : FieldElem(Rational(v)) {}           // NOLINT(google-explicit-constructor)
    FieldElem(const Rational& v);                           // NOLINT(google-explicit-constructor)
    FieldElem(const Poly& num, const Poly& den);

    static FieldElem variable(int index, long long exp = 1);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;
    int max_var() const { return std::max(num_.max_var(), den_.max_var()); }

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem inv() const;
    FieldElem pow(long long e) const;

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
    void normalize_();
    Poly num_, den_;
};

// Sign under the paper's rule: sign(num) * sign(den), where a polynomial's
// sign is decided by recursive descent on leading coefficients. -1, 0, +1.
int elem_sign(const FieldElem& a);
Ordering elem_compare(const FieldElem& a, const FieldElem& b);
FieldElem elem_abs(const FieldElem& a);

inline bool elem_less(const FieldElem& a, const FieldElem& b) {
    return elem_compare(a, b) == Ordering::Less;
}
inline bool elem_leq(const FieldElem& a, const FieldElem& b) {
    return elem_compare(a, b) != Ordering::Greater;
}

// Canonical grammar text; bit-exact round trip with the parser.
std::string elem_to_string(const FieldElem& a);

}  // namespace kval
