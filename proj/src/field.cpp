#include "kval/field.hpp"

#include <sstream>

namespace kval {

FieldElem::FieldElem(const Rational& v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {
    normalize_();
}

FieldElem::FieldElem(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize_(); }

FieldElem FieldElem::variable(int index, long long exp) {
    if (exp >= 0) return FieldElem(Poly::variable(index, static_cast<int>(exp)), Poly::constant(1));
    return FieldElem(Poly::constant(1), Poly::variable(index, static_cast<int>(-exp)));
}

Rational FieldElem::rational_value() const {
    if (!is_rational()) throw DomainError("element is not rational");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

void FieldElem::normalize_() {
    if (den_.is_zero()) throw DomainError("division by zero");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    // Scale to coprime integer coefficients across the pair.
    Rational cn = poly_rational_content(num_);
    Rational cd = poly_rational_content(den_);
    Rational scale = cn / cd;  // canonical: positive denominator
    num_ = num_.scaled(Rational(1) / cn * scale.get_num());
    den_ = den_.scaled(Rational(1) / cd * scale.get_den());
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DomainError("division by zero");
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(long long e) const {
    if (e == 0) return FieldElem(Rational(1));
    if (is_zero()) {
        if (e < 0) throw DomainError("division by zero");
        return FieldElem();
    }
    FieldElem base = e < 0 ? inv() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    FieldElem acc{Rational(1)};
    while (n > 0) {
        if (n & 1ULL) acc *= base;
        base *= base;
        n >>= 1ULL;
    }
    return acc;
}

int elem_sign(const FieldElem& a) { return a.num().sign() * a.den().sign(); }

Ordering elem_compare(const FieldElem& a, const FieldElem& b) {
    int s = elem_sign(a - b);
    return s < 0 ? Ordering::Less : s > 0 ? Ordering::Greater : Ordering::Equal;
}

FieldElem elem_abs(const FieldElem& a) { return elem_sign(a) < 0 ? -a : a; }

std::string elem_to_string(const FieldElem& a) {
    if (a.den().is_constant() && a.den().constant_value() == 1) return poly_to_string(a.num());
    std::ostringstream os;
    os << '(' << poly_to_string(a.num()) << ")/(" << poly_to_string(a.den()) << ')';
    return os.str();
}

}  // namespace kval
