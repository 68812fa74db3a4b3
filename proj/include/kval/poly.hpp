#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kval/errors.hpp"
#include "kval/rational.hpp"

namespace kval {

// Exponent vector over X_1, X_2, ...: slot i holds the exponent of X_{i+1}.
// Canonical form has no trailing zeros, so the vector size is the largest
// variable index present.
using Monomial = std::vector<int>;

int mono_exponent(const Monomial& m, int index);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b componentwise
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires divisibility
void mono_trim(Monomial& m);

// Antilexicographic comparison: decided at the largest index where the
// exponents differ. Returns -1, 0, +1.
int mono_antilex_cmp(const Monomial& a, const Monomial& b);

struct MonoAntilexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_antilex_cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial over the rationals. Terms are stored in
// descending antilex order, so begin() is the term that decides both the
// paper's sign rule and the valuation.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonoAntilexGreater>;

    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly variable(int index, int exp = 1);
    static Poly term(Monomial m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    // The constant value; requires is_constant().
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Antilex-greatest term. Decides sign and valuation. Requires != 0.
    const std::pair<const Monomial, Rational>& leading() const;

    int max_var() const { return terms_.empty() ? 0 : leading_max_var_(); }
    int degree_in(int var) const;

    // Sign under the recursive leading-coefficient rule of the ordered tower;
    // equals the sign of the antilex-leading rational coefficient.
    int sign() const;

    void add_term(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned long e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    int leading_max_var_() const;
    TermMap terms_;
};

// Dense view in one variable: slot k carries the coefficient of X_var^k, a
// polynomial in the remaining variables.
std::vector<Poly> poly_to_univar(const Poly& p, int var);
Poly poly_from_univar(const std::vector<Poly>& coeffs, int var);

// Leading data of p viewed in F_{n-1}[X_n]: (coefficient of the highest
// power of X_n, that degree). Requires p != 0.
std::pair<Poly, int> leading_data(const Poly& p, int var);

// Positive rational c such that p/c has coprime integer coefficients; 1 for p = 0.
Rational poly_rational_content(const Poly& p);

// gcd in Q[X...], normalized to coprime integer coefficients with positive
// antilex-leading coefficient. gcd(0, b) is the normalization of b.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact division; throws InternalError if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// Canonical text form; terms in descending antilex order.
std::string poly_to_string(const Poly& p);

}  // namespace kval
