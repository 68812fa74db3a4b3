#include "kval/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kval {

int mono_exponent(const Monomial& m, int index) {
    if (index < 1 || static_cast<std::size_t>(index) > m.size()) return 0;
    return m[static_cast<std::size_t>(index) - 1];
}

void mono_trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    mono_trim(r);
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    mono_trim(r);
    return r;
}

int mono_antilex_cmp(const Monomial& a, const Monomial& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        int ea = i < a.size() ? a[i] : 0;
        int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

Poly Poly::variable(int index, int exp) {
    if (index < 1) throw ParseError("variable index must be >= 1", 1, 1);
    Poly p;
    if (exp == 0) return constant(1);
    if (exp < 0) throw DomainError("polynomial variable exponent must be >= 0");
    Monomial m(static_cast<std::size_t>(index), 0);
    m[static_cast<std::size_t>(index) - 1] = exp;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::term(Monomial m, const Rational& c) {
    Poly p;
    mono_trim(m);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.begin()->second;
}

const std::pair<const Monomial, Rational>& Poly::leading() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.begin();
}

int Poly::leading_max_var_() const {
    std::size_t best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.size());
    return static_cast<int>(best);
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_exponent(m, var));
    return d;
}

int Poly::sign() const {
    if (terms_.empty()) return 0;
    return sign_of(terms_.begin()->second);
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    Monomial key = m;
    mono_trim(key);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

std::vector<Poly> poly_to_univar(const Poly& p, int var) {
    std::vector<Poly> out(static_cast<std::size_t>(p.degree_in(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        int e = mono_exponent(m, var);
        Monomial rest = m;
        if (static_cast<std::size_t>(var) <= rest.size()) {
            rest[static_cast<std::size_t>(var) - 1] = 0;
            mono_trim(rest);
        }
        out[static_cast<std::size_t>(e)].add_term(rest, c);
    }
    return out;
}

Poly poly_from_univar(const std::vector<Poly>& coeffs, int var) {
    Poly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Poly xk = Poly::variable(var, static_cast<int>(k));
        r += coeffs[k] * xk;
    }
    return r;
}

std::pair<Poly, int> leading_data(const Poly& p, int var) {
    if (p.is_zero()) throw DomainError("leading data of the zero polynomial");
    auto coeffs = poly_to_univar(p, var);
    int d = static_cast<int>(coeffs.size()) - 1;
    return {coeffs.back(), d};
}

Rational poly_rational_content(const Poly& p) {
    if (p.is_zero()) return Rational(1);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    return content;  // positive: gcd and lcm of mpz are nonnegative
}

namespace {

void trim_univar(std::vector<Poly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly gcd_list(const std::vector<Poly>& items) {
    Poly g;
    for (const auto& p : items) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : gcd_rec(g, p);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly() : g;
}

// Pseudo-remainder of dense univariate views (coefficients in the lower ring).
std::vector<Poly> prem_univar(std::vector<Poly> r, const std::vector<Poly>& v) {
    const Poly& lcv = v.back();
    std::size_t dv = v.size() - 1;
    while (!r.empty() && r.size() - 1 >= dv) {
        Poly lcr = r.back();
        std::size_t k = r.size() - 1 - dv;
        std::vector<Poly> next(r.size() - 1);
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            next[i] = lcv * r[i];
            if (i >= k) next[i] -= lcr * v[i - k];
        }
        r = std::move(next);
        trim_univar(r);
    }
    return r;
}

// Divide every coefficient by the content over the lower ring.
std::vector<Poly> pp_univar(const std::vector<Poly>& v) {
    Poly cont = gcd_list(v);
    if (cont.is_zero() || cont.is_constant()) {
        std::vector<Poly> out = v;
        if (!cont.is_zero()) {
            Rational c = cont.constant_value();
            for (auto& p : out) p = p.scaled(Rational(1) / c);
        }
        return out;
    }
    std::vector<Poly> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.is_zero() ? Poly() : poly_divexact(p, cont));
    return out;
}

// Normalize to coprime integer coefficients with positive leading coefficient.
Poly normalize_assoc(const Poly& p) {
    if (p.is_zero()) return p;
    Rational c = poly_rational_content(p);
    Poly q = p.scaled(Rational(1) / c);
    if (q.sign() < 0) q = -q;
    return q;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_assoc(b);
    if (b.is_zero()) return normalize_assoc(a);
    int n = std::max(a.max_var(), b.max_var());
    if (n == 0) return Poly::constant(1);

    auto ua = poly_to_univar(a, n);
    auto ub = poly_to_univar(b, n);
    Poly ca = gcd_list(ua);
    Poly cb = gcd_list(ub);
    Poly c = gcd_rec(ca, cb);

    auto div_all = [](const std::vector<Poly>& v, const Poly& d) {
        std::vector<Poly> out;
        out.reserve(v.size());
        for (const auto& p : v) out.push_back(p.is_zero() ? Poly() : poly_divexact(p, d));
        return out;
    };
    auto u = div_all(ua, ca);
    auto v = div_all(ub, cb);
    if (u.size() < v.size()) std::swap(u, v);

    // Primitive PRS in X_n.
    Poly g;
    while (true) {
        if (v.size() == 1) {
            g = Poly::constant(1);  // degree 0: the primitive parts are coprime in X_n
            break;
        }
        auto r = prem_univar(u, v);
        if (r.empty()) {
            g = poly_from_univar(pp_univar(v), n);
            break;
        }
        u = std::move(v);
        v = pp_univar(r);
    }
    return normalize_assoc(c * g);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return normalize_assoc(gcd_rec(a, b)); }

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) return a.scaled(Rational(1) / b.constant_value());
    Poly rem = a;
    Poly quot;
    const auto& lead_b = b.leading();
    while (!rem.is_zero()) {
        const auto& lead_r = rem.leading();
        if (!mono_divides(lead_b.first, lead_r.first))
            throw InternalError("inexact polynomial division");
        Monomial qm = mono_div(lead_r.first, lead_b.first);
        Rational qc = lead_r.second / lead_b.second;
        Poly qterm = Poly::term(qm, qc);
        quot += qterm;
        rem -= qterm * b;
    }
    return quot;
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (sign_of(c) < 0) os << '-';
            first = false;
        } else {
            os << (sign_of(c) < 0 ? " - " : " + ");
        }
        bool has_vars = !m.empty();
        if (!has_vars) {
            os << rational_to_string(mag);
        } else {
            bool printed = false;
            if (mag != 1) {
                os << rational_to_string(mag);
                printed = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (printed) os << '*';
                os << 'X' << (i + 1);
                if (m[i] != 1) os << '^' << m[i];
                printed = true;
            }
        }
    }
    return os.str();
}

}  // namespace kval
