#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kval/errors.hpp"

namespace kval {

enum class Ordering { Less, Equal, Greater };

inline const char* ordering_name(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

// Element of the value group adjoined with an absorbing minimal zero.
//
// A group element is a finitely supported integer exponent vector over
// variable indices >= 1, multiplied componentwise and compared
// antilexicographically: the largest index where two vectors differ decides.
// The identity is the empty vector. Zero is a separate kind, absorbing under
// multiplication and strictly below every group element.
class GammaVal {
public:
    using ExpMap = std::map<int, long long>;  // index -> nonzero exponent

    GammaVal() : zero_(false) {}  // identity

    static GammaVal zero() {
        GammaVal g;
        g.zero_ = true;
        return g;
    }
    static GammaVal one() { return GammaVal(); }
    static GammaVal generator(int index, long long exp = 1);

    // Canonicalizing constructor; drops zero exponents. Indices must be >= 1.
    static GammaVal from_exponents(const std::vector<std::pair<int, long long>>& items);

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && exps_.empty(); }

    // Exponent map of a group value. Empty for the identity.
    const ExpMap& exponents() const {
        if (zero_) throw DomainError("zero has no exponents");
        return exps_;
    }

    // Largest index in the support; 0 for the identity.
    int max_support() const {
        if (zero_) throw DomainError("zero has no support");
        return exps_.empty() ? 0 : exps_.rbegin()->first;
    }

    long long exponent(int index) const {
        if (zero_) throw DomainError("zero has no exponents");
        auto it = exps_.find(index);
        return it == exps_.end() ? 0 : it->second;
    }

    friend Ordering gamma_compare(const GammaVal& a, const GammaVal& b);
    friend GammaVal gamma_mul(const GammaVal& a, const GammaVal& b);
    friend GammaVal gamma_inv(const GammaVal& a);

    bool operator==(const GammaVal& o) const { return zero_ == o.zero_ && exps_ == o.exps_; }
    bool operator!=(const GammaVal& o) const { return !(*this == o); }

private:
    bool zero_;
    ExpMap exps_;
};

Ordering gamma_compare(const GammaVal& a, const GammaVal& b);
GammaVal gamma_mul(const GammaVal& a, const GammaVal& b);
GammaVal gamma_inv(const GammaVal& a);
GammaVal gamma_pow(const GammaVal& a, long long k);

GammaVal gamma_from_exponents(const std::vector<std::pair<int, long long>>& items);
int gamma_max_support(const GammaVal& a);

inline bool gamma_less(const GammaVal& a, const GammaVal& b) {
    return gamma_compare(a, b) == Ordering::Less;
}
inline bool gamma_leq(const GammaVal& a, const GammaVal& b) {
    return gamma_compare(a, b) != Ordering::Greater;
}
inline GammaVal gamma_max(const GammaVal& a, const GammaVal& b) {
    return gamma_less(a, b) ? b : a;
}
inline GammaVal gamma_min(const GammaVal& a, const GammaVal& b) {
    return gamma_less(a, b) ? a : b;
}

inline GammaVal operator*(const GammaVal& a, const GammaVal& b) { return gamma_mul(a, b); }

// Text form: products of g<i>^<e> factors in ascending index order,
// identity "1", zero "0v"; exponent 1 is omitted.
std::string gamma_to_string(const GammaVal& g);

}  // namespace kval
