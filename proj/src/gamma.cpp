#include "kval/gamma.hpp"

#include <sstream>

namespace kval {

GammaVal GammaVal::generator(int index, long long exp) {
    if (index < 1) throw ParseError("variable index must be >= 1", 1, 1);
    GammaVal g;
    if (exp != 0) g.exps_[index] = exp;
    return g;
}

GammaVal GammaVal::from_exponents(const std::vector<std::pair<int, long long>>& items) {
    GammaVal g;
    for (const auto& [idx, e] : items) {
        if (idx < 1) throw ParseError("variable index must be >= 1", 1, 1);
        g.exps_[idx] += e;
        if (g.exps_[idx] == 0) g.exps_.erase(idx);
    }
    return g;
}

Ordering gamma_compare(const GammaVal& a, const GammaVal& b) {
    if (a.zero_ && b.zero_) return Ordering::Equal;
    if (a.zero_) return Ordering::Less;
    if (b.zero_) return Ordering::Greater;
    // Walk both supports from the largest index down; the first difference
    // decides.
    auto ia = a.exps_.rbegin(), ea = a.exps_.rend();
    auto ib = b.exps_.rbegin(), eb = b.exps_.rend();
    while (ia != ea || ib != eb) {
        int idx_a = ia != ea ? ia->first : 0;
        int idx_b = ib != eb ? ib->first : 0;
        if (idx_a > idx_b) {
            return ia->second > 0 ? Ordering::Greater : Ordering::Less;
        }
        if (idx_b > idx_a) {
            return ib->second > 0 ? Ordering::Less : Ordering::Greater;
        }
        if (ia->second != ib->second) {
            return ia->second > ib->second ? Ordering::Greater : Ordering::Less;
        }
        ++ia;
        ++ib;
    }
    return Ordering::Equal;
}

GammaVal gamma_mul(const GammaVal& a, const GammaVal& b) {
    if (a.zero_ || b.zero_) return GammaVal::zero();
    GammaVal r = a;
    for (const auto& [idx, e] : b.exps_) {
        long long& slot = r.exps_[idx];
        slot += e;
        if (slot == 0) r.exps_.erase(idx);
    }
    return r;
}

GammaVal gamma_inv(const GammaVal& a) {
    if (a.zero_) throw DomainError("cannot invert the adjoined zero");
    GammaVal r = a;
    for (auto& [idx, e] : r.exps_) e = -e;
    return r;
}

GammaVal gamma_pow(const GammaVal& a, long long k) {
    if (a.is_zero()) {
        if (k > 0) return GammaVal::zero();
        if (k == 0) return GammaVal::one();  // empty-product convention, matches x^0 = 1
        throw DomainError("cannot raise the adjoined zero to a negative power");
    }
    std::vector<std::pair<int, long long>> items;
    for (const auto& [idx, e] : a.exponents()) items.emplace_back(idx, e * k);
    return GammaVal::from_exponents(items);
}

GammaVal gamma_from_exponents(const std::vector<std::pair<int, long long>>& items) {
    return GammaVal::from_exponents(items);
}

int gamma_max_support(const GammaVal& a) { return a.max_support(); }

std::string gamma_to_string(const GammaVal& g) {
    if (g.is_zero()) return "0v";
    if (g.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, e] : g.exponents()) {
        if (!first) os << '*';
        first = false;
        os << 'g' << idx;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace kval
