#include "deutsch/bivar_poly.hpp"

namespace deutsch {

BivarPoly BivarPoly::monomial(const Int& c, long deg_u, long deg_v) {
    BivarPoly p;
    p.add_term(deg_u, deg_v, c);
    return p;
}

Int BivarPoly::coeff(long deg_u, long deg_v) const {
    auto it = terms_.find({deg_u, deg_v});
    return it == terms_.end() ? Int(0) : it->second;
}

void BivarPoly::add_term(long deg_u, long deg_v, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(deg_u, deg_v);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
}

BivarPoly BivarPoly::pow(unsigned long e) const {
    BivarPoly result = BivarPoly::constant(1);
    BivarPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

}  // namespace deutsch
