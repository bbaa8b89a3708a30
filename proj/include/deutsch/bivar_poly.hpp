#ifndef DEUTSCH_BIVAR_POLY_HPP
#define DEUTSCH_BIVAR_POLY_HPP

#include "deutsch/series.hpp"

#include <map>
#include <utility>

namespace deutsch {

// Exact bivariate polynomial in (u, v) over arbitrary-precision integers.
// No truncation anywhere; zero coefficients are never stored.
class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly monomial(const Int& c, long deg_u, long deg_v);
    static BivarPoly constant(const Int& c) { return monomial(c, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    Int coeff(long deg_u, long deg_v) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b);

    BivarPoly pow(unsigned long e) const;

    const std::map<std::pair<long, long>, Int>& terms() const { return terms_; }

private:
    void add_term(long deg_u, long deg_v, const Int& c);

    std::map<std::pair<long, long>, Int> terms_;
};

}  // namespace deutsch

#endif
