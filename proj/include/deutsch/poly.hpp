#ifndef DEUTSCH_POLY_HPP
#define DEUTSCH_POLY_HPP

#include "deutsch/series.hpp"

#include <vector>

namespace deutsch {

// Exact univariate polynomial in z over arbitrary-precision integers,
// stored densely with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(const Int& c);
    static IntPoly monomial(const Int& c, std::size_t deg);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Int coeff(std::size_t n) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b);

    // Exact division; throws std::domain_error if the remainder is nonzero.
    IntPoly exact_div(const IntPoly& d) const;

    // Substitutes a series for z.
    Series eval(const Series& x) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }
    std::string str() const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

}  // namespace deutsch

#endif
