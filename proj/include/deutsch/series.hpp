#ifndef DEUTSCH_SERIES_HPP
#define DEUTSCH_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace deutsch {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Variable tag of a truncated series. Series in z count steps; series in v
// live on the other side of the substitution z = v/(1+v+v^2).
enum class Var { Z, V };

std::string to_string(Var v);

// Truncated formal power series over exact rationals. The order is the
// number of retained coefficients; arithmetic truncates to the minimum
// order of the operands. Mixing variable tags is an error.
class Series {
public:
    Series(Var var, std::vector<Rat> coeffs);

    static Series zero(Var var, std::size_t order);
    static Series constant(Var var, const Rat& c, std::size_t order);
    // The series "x" itself (0 + 1*x).
    static Series variable(Var var, std::size_t order);

    Var var() const { return var_; }
    std::size_t order() const { return coeffs_.size(); }

    // Hard error past the truncation order; never zero-fills.
    const Rat& coeff(std::size_t n) const;

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Series truncate(std::size_t order) const;
    Series retag(Var var) const;

    // Divides by var^k; the k lowest coefficients must be exactly zero.
    // Order shrinks by k.
    Series shift_down(std::size_t k) const;

    bool is_zero() const;
    bool same_series(const Series& other) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    // Requires b to be a unit (nonzero constant term).
    friend Series operator/(const Series& a, const Series& b);

    Series inverse() const;
    // Negative exponents require a unit base.
    Series pow(long e) const;
    // Requires constant term exactly 1; returns the branch with constant 1.
    Series sqrt() const;
    // Substitutes inner into this; inner must have zero constant term.
    // The result carries inner's variable tag.
    Series compose(const Series& inner) const;

    std::string str() const;

private:
    Var var_;
    std::vector<Rat> coeffs_;
};

// The unique series v(z) with v(0)=0 solving v = z(1+v+v^2). Its
// coefficients are the Motzkin numbers shifted by one.
Series motzkin_v(std::size_t order);

// Substitutes v -> v(z): maps a series in v to a series in z.
Series v_to_z(const Series& g, std::size_t order);

}  // namespace deutsch

#endif
