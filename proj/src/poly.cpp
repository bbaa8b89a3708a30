#include "deutsch/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace deutsch {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) {
    return IntPoly(std::vector<Int>{c});
}

IntPoly IntPoly::monomial(const Int& c, std::size_t deg) {
    std::vector<Int> v(deg + 1, Int(0));
    v[deg] = c;
    return IntPoly(std::move(v));
}

Int IntPoly::coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Int(0);
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    return a + (-b);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
            v[i + k] += a.coeffs_[i] * b.coeffs_[k];
        }
    }
    return IntPoly(std::move(v));
}

bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> q(coeffs_.size() - d.coeffs_.size() + 1, Int(0));
    const Int& lead = d.coeffs_.back();
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int top = rem[i + d.degree()];
        if (top % lead != 0) throw std::domain_error("inexact polynomial division");
        q[i] = top / lead;
        if (q[i] == 0) continue;
        for (std::size_t k = 0; k < d.coeffs_.size(); ++k) {
            rem[i + k] -= q[i] * d.coeffs_[k];
        }
    }
    for (const Int& r : rem) {
        if (r != 0) throw std::domain_error("inexact polynomial division");
    }
    return IntPoly(std::move(q));
}

Series IntPoly::eval(const Series& x) const {
    if (is_zero()) return Series::zero(x.var(), x.order());
    Series acc = Series::constant(x.var(), Rat(coeffs_.back()), x.order());
    for (long i = static_cast<long>(coeffs_.size()) - 2; i >= 0; --i) {
        acc = acc * x + Series::constant(x.var(), Rat(coeffs_[i]), x.order());
    }
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i >= 1) os << "*z";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace deutsch
