#include "deutsch/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace deutsch {

std::string to_string(Var v) {
    return v == Var::Z ? "z" : "v";
}

namespace {

void require_same_var(const Series& a, const Series& b) {
    if (a.var() != b.var()) {
        throw std::invalid_argument("series variable mismatch: " + to_string(a.var()) +
                                    " vs " + to_string(b.var()));
    }
}

}  // namespace

Series::Series(Var var, std::vector<Rat> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("series must retain at least one coefficient");
    }
}

Series Series::zero(Var var, std::size_t order) {
    return Series(var, std::vector<Rat>(order, Rat(0)));
}

Series Series::constant(Var var, const Rat& c, std::size_t order) {
    std::vector<Rat> v(order, Rat(0));
    v[0] = c;
    return Series(var, std::move(v));
}

Series Series::variable(Var var, std::size_t order) {
    if (order < 2) {
        throw std::invalid_argument("order too small to hold the variable");
    }
    std::vector<Rat> v(order, Rat(0));
    v[1] = 1;
    return Series(var, std::move(v));
}

const Rat& Series::coeff(std::size_t n) const {
    if (n >= coeffs_.size()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(coeffs_.size()));
    }
    return coeffs_[n];
}

Series Series::truncate(std::size_t order) const {
    if (order > coeffs_.size()) {
        throw std::out_of_range("cannot extend truncation order");
    }
    return Series(var_, std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + order));
}

Series Series::retag(Var var) const {
    return Series(var, coeffs_);
}

Series Series::shift_down(std::size_t k) const {
    if (k >= coeffs_.size()) {
        throw std::out_of_range("shift exceeds truncation order");
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (coeffs_[i] != 0) {
            throw std::domain_error("shift_down: low-order coefficient is not zero");
        }
    }
    return Series(var_, std::vector<Rat>(coeffs_.begin() + k, coeffs_.end()));
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Series::same_series(const Series& other) const {
    if (var_ != other.var_) return false;
    std::size_t n = std::min(coeffs_.size(), other.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] != other.coeffs_[i]) return false;
    }
    return true;
}

Series Series::operator-() const {
    std::vector<Rat> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return Series(var_, std::move(v));
}

Series operator+(const Series& a, const Series& b) {
    require_same_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
    return Series(a.var(), std::move(v));
}

Series operator-(const Series& a, const Series& b) {
    require_same_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.coeffs_[i] - b.coeffs_[i];
    return Series(a.var(), std::move(v));
}

Series operator*(const Series& a, const Series& b) {
    require_same_var(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> v(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t k = 0; i + k < n; ++k) {
            if (b.coeffs_[k] == 0) continue;
            v[i + k] += a.coeffs_[i] * b.coeffs_[k];
        }
    }
    return Series(a.var(), std::move(v));
}

Series operator/(const Series& a, const Series& b) {
    require_same_var(a, b);
    if (b.coeffs_[0] == 0) {
        throw std::domain_error("division by non-unit series (zero constant term)");
    }
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rat> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat acc = a.coeffs_[i];
        for (std::size_t k = 1; k <= i; ++k) {
            acc -= b.coeffs_[k] * q[i - k];
        }
        q[i] = acc / b.coeffs_[0];
    }
    return Series(a.var(), std::move(q));
}

Series Series::inverse() const {
    return Series::constant(var_, 1, coeffs_.size()) / *this;
}

Series Series::pow(long e) const {
    if (e < 0) {
        if (coeffs_[0] == 0) {
            throw std::domain_error("negative power of a non-unit series");
        }
        return inverse().pow(-e);
    }
    Series result = Series::constant(var_, 1, coeffs_.size());
    Series base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

Series Series::sqrt() const {
    if (coeffs_[0] != 1) {
        throw std::domain_error("sqrt requires constant term 1");
    }
    std::size_t n = coeffs_.size();
    std::vector<Rat> s(n, Rat(0));
    s[0] = 1;
    for (std::size_t i = 1; i < n; ++i) {
        // a_i = 2 s_i + sum_{k=1}^{i-1} s_k s_{i-k}
        Rat acc = coeffs_[i];
        for (std::size_t k = 1; k < i; ++k) {
            acc -= s[k] * s[i - k];
        }
        s[i] = acc / 2;
    }
    return Series(var_, std::move(s));
}

Series Series::compose(const Series& inner) const {
    if (inner.coeffs_[0] != 0) {
        throw std::domain_error("composition requires zero constant term in the inner series");
    }
    std::size_t n = std::min(order(), inner.order());
    Series g = inner.truncate(n);
    // Horner in the inner series.
    Series result = Series::constant(g.var(), coeffs_[n - 1], n);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * g + Series::constant(g.var(), coeffs_[i], n);
    }
    return result;
}

std::string Series::str() const {
    std::ostringstream os;
    std::string x = to_string(var_);
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i];
        if (i >= 1) os << "*" << x;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << x << "^" << coeffs_.size() << ")";
    return os.str();
}

Series motzkin_v(std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("order must be at least 1");
    }
    // v = z(1 + v + v^2), v(0) = 0. Coefficient a_n is read off from
    // a_n = [z^{n-1}](1 + v + v^2).
    std::vector<Rat> a(order, Rat(0));
    for (std::size_t n = 1; n < order; ++n) {
        Rat acc = (n == 1) ? Rat(1) : Rat(0);
        acc += a[n - 1];
        for (std::size_t k = 1; k + 1 <= n - 1; ++k) {
            acc += a[k] * a[n - 1 - k];
        }
        a[n] = acc;
    }
    return Series(Var::Z, std::move(a));
}

Series v_to_z(const Series& g, std::size_t order) {
    Series v = motzkin_v(order);
    return g.compose(v).retag(Var::Z);
}

}  // namespace deutsch
