#include "deutsch/kernel.hpp"

#include "deutsch/bivar_poly.hpp"

#include <stdexcept>

namespace deutsch {

KernelRoots roots_r2(std::size_t order) {
    if (order < 2) throw std::invalid_argument("order must be at least 2");
    // (1 - z - sqrt(1-2z-3z^2)) / (2z): compute one order higher so the
    // division by z lands back on the requested order.
    std::size_t n = order + 1;
    std::vector<Rat> disc(n, Rat(0));
    disc[0] = 1;
    disc[1] = -2;
    if (n > 2) disc[2] = -3;
    Series root = Series(Var::Z, std::move(disc)).sqrt();
    Series numer = Series::constant(Var::Z, 1, n) - Series::variable(Var::Z, n) - root;
    if (numer.coeff(0) != 0) {
        throw std::logic_error("kernel root: 1/z pole failed to cancel");
    }
    Series r2 = numer.shift_down(1) * Series::constant(Var::Z, Rat(1, 2), order);

    if (!r2.same_series(motzkin_v(order))) {
        throw std::logic_error("kernel root disagrees with the fixed-point series v(z)");
    }
    return KernelRoots{r2};
}

bool kernel_identity(long t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    BivarPoly u = BivarPoly::monomial(1, 1, 0);
    BivarPoly v = BivarPoly::monomial(1, 0, 1);
    BivarPoly one = BivarPoly::constant(1);
    BivarPoly one_plus_v = one + v;

    BivarPoly lhs = u.pow(t) * (one - u) + v * one_plus_v.pow(t);

    BivarPoly sum;
    for (long k = 0; k < t; ++k) {
        sum = sum + one_plus_v.pow(t - 1 - k) * u.pow(k);
    }
    BivarPoly rhs = (u - one - v) * (-(v * sum) - u.pow(t));

    return lhs == rhs;
}

Series F_total(long t, std::size_t order) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    Series r2 = roots_r2(order + 1).r2;
    Series one = Series::constant(Var::Z, 1, order + 1);
    Series zF = (one + r2).pow(t) * r2;
    return zF.shift_down(1);
}

namespace {

// 1/(z(1+r1)^{l+1}) rewritten in v: (1+v+v^2) * v^l / (1+v)^{l+1}.
// r1 = 1/v is never materialized.
Series inv_z_shift(long l, std::size_t nv) {
    Series v = Series::variable(Var::V, nv);
    Series one = Series::constant(Var::V, 1, nv);
    Series quad = one + v + v * v;
    return quad * v.pow(l) * (one + v).pow(-(l + 1));
}

}  // namespace

Series f_unbounded_sum(long t, long j, std::size_t order) {
    if (t < 0 || j < 0) throw std::invalid_argument("levels must be nonnegative");
    std::size_t nv = v_order_for(order);
    Series v = Series::variable(Var::V, nv);
    Series one = Series::constant(Var::V, 1, nv);

    // [u^j] of (v * sum_{k<t} (1+v)^{t-1-k} u^k + u^t) * sum_l u^l / (z(1+r1)^{l+1}):
    // pairs k + l = j from the sum, plus l = j - t from the lone u^t term.
    Series acc = Series::zero(Var::V, nv);
    for (long k = 0; k <= std::min(j, t - 1); ++k) {
        acc = acc + v * (one + v).pow(t - 1 - k) * inv_z_shift(j - k, nv);
    }
    if (t <= j) {
        acc = acc + inv_z_shift(j - t, nv);
    }
    return v_to_z(acc, nv).truncate(order);
}

Series f_unbounded_closed(long t, long j, std::size_t order) {
    if (t < 0 || j < 0) throw std::invalid_argument("levels must be nonnegative");
    std::size_t nv = v_order_for(order);
    Series v = Series::variable(Var::V, nv);
    Series one = Series::constant(Var::V, 1, nv);
    Series quad = one + v + v * v;
    Series result = Series::zero(Var::V, nv);
    if (j < t) {
        result = (one + v).pow(t - j - 2) * (one - v.pow(j + 1)) * v * quad / (one - v);
    } else {
        result = v.pow(j - t) * (one - v.pow(t + 2)) * quad /
                 ((one - v) * (one + v).pow(j - t + 2));
    }
    return v_to_z(result, nv).truncate(order);
}

}  // namespace deutsch
