#include "deutsch/strip_solver.hpp"

#include "deutsch/kernel.hpp"

#include <stdexcept>

namespace deutsch {

namespace {

void check_strip_params(std::size_t m, long t, long j) {
    if (m < 1) throw std::invalid_argument("strip size must be at least 1");
    if (t < 0 || j < 0 || t > static_cast<long>(m) - 1 || j > static_cast<long>(m) - 1) {
        throw std::invalid_argument("start/end level outside the strip");
    }
}

void assert_count_series(const Series& s, const char* what) {
    for (std::size_t n = 0; n < s.order(); ++n) {
        const Rat& c = s.coeff(n);
        if (boost::multiprecision::denominator(c) != 1 || c < 0) {
            throw std::logic_error(std::string(what) +
                                   ": coefficient is not a nonnegative integer");
        }
    }
}

}  // namespace

Series z_of_v(std::size_t order) {
    Series v = Series::variable(Var::V, order);
    Series one = Series::constant(Var::V, 1, order);
    return v / (one + v + v * v);
}

LinearSystem build_system(std::size_t m, long t) {
    check_strip_params(m, t, t);
    PolyMatrix mat;
    mat.m = m;
    IntPoly one = IntPoly::constant(1);
    IntPoly minus_z = IntPoly::monomial(-1, 1);
    mat.entry.assign(m, std::vector<IntPoly>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            if (k == i) {
                mat.entry[i][k] = one;
            } else if (k + 1 == i || k > i) {
                mat.entry[i][k] = minus_z;
            }
        }
    }
    return LinearSystem{std::move(mat), static_cast<std::size_t>(t)};
}

StripSolution solve_series(std::size_t m, long t, std::size_t order) {
    check_strip_params(m, t, t);
    LinearSystem sys = build_system(m, t);
    Series z = Series::variable(Var::Z, order);

    std::vector<std::vector<Series>> a(m, std::vector<Series>(m, Series::zero(Var::Z, order)));
    std::vector<Series> rhs(m, Series::zero(Var::Z, order));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            a[i][k] = sys.matrix.entry[i][k].eval(z);
        }
    }
    rhs[sys.rhs_row] = Series::constant(Var::Z, 1, order);

    // Forward elimination; pivots are 1 + O(z) throughout, so no pivoting.
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k].coeff(0) == 0) {
            throw std::logic_error("solve_series: pivot with zero constant term");
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i][k].is_zero()) continue;
            Series factor = a[i][k] / a[k][k];
            for (std::size_t c = k; c < m; ++c) {
                a[i][c] = a[i][c] - factor * a[k][c];
            }
            rhs[i] = rhs[i] - factor * rhs[k];
        }
    }
    // Back substitution.
    std::vector<Series> phi(m, Series::zero(Var::Z, order));
    for (std::size_t k = m; k-- > 0;) {
        Series acc = rhs[k];
        for (std::size_t c = k + 1; c < m; ++c) {
            acc = acc - a[k][c] * phi[c];
        }
        phi[k] = acc / a[k][k];
    }
    for (std::size_t j = 0; j < m; ++j) {
        assert_count_series(phi[j], "solve_series");
        Rat expected = (static_cast<long>(j) == t) ? 1 : 0;
        if (phi[j].coeff(0) != expected) {
            throw std::logic_error("solve_series: constant term is not [t = j]");
        }
    }
    return StripSolution{std::move(phi), t, m};
}

IntPoly det_poly(const PolyMatrix& mat) {
    std::size_t n = mat.m;
    if (n == 0) return IntPoly::constant(1);
    std::vector<std::vector<IntPoly>> a = mat.entry;
    IntPoly prev = IntPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return IntPoly();
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
            }
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

PolyMatrix replace_column(const LinearSystem& sys, std::size_t j) {
    if (j >= sys.matrix.m) throw std::invalid_argument("column index outside the matrix");
    PolyMatrix mat = sys.matrix;
    for (std::size_t i = 0; i < mat.m; ++i) {
        mat.entry[i][j] = (i == sys.rhs_row) ? IntPoly::constant(1) : IntPoly();
    }
    return mat;
}

Series det_Dm_closed(std::size_t m, std::size_t order) {
    if (m < 1) throw std::invalid_argument("strip size must be at least 1");
    Series v = Series::variable(Var::V, order);
    Series one = Series::constant(Var::V, 1, order);
    Series quad = one + v + v * v;
    return (one + v).pow(static_cast<long>(m) - 1) * (one - v.pow(static_cast<long>(m) + 2)) /
           (quad.pow(static_cast<long>(m)) * (one - v));
}

Series det_D_replaced(std::size_t m, long t, long j, std::size_t order) {
    check_strip_params(m, t, j);
    long mm = static_cast<long>(m);
    Series v = Series::variable(Var::V, order);
    Series one = Series::constant(Var::V, 1, order);
    Series quad = one + v + v * v;
    Series one_minus_v_sq = (one - v) * (one - v);
    if (j < t) {
        return (one + v).pow(t - j - 3 + mm) * (one - v.pow(j + 1)) * v *
               (one - v.pow(mm - t)) / (one_minus_v_sq * quad.pow(mm - 1));
    }
    // j = t uses this branch, matching the phi branch labels.
    return v.pow(j - t) * (one - v.pow(t + 2)) * (one - v.pow(1 - j + mm)) /
           (one_minus_v_sq * quad.pow(mm - 1) * (one + v).pow(j - t + 3 - mm));
}

bool det_recursion_check(std::size_t m_max, std::size_t order) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    Series v = Series::variable(Var::V, order);
    Series one = Series::constant(Var::V, 1, order);
    Series quad = one + v + v * v;
    Series one_plus_v_sq = (one + v) * (one + v);
    for (std::size_t m = 1; m + 2 <= m_max; ++m) {
        Series lhs = quad * quad * det_Dm_closed(m + 2, order) -
                     quad * one_plus_v_sq * det_Dm_closed(m + 1, order) +
                     v * one_plus_v_sq * det_Dm_closed(m, order);
        if (!lhs.is_zero()) return false;
    }
    return true;
}

Series phi_closed(std::size_t m, long t, long j, std::size_t order) {
    check_strip_params(m, t, j);
    long mm = static_cast<long>(m);
    std::size_t nv = v_order_for(order);
    Series v = Series::variable(Var::V, nv);
    Series one = Series::constant(Var::V, 1, nv);
    Series quad = one + v + v * v;
    Series denom_strip = (one - v) * (one - v.pow(mm + 2));
    Series result = Series::zero(Var::V, nv);
    if (j < t) {
        result = (one + v).pow(t - j - 2) * (one - v.pow(j + 1)) * v *
                 (one - v.pow(mm - t)) * quad / denom_strip;
    } else {
        result = v.pow(j - t) * (one - v.pow(t + 2)) * (one - v.pow(1 - j + mm)) * quad /
                 (denom_strip * (one + v).pow(j - t + 2));
    }
    Series out = v_to_z(result, nv).truncate(order);
    assert_count_series(out, "phi_closed");
    return out;
}

Series phi_limit(long t, long j, std::size_t order) {
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
    Series out = v_to_z(result, nv).truncate(order);
    assert_count_series(out, "phi_limit");
    return out;
}

Series phi_shifted(long h, long t, long i, std::size_t order) {
    if (h < 0 || t < 0) throw std::invalid_argument("boundaries must be nonnegative");
    if (i < -t || i > h) throw std::invalid_argument("end level outside [-t, h]");
    std::size_t nv = v_order_for(order);
    Series v = Series::variable(Var::V, nv);
    Series one = Series::constant(Var::V, 1, nv);
    Series quad = one + v + v * v;
    Series denom = (one - v) * (one - v.pow(h + t + 3));
    Series result = Series::zero(Var::V, nv);
    if (i < 0) {
        // Exponent -i-2, as forced by substituting (m, j) = (h+t+1, i+t)
        // into the strip form; the i >= 0 branch needs no adjustment.
        result = (one + v).pow(-i - 2) * (one - v.pow(i + t + 1)) * v *
                 (one - v.pow(h + 1)) * quad / denom;
    } else {
        result = v.pow(i) * (one - v.pow(t + 2)) * (one - v.pow(2 - i + h)) * quad /
                 (denom * (one + v).pow(i + 2));
    }
    Series out = v_to_z(result, nv).truncate(order);
    assert_count_series(out, "phi_shifted");
    return out;
}

}  // namespace deutsch
