#ifndef DEUTSCH_STRIP_SOLVER_HPP
#define DEUTSCH_STRIP_SOLVER_HPP

#include "deutsch/poly.hpp"
#include "deutsch/series.hpp"

#include <vector>

namespace deutsch {

// The m x m banded system encoding the strip recursion: 1 on the diagonal,
// -z on the subdiagonal and everywhere above the diagonal, 0 below the band.
struct PolyMatrix {
    std::size_t m = 0;
    std::vector<std::vector<IntPoly>> entry;
};

struct LinearSystem {
    PolyMatrix matrix;
    std::size_t rhs_row = 0;  // unit right-hand side position (= t)
};

// Solution of the strip system: phi[j] counts paths from level t to level j
// inside {0, ..., m-1}, with z marking steps.
struct StripSolution {
    std::vector<Series> phi;
    long start = 0;
    std::size_t m = 0;
};

LinearSystem build_system(std::size_t m, long t);

// Gaussian elimination over truncated series in z; every pivot is a unit.
StripSolution solve_series(std::size_t m, long t, std::size_t order);

// Exact determinant via fraction-free (Bareiss) elimination.
IntPoly det_poly(const PolyMatrix& mat);

// The matrix with column j replaced by the unit vector at row t.
PolyMatrix replace_column(const LinearSystem& sys, std::size_t j);

// Closed form D_m = (1+v)^{m-1} (1-v^{m+2}) / ((1+v+v^2)^m (1-v)),
// evaluated as a series in v.
Series det_Dm_closed(std::size_t m, std::size_t order);

// Closed forms for the Cramer numerators D(m;t,j), both branches.
Series det_D_replaced(std::size_t m, long t, long j, std::size_t order);

// Three-term recursion on D_m, checked for all 1 <= m <= m_max - 2.
bool det_recursion_check(std::size_t m_max, std::size_t order);

// Closed-form phi_j for the strip {0,...,m-1}, mapped to z.
Series phi_closed(std::size_t m, long t, long j, std::size_t order);

// m -> infinity limit (no upper boundary), mapped to z.
Series phi_limit(long t, long j, std::size_t order);

// Boundaries -t and h, path from level 0 to level i with -t <= i <= h.
Series phi_shifted(long h, long t, long i, std::size_t order);

// Substitution z = v/(1+v+v^2) as a series in v.
Series z_of_v(std::size_t order);

}  // namespace deutsch

#endif
