#ifndef DEUTSCH_KERNEL_HPP
#define DEUTSCH_KERNEL_HPP

#include "deutsch/series.hpp"

namespace deutsch {

// Small root of the shifted kernel z*r^2 + (z-1)*r + z = 0. Computed from
// the square-root formula and cross-checked against the fixed-point series
// v(z); the two constructions must agree.
struct KernelRoots {
    Series r2;
};

KernelRoots roots_r2(std::size_t order);

// Exact polynomial check of the partial-fraction identity behind the
// coefficient extraction:
//   u^t(1-u) + v(1+v)^t = (u-1-v) * ( -v * sum_{k=0}^{t-1} (1+v)^{t-1-k} u^k - u^t ).
bool kernel_identity(long t);

// Generating function of paths from level t to any end level >= 0:
// F(z,1) = (1+r2)^t * r2 / z.
Series F_total(long t, std::size_t order);

// f_j(z) via the explicit [u^j] extraction, evaluated in v and mapped to z.
Series f_unbounded_sum(long t, long j, std::size_t order);

// f_j(z) via the simplified two-case closed form.
Series f_unbounded_closed(long t, long j, std::size_t order);

// Extra headroom used for intermediate v-space work: v(z) has valuation 1,
// so z-order N needs v-order N; the margin guards off-by-one truncation.
inline std::size_t v_order_for(std::size_t z_order) { return z_order + 2; }

}  // namespace deutsch

#endif
