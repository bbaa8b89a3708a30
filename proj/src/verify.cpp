#include "deutsch/verify.hpp"

#include "deutsch/kernel.hpp"
#include "deutsch/oracle.hpp"
#include "deutsch/strip_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace deutsch {

namespace {

constexpr std::size_t kDetOrder = 30;

struct Counter {
    long cases = 0;
    bool pass = true;

    void check(bool ok) {
        ++cases;
        if (!ok) pass = false;
    }
};

SuiteResult suite_kernel(const VerifyOptions& opts) {
    Counter c;
    long t_max = std::max<long>(opts.max_t, 12);
    for (long t = 0; t <= t_max; ++t) {
        c.check(kernel_identity(t));
    }
    return {"kernel", c.pass, c.cases};
}

SuiteResult suite_roots(const VerifyOptions&) {
    Counter c;
    bool ok = true;
    try {
        // The constructor already cross-checks against the fixed-point v(z).
        Series r2 = roots_r2(40).r2;
        Series z = Series::variable(Var::Z, 40);
        Series one = Series::constant(Var::Z, 1, 40);
        Series kernel_eq = z * r2 * r2 + (z - one) * r2 + z;
        ok = kernel_eq.is_zero();
    } catch (const std::logic_error&) {
        ok = false;
    }
    c.check(ok);
    return {"roots", c.pass, c.cases};
}

SuiteResult suite_determinant(const VerifyOptions& opts) {
    Counter c;
    Series zv = z_of_v(kDetOrder);
    for (std::size_t m = 1; m <= opts.max_m; ++m) {
        LinearSystem sys = build_system(m, 0);
        Series lhs = det_poly(sys.matrix).eval(zv);
        c.check(lhs.same_series(det_Dm_closed(m, kDetOrder)));
    }
    std::size_t replaced_max = std::min<std::size_t>(opts.max_m, 6);
    for (std::size_t m = 1; m <= replaced_max; ++m) {
        for (long t = 0; t < static_cast<long>(m); ++t) {
            LinearSystem sys = build_system(m, t);
            for (long j = 0; j < static_cast<long>(m); ++j) {
                Series lhs = det_poly(replace_column(sys, j)).eval(zv);
                c.check(lhs.same_series(det_D_replaced(m, t, j, kDetOrder)));
            }
        }
    }
    return {"determinant", c.pass, c.cases};
}

SuiteResult suite_recursion(const VerifyOptions& opts) {
    Counter c;
    c.check(det_recursion_check(std::max<std::size_t>(opts.max_m, 3), kDetOrder));
    return {"recursion", c.pass, c.cases};
}

SuiteResult suite_cramer(const VerifyOptions& opts) {
    Counter c;
    std::size_t nv = v_order_for(opts.trunc);
    for (std::size_t m = 1; m <= opts.max_m; ++m) {
        for (long t = 0; t < static_cast<long>(m); ++t) {
            StripSolution sol = solve_series(m, t, opts.trunc);
            Series dm = det_Dm_closed(m, nv);
            for (long j = 0; j < static_cast<long>(m); ++j) {
                Series closed = phi_closed(m, t, j, opts.trunc);
                Series cramer = v_to_z(det_D_replaced(m, t, j, nv) / dm, nv);
                c.check(sol.phi[j].same_series(closed));
                c.check(sol.phi[j].same_series(cramer));
            }
        }
    }
    return {"cramer", c.pass, c.cases};
}

SuiteResult suite_oracle(const VerifyOptions& opts) {
    Counter c;
    std::size_t order = static_cast<std::size_t>(opts.max_n) + 1;
    bool fault_pending = opts.inject_fault;
    for (std::size_t m = 1; m <= opts.max_m; ++m) {
        for (long t = 0; t < static_cast<long>(m); ++t) {
            for (long j = 0; j < static_cast<long>(m); ++j) {
                StripSpec spec{t, j, static_cast<long>(m)};
                Series expected = count_series(spec, order);
                Series got = phi_closed(m, t, j, order);
                for (std::size_t n = 0; n < order; ++n) {
                    Rat want = expected.coeff(n);
                    if (fault_pending) {
                        want += 1;
                        fault_pending = false;
                    }
                    c.check(got.coeff(n) == want);
                }
            }
        }
    }
    for (long t = 0; t <= opts.max_t; ++t) {
        for (long j = 0; j <= opts.max_t; ++j) {
            StripSpec spec{t, j, std::nullopt};
            Series expected = count_series(spec, order);
            Series closed = f_unbounded_closed(t, j, order);
            Series summed = f_unbounded_sum(t, j, order);
            c.check(closed.same_series(expected));
            c.check(summed.same_series(closed));
        }
    }
    return {"oracle", c.pass, c.cases};
}

SuiteResult suite_theorem2(const VerifyOptions& opts) {
    Counter c;
    long bound = std::min<long>(opts.max_t, 5);
    for (long h = 0; h <= bound; ++h) {
        for (long t = 0; t <= bound; ++t) {
            for (long i = -t; i <= h; ++i) {
                Series shifted = phi_shifted(h, t, i, opts.trunc);
                Series strip = phi_closed(h + t + 1, t, i + t, opts.trunc);
                c.check(shifted.same_series(strip));
            }
        }
    }
    return {"theorem2", c.pass, c.cases};
}

SuiteResult suite_stabilization(const VerifyOptions& opts) {
    Counter c;
    long bound = std::min<long>(opts.max_t, 4);
    long n_max = std::min<long>(opts.max_n, 10);
    for (long t = 0; t <= bound; ++t) {
        for (long j = 0; j <= bound; ++j) {
            Series limit = phi_limit(t, j, static_cast<std::size_t>(n_max) + 1);
            for (long n = 0; n <= n_max; ++n) {
                // m >= t+n+1 stabilizes; max with j keeps the endpoint in the strip.
                std::size_t m = static_cast<std::size_t>(std::max(t, j) + n + 1);
                Series strip = phi_closed(m, t, j, static_cast<std::size_t>(n) + 1);
                bool ok = true;
                for (long k = 0; k <= n; ++k) {
                    if (strip.coeff(k) != limit.coeff(k)) ok = false;
                }
                c.check(ok);
            }
        }
    }
    return {"stabilization", c.pass, c.cases};
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
    static const std::vector<std::string> names = {
        "kernel", "roots", "determinant", "recursion",
        "cramer", "oracle", "theorem2", "stabilization"};
    return names;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
    auto selected = [&](const std::string& name) {
        return opts.suites.empty() ||
               std::find(opts.suites.begin(), opts.suites.end(), name) != opts.suites.end();
    };
    for (const auto& s : opts.suites) {
        const auto& names = all_suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            throw std::invalid_argument("unknown suite: " + s);
        }
    }
    std::vector<SuiteResult> results;
    if (selected("kernel")) results.push_back(suite_kernel(opts));
    if (selected("roots")) results.push_back(suite_roots(opts));
    if (selected("determinant")) results.push_back(suite_determinant(opts));
    if (selected("recursion")) results.push_back(suite_recursion(opts));
    if (selected("cramer")) results.push_back(suite_cramer(opts));
    if (selected("oracle")) results.push_back(suite_oracle(opts));
    if (selected("theorem2")) results.push_back(suite_theorem2(opts));
    if (selected("stabilization")) results.push_back(suite_stabilization(opts));
    return results;
}

}  // namespace deutsch
