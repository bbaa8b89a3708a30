#ifndef DEUTSCH_ORACLE_HPP
#define DEUTSCH_ORACLE_HPP

#include "deutsch/series.hpp"

#include <optional>
#include <vector>

namespace deutsch {

// Boundary and endpoint data for a counting query. The strip, when bounded,
// is the level set {0, ..., m-1}.
struct StripSpec {
    long start = 0;                 // t
    long end = 0;                   // j
    std::optional<long> strip_size; // m; empty means no upper boundary

    bool valid() const;
    void check() const;  // throws std::invalid_argument if not valid
};

// Ground-truth dynamic-programming counter over the step set
// {+1} ∪ {-d : d >= 1}, lower boundary 0, optional upper boundary m-1.
Int count_paths(long steps, const StripSpec& spec);

// Series in z whose n-th coefficient is count_paths(n, spec), n < order.
Series count_series(const StripSpec& spec, std::size_t order);

// All n-step paths from start staying in bounds, regardless of end level.
Int count_paths_any_end(long steps, const StripSpec& spec);

// Exhaustive enumeration, guarded to steps <= 10. Each path is the list of
// signed level increments.
std::vector<std::vector<long>> enumerate_paths(long steps, const StripSpec& spec);

// The full DP table count[s][level] for s = 0..steps.
std::vector<std::vector<Int>> count_table(long steps, long start,
                                          std::optional<long> strip_size);

}  // namespace deutsch

#endif
