#include "deutsch/oracle.hpp"

#include <stdexcept>

namespace deutsch {

bool StripSpec::valid() const {
    if (start < 0 || end < 0) return false;
    if (strip_size) {
        if (*strip_size < 1) return false;
        if (start > *strip_size - 1 || end > *strip_size - 1) return false;
    }
    return true;
}

void StripSpec::check() const {
    if (!valid()) {
        throw std::invalid_argument("invalid strip spec: start/end outside the strip");
    }
}

std::vector<std::vector<Int>> count_table(long steps, long start,
                                          std::optional<long> strip_size) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    // An n-step path cannot climb above start + n, so a bounded working
    // height makes the unbounded case exactly computable.
    long height = strip_size ? *strip_size : start + steps + 1;
    if (start >= height) throw std::invalid_argument("start level outside the strip");

    std::vector<std::vector<Int>> table(steps + 1, std::vector<Int>(height, Int(0)));
    table[0][start] = 1;
    for (long s = 0; s < steps; ++s) {
        // Suffix sums give all down-steps into a level in O(1) each.
        Int suffix = 0;
        for (long lvl = height - 1; lvl >= 0; --lvl) {
            Int next = (lvl > 0) ? table[s][lvl - 1] : Int(0);  // up-step
            table[s + 1][lvl] = next + suffix;                  // + down-steps from above
            suffix += table[s][lvl];
        }
    }
    return table;
}

Int count_paths(long steps, const StripSpec& spec) {
    spec.check();
    if (steps < 0) throw std::invalid_argument("negative step count");
    auto table = count_table(steps, spec.start, spec.strip_size);
    long height = static_cast<long>(table[steps].size());
    if (spec.end >= height) return 0;
    return table[steps][spec.end];
}

Series count_series(const StripSpec& spec, std::size_t order) {
    spec.check();
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    long steps = static_cast<long>(order) - 1;
    auto table = count_table(steps, spec.start, spec.strip_size);
    std::vector<Rat> coeffs(order);
    long height = static_cast<long>(table[0].size());
    for (std::size_t n = 0; n < order; ++n) {
        coeffs[n] = (spec.end < height) ? Rat(table[n][spec.end]) : Rat(0);
    }
    return Series(Var::Z, std::move(coeffs));
}

Int count_paths_any_end(long steps, const StripSpec& spec) {
    spec.check();
    auto table = count_table(steps, spec.start, spec.strip_size);
    Int total = 0;
    for (const Int& c : table[steps]) total += c;
    return total;
}

namespace {

void enumerate_rec(long remaining, long level, long end, long height,
                   std::vector<long>& path, std::vector<std::vector<long>>& out) {
    if (remaining == 0) {
        if (level == end) out.push_back(path);
        return;
    }
    if (level + 1 < height) {
        path.push_back(1);
        enumerate_rec(remaining - 1, level + 1, end, height, path, out);
        path.pop_back();
    }
    for (long target = level - 1; target >= 0; --target) {
        path.push_back(target - level);
        enumerate_rec(remaining - 1, target, end, height, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<long>> enumerate_paths(long steps, const StripSpec& spec) {
    spec.check();
    if (steps < 0 || steps > 10) {
        throw std::invalid_argument("enumeration is limited to at most 10 steps");
    }
    long height = spec.strip_size ? *spec.strip_size : spec.start + steps + 1;
    std::vector<std::vector<long>> out;
    std::vector<long> path;
    enumerate_rec(steps, spec.start, spec.end, height, path, out);
    return out;
}

}  // namespace deutsch
