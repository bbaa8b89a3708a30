#ifndef DEUTSCH_VERIFY_HPP
#define DEUTSCH_VERIFY_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace deutsch {

struct VerifyOptions {
    std::size_t max_m = 6;
    long max_t = 5;
    long max_n = 12;
    std::size_t trunc = 16;
    // Restrict to the named suites; empty runs everything.
    std::vector<std::string> suites;
    // Negative-control hook: deliberately perturbs one comparison so the
    // oracle suite must fail.
    bool inject_fault = false;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    long cases = 0;
};

const std::vector<std::string>& all_suite_names();

// Runs the cross-check suites (kernel identity, root consistency,
// determinant ground truth and recursion, Cramer consistency, oracle
// equality, the shifted-boundary reduction, stabilization).
std::vector<SuiteResult> run_verification(const VerifyOptions& opts);

}  // namespace deutsch

#endif
