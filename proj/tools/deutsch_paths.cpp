// Command-line front end: exact counts, series expansions, count tables,
// determinants, and the full cross-check suite for Deutsch paths
// (up-steps +1, down-steps -d for every d >= 1) in a strip.

#include "deutsch/kernel.hpp"
#include "deutsch/oracle.hpp"
#include "deutsch/strip_solver.hpp"
#include "deutsch/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using deutsch::Int;
using deutsch::Rat;
using deutsch::Series;
using deutsch::StripSpec;
using json = nlohmann::json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidParams = 2;
constexpr int kExitMethodDisagreement = 3;

std::string rat_to_decimal(const Rat& c) {
    if (boost::multiprecision::denominator(c) != 1) {
        throw std::logic_error("count is not an integer");
    }
    return boost::multiprecision::numerator(c).str();
}

json params_json(long t, long j, const std::optional<long>& m) {
    json p;
    p["t"] = t;
    p["j"] = j;
    if (m) p["m"] = *m;
    return p;
}

// Closed-form series for the spec: Theorem 1 in a strip, the m->infinity
// limit otherwise.
Series closed_series(const StripSpec& spec, std::size_t order) {
    if (spec.strip_size) {
        return deutsch::phi_closed(static_cast<std::size_t>(*spec.strip_size),
                                   spec.start, spec.end, order);
    }
    return deutsch::phi_limit(spec.start, spec.end, order);
}

void emit_coefficients(const std::string& command, const json& params,
                       const std::vector<std::string>& coeffs, const std::string& format) {
    if (format == "json") {
        json out;
        out["command"] = command;
        out["params"] = params;
        out["coefficients"] = coeffs;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,coefficient\n";
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            std::cout << n << "," << coeffs[n] << "\n";
        }
    } else {
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            if (n) std::cout << ",";
            std::cout << coeffs[n];
        }
        std::cout << "\n";
    }
}

int run_count(long n, long t, long j, std::optional<long> m, const std::string& method,
              bool check, const std::string& format) {
    StripSpec spec{t, j, m};
    spec.check();
    if (n < 0) throw std::invalid_argument("step count must be nonnegative");

    Int dp_count = deutsch::count_paths(n, spec);
    std::string result;
    if (method == "closed" || check) {
        Series s = closed_series(spec, static_cast<std::size_t>(n) + 1);
        std::string closed = rat_to_decimal(s.coeff(n));
        if (check && closed != dp_count.str()) {
            std::cerr << "method disagreement: dp=" << dp_count << " closed=" << closed << "\n";
            return kExitMethodDisagreement;
        }
        result = (method == "closed") ? closed : dp_count.str();
    } else {
        result = dp_count.str();
    }

    if (format == "json") {
        json out;
        out["command"] = "count";
        out["params"] = params_json(t, j, m);
        out["params"]["n"] = n;
        out["params"]["method"] = method;
        out["coefficients"] = std::vector<std::string>{result};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

int run_series(long t, long j, std::optional<long> m, std::size_t trunc,
               const std::string& method, const std::string& format) {
    StripSpec spec{t, j, m};
    spec.check();
    if (trunc < 1) throw std::invalid_argument("truncation order must be at least 1");

    Series s = (method == "closed") ? closed_series(spec, trunc)
                                    : deutsch::count_series(spec, trunc);
    std::vector<std::string> coeffs;
    coeffs.reserve(trunc);
    for (std::size_t n = 0; n < trunc; ++n) coeffs.push_back(rat_to_decimal(s.coeff(n)));

    json params = params_json(t, j, m);
    params["trunc"] = trunc;
    params["method"] = method;
    emit_coefficients("series", params, coeffs, format);
    return 0;
}

int run_table(long n_max, long t, std::optional<long> m, const std::string& method,
              const std::string& format) {
    StripSpec spec{t, t, m};
    spec.check();
    if (n_max < 0) throw std::invalid_argument("step count must be nonnegative");

    long width = m ? *m : t + n_max + 1;
    std::vector<std::vector<std::string>> rows(n_max + 1, std::vector<std::string>(width));
    if (method == "closed") {
        for (long j = 0; j < width; ++j) {
            Series s = closed_series({t, j, m}, static_cast<std::size_t>(n_max) + 1);
            for (long n = 0; n <= n_max; ++n) rows[n][j] = rat_to_decimal(s.coeff(n));
        }
    } else {
        auto table = deutsch::count_table(n_max, t, m);
        for (long n = 0; n <= n_max; ++n) {
            for (long j = 0; j < width; ++j) rows[n][j] = table[n][j].str();
        }
    }

    if (format == "json") {
        json out;
        out["command"] = "table";
        out["params"] = params_json(t, t, m);
        out["params"]["n_max"] = n_max;
        out["params"]["method"] = method;
        out["rows"] = rows;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n";
        for (long j = 0; j < width; ++j) std::cout << ",j" << j;
        std::cout << "\n";
        for (long n = 0; n <= n_max; ++n) {
            std::cout << n;
            for (const auto& cell : rows[n]) std::cout << "," << cell;
            std::cout << "\n";
        }
    } else {
        for (long n = 0; n <= n_max; ++n) {
            for (long j = 0; j < width; ++j) {
                if (j) std::cout << " ";
                std::cout << rows[n][j];
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_det(std::size_t m, std::optional<long> t, std::optional<long> j, bool check,
            const std::string& format) {
    if (t.has_value() != j.has_value()) {
        throw std::invalid_argument("--t and --j must be given together");
    }
    deutsch::LinearSystem sys = deutsch::build_system(m, t.value_or(0));
    deutsch::IntPoly det = t ? deutsch::det_poly(deutsch::replace_column(sys, *j))
                             : deutsch::det_poly(sys.matrix);

    if (check) {
        constexpr std::size_t order = 30;
        Series subst = det.eval(deutsch::z_of_v(order));
        Series closed = t ? deutsch::det_D_replaced(m, *t, *j, order)
                          : deutsch::det_Dm_closed(m, order);
        if (!subst.same_series(closed)) {
            std::cerr << "determinant disagrees with the closed form\n";
            return kExitMethodDisagreement;
        }
    }

    long deg = det.degree();
    std::vector<std::string> coeffs;
    for (long n = 0; n <= std::max<long>(deg, 0); ++n) coeffs.push_back(det.coeff(n).str());
    if (format == "json") {
        json out;
        out["command"] = "det";
        out["params"]["m"] = m;
        if (t) {
            out["params"]["t"] = *t;
            out["params"]["j"] = *j;
        }
        out["coefficients"] = coeffs;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,coefficient\n";
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            std::cout << n << "," << coeffs[n] << "\n";
        }
    } else {
        std::cout << det.str() << "\n";
    }
    return 0;
}

int run_verify(const deutsch::VerifyOptions& opts, const std::string& format) {
    auto results = deutsch::run_verification(opts);
    bool all_pass = true;
    if (format == "json") {
        json out;
        out["suites"] = json::array();
        for (const auto& r : results) {
            out["suites"].push_back({{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}});
            all_pass = all_pass && r.pass;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name
                      << " (" << r.cases << " cases)\n";
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Deutsch-path counting and closed-form verification"};
    app.require_subcommand(1);

    std::string format = "text";

    long n = 0, t = 0, j = 0, n_max = 0;
    std::optional<long> m;
    std::optional<long> det_t, det_j;
    std::size_t trunc = 16;
    std::size_t det_m = 1;
    std::string method = "dp";
    bool check = false;

    deutsch::VerifyOptions vopts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* cmd_count = app.add_subcommand("count", "Count n-step paths from t to j");
    cmd_count->add_option("--n", n, "Number of steps")->required();
    cmd_count->add_option("--t", t, "Start level")->required();
    cmd_count->add_option("--j", j, "End level")->required();
    cmd_count->add_option("--m", m, "Strip size (upper boundary m-1); omit for unbounded");
    cmd_count->add_option("--method", method)->check(CLI::IsMember({"dp", "closed"}));
    cmd_count->add_flag("--check", check, "Compute both methods and compare");
    add_common(cmd_count);

    auto* cmd_series = app.add_subcommand("series", "Generating-function coefficients");
    cmd_series->add_option("--t", t)->required();
    cmd_series->add_option("--j", j)->required();
    cmd_series->add_option("--m", m);
    cmd_series->add_option("--trunc", trunc, "Number of coefficients");
    cmd_series->add_option("--method", method)->check(CLI::IsMember({"dp", "closed"}));
    add_common(cmd_series);

    auto* cmd_table = app.add_subcommand("table", "Count grid over steps and end levels");
    cmd_table->add_option("--n-max", n_max, "Maximum number of steps")->required();
    cmd_table->add_option("--t", t)->required();
    cmd_table->add_option("--m", m);
    cmd_table->add_option("--method", method)->check(CLI::IsMember({"dp", "closed"}));
    add_common(cmd_table);

    auto* cmd_det = app.add_subcommand("det", "Exact determinant of the strip system");
    cmd_det->add_option("--m", det_m, "Matrix dimension")->required();
    cmd_det->add_option("--t", det_t, "Unit right-hand side row (replaced-column determinant)");
    cmd_det->add_option("--j", det_j, "Replaced column");
    cmd_det->add_flag("--check", check, "Verify against the closed form");
    add_common(cmd_det);

    auto* cmd_verify = app.add_subcommand("verify", "Run the full cross-check suite");
    cmd_verify->add_option("--m-max", vopts.max_m);
    cmd_verify->add_option("--t-max", vopts.max_t);
    cmd_verify->add_option("--n-max", vopts.max_n);
    cmd_verify->add_option("--trunc", vopts.trunc);
    cmd_verify->add_option("--suite", vopts.suites, "Run only the named suites")
        ->check(CLI::IsMember(deutsch::all_suite_names()));
    cmd_verify->add_flag("--inject-fault", vopts.inject_fault,
                         "Negative control: force an oracle mismatch");
    add_common(cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidParams;
    }

    try {
        if (cmd_count->parsed()) return run_count(n, t, j, m, method, check, format);
        if (cmd_series->parsed()) return run_series(t, j, m, trunc, method, format);
        if (cmd_table->parsed()) return run_table(n_max, t, m, method, format);
        if (cmd_det->parsed()) return run_det(det_m, det_t, det_j, check, format);
        if (cmd_verify->parsed()) return run_verify(vopts, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitInvalidParams;
}
