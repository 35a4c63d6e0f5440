// fraclimit — Grünwald–Letnikov coupled-limit evaluator, characteristic-root
// finder, convergence tables, and the identity verification battery.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fraclimit/charpoly.hpp"
#include "fraclimit/cli_config.hpp"
#include "fraclimit/errors.hpp"
#include "fraclimit/gl_engine.hpp"
#include "fraclimit/rl_reference.hpp"
#include "fraclimit/verify_suite.hpp"

namespace {

using fraclimit::cli::ConfigError;
using fraclimit::cli::format_g17;

// Runs `body` against either stdout or a freshly opened file. Files are opened
// in binary mode so "\n" survives untranslated on every platform.
int with_output(const std::string& path, const std::function<int(std::ostream&)>& body) {
    if (path.empty()) return body(std::cout);
    std::ofstream file(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) throw ConfigError("output: cannot open '" + path + "' for writing");
    int rc = body(file);
    file.flush();
    if (!file) throw ConfigError("output: write to '" + path + "' failed");
    return rc;
}

struct CommonArgs {
    std::string function = "power:1";
    std::string order;
    double x = 1.0;
    double q = 1.0;
    std::string schedule = "10000";
    std::string output;
};

int run_eval(const CommonArgs& args) {
    auto f = fraclimit::cli::parse_function(args.function);
    auto R = fraclimit::cli::parse_order(args.order);
    auto schedule = fraclimit::cli::parse_schedule(args.schedule);
    if (schedule.size() != 1)
        throw ConfigError("eval: --n takes a single N, not a schedule");
    auto r = fraclimit::gl::gl_coupled(f, args.x, R, args.q, schedule.front());
    return with_output(args.output, [&](std::ostream& out) {
        out << "gl_value = " << format_g17(r.gl_value) << "\n";
        out << "rl_value = " << format_g17(r.rl_value) << "\n";
        out << "abs_error = " << format_g17(r.abs_error) << "\n";
        out << "h = " << format_g17(r.h) << "\n";
        out << "handedness = " << fraclimit::to_string(r.handedness) << "\n";
        return 0;
    });
}

int run_roots(const std::string& order, int m, const std::string& search,
              const std::string& output) {
    auto R = fraclimit::cli::parse_order(order);
    fraclimit::charpoly::RootSearchOptions opts;
    if (!search.empty()) {
        auto [lo, hi] = fraclimit::cli::parse_interval(search);
        opts.lo = lo;
        opts.hi = hi;
    }
    if (!R.odd_denominator() && opts.lo < 0.0)
        std::cerr << "warning: order denominator is even; negative-axis search disabled\n";
    auto roots = fraclimit::charpoly::find_roots(R, m, opts);
    return with_output(output, [&](std::ostream& out) {
        out << "q,residual,handedness,branch_note\n";
        for (const auto& root : roots) {
            out << format_g17(root.q) << ',' << format_g17(root.residual) << ','
                << fraclimit::to_string(root.handedness) << ',' << root.branch_note << "\n";
        }
        return 0;
    });
}

int run_converge(const CommonArgs& args) {
    auto f = fraclimit::cli::parse_function(args.function);
    auto R = fraclimit::cli::parse_order(args.order);
    auto schedule = fraclimit::cli::parse_schedule(args.schedule);
    auto rows = fraclimit::gl::convergence_sweep(f, args.x, R, args.q, schedule,
                                                 fraclimit::cli::thread_cap_from_env());
    return with_output(args.output, [&](std::ostream& out) {
        out << "N,h,gl_value,rl_value,abs_error,observed_order\n";
        for (const auto& row : rows) {
            out << row.N << ',' << format_g17(row.h) << ',' << format_g17(row.gl_value)
                << ',' << format_g17(row.rl_value) << ',' << format_g17(row.abs_error) << ',';
            if (row.observed_order) out << format_g17(*row.observed_order);
            out << "\n";
        }
        return 0;
    });
}

int run_verify(const std::string& only, std::int64_t max_n, const std::string& output) {
    fraclimit::verify::VerifyOptions opts;
    opts.max_n = max_n;
    opts.only = only;
    auto results = fraclimit::verify::run_checks(opts);
    bool all_pass = true;
    int rc = with_output(output, [&](std::ostream& out) {
        for (const auto& check : results) {
            all_pass = all_pass && check.pass;
            out << (check.pass ? "PASS" : "FAIL") << ' ' << check.name
                << " max_deviation=" << format_g17(check.max_deviation)
                << " tolerance=" << format_g17(check.tolerance) << "\n";
        }
        return 0;
    });
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

int run_diverge_demo(const CommonArgs& args, double h) {
    auto f = fraclimit::cli::parse_function(args.function);
    auto R = fraclimit::cli::parse_order(args.order);
    auto schedule = fraclimit::cli::parse_schedule(args.schedule);
    return with_output(args.output, [&](std::ostream& out) {
        out << "N,partial_value\n";
        for (auto n : schedule) {
            double value = fraclimit::gl::gl_partial_sum(f, args.x, R, h, n);
            out << n << ',' << format_g17(value) << "\n";
        }
        return 0;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupled-limit fractional differentiation toolkit"};
    app.require_subcommand(1);

    CommonArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one coupled-limit pair against the closed form");
    eval->add_option("--function", eval_args.function, "Function spec (power:m, poly:c0,c1,..., taylor-exp[:k], taylor-sin[:k], taylor-cos[:k])");
    eval->add_option("--order", eval_args.order, "Differentiation order, as p/s or decimal")->required();
    eval->add_option("--x", eval_args.x, "Evaluation point");
    eval->add_option("--q", eval_args.q, "Coupling constant");
    eval->add_option("--n", eval_args.schedule, "Number of sum terms N");
    eval->add_option("--output", eval_args.output, "Write report to file instead of stdout");

    std::string roots_order;
    int roots_m = 1;
    std::string roots_search;
    std::string roots_output;
    auto* roots = app.add_subcommand("roots", "Solve the characteristic equation for admissible couplings");
    roots->add_option("--order", roots_order, "Differentiation order, as p/s or decimal")->required();
    roots->add_option("--m", roots_m, "Monomial degree of the target function")->check(CLI::Range(0, 64));
    roots->add_option("--search", roots_search, "Search interval lo:hi (default -64:64)");
    roots->add_option("--output", roots_output, "Write CSV to file instead of stdout");

    CommonArgs conv_args;
    conv_args.schedule = "100:100000:10";
    auto* converge = app.add_subcommand("converge", "Convergence table over a schedule of N values");
    converge->add_option("--function", conv_args.function, "Function spec");
    converge->add_option("--order", conv_args.order, "Differentiation order, as p/s or decimal")->required();
    converge->add_option("--x", conv_args.x, "Evaluation point");
    converge->add_option("--q", conv_args.q, "Coupling constant");
    converge->add_option("--n", conv_args.schedule, "Schedule: single N or a:b:g geometric");
    converge->add_option("--output", conv_args.output, "Write CSV to file instead of stdout");

    std::string verify_only;
    std::int64_t verify_max_n = 10000;
    std::string verify_output;
    auto* verify = app.add_subcommand("verify", "Run the identity verification battery");
    verify->add_option("--only", verify_only, "Run a single named check");
    verify->add_option("--max-n", verify_max_n, "Cap the largest N used by asymptotic checks")
        ->check(CLI::Range(static_cast<std::int64_t>(10), static_cast<std::int64_t>(10000000)));
    verify->add_option("--output", verify_output, "Write report to file instead of stdout");

    CommonArgs div_args;
    div_args.schedule = "100:100000:10";
    double div_h = 0.01;
    auto* diverge = app.add_subcommand("diverge-demo", "Fixed-step partial sums (the uncoupled limit)");
    diverge->set_help_flag("--help", "Print this help message and exit"); // frees -h for the step flag
    diverge->add_option("--function", div_args.function, "Function spec");
    diverge->add_option("--order", div_args.order, "Differentiation order, as p/s or decimal")->required();
    diverge->add_option("--x", div_args.x, "Evaluation point");
    diverge->add_option("--h", div_h, "Fixed step size")->required();
    diverge->add_option("--n", div_args.schedule, "Schedule: single N or a:b:g geometric");
    diverge->add_option("--output", div_args.output, "Write CSV to file instead of stdout");

    try {
        app.parse(argc, argv);
        if (*eval) return run_eval(eval_args);
        if (*roots) return run_roots(roots_order, roots_m, roots_search, roots_output);
        if (*converge) return run_converge(conv_args);
        if (*verify) return run_verify(verify_only, verify_max_n, verify_output);
        if (*diverge) return run_diverge_demo(div_args, div_h);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fraclimit::DomainError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
