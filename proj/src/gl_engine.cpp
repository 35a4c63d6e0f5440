#include "fraclimit/gl_engine.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "fraclimit/errors.hpp"
#include "fraclimit/rl_reference.hpp"
#include "fraclimit/specfun.hpp"
#include "fraclimit/summation.hpp"

namespace fraclimit::gl {

namespace {

double horner(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * t + *it;
    return v;
}

double pow_by_squaring(double t, unsigned m) {
    double result = 1.0;
    double base = t;
    while (m != 0) {
        if (m & 1u)
            result *= base;
        base *= base;
        m >>= 1u;
    }
    return result;
}

} // namespace

double gl_partial_sum(const FunctionDescriptor& f, double x, const Rational& R, double h,
                      std::int64_t N) {
    if (h == 0.0)
        throw ZeroStepError("difference quotient needs a non-zero step");
    if (N < 0)
        throw ParameterError("gl_partial_sum requires N >= 0");
    // h^{-R} first: a reverse step with an even-denominator order must fail
    // before any summation happens.
    const double prefactor = specfun::real_branch_power(h, -R);

    const bool is_power = std::holds_alternative<Power>(f);
    unsigned power_deg = 0;
    if (is_power) {
        const int m = std::get<Power>(f).m;
        if (m < 0)
            throw ParameterError("Power degree must be >= 0, got " + std::to_string(m));
        power_deg = static_cast<unsigned>(m);
    }
    const std::vector<double> coeffs = is_power ? std::vector<double>{} : to_coefficients(f);

    const double Rv = R.value();
    CompensatedSum acc;
    double w = 1.0; // C(R,0)(-1)^0
    for (std::int64_t k = 0; k <= N; ++k) {
        const double t = x - static_cast<double>(k) * h;
        const double ft = is_power ? pow_by_squaring(t, power_deg) : horner(coeffs, t);
        acc.add(w * ft);
        w *= (static_cast<double>(k) - Rv) / static_cast<double>(k + 1);
    }
    return prefactor * acc.value();
}

CoupledEvalResult gl_coupled(const FunctionDescriptor& f, double x, const Rational& R, double q,
                             std::int64_t N) {
    if (x == 0.0)
        throw DegenerateError("coupled evaluation is degenerate at x = 0");
    if (N < 1)
        throw ParameterError("gl_coupled requires N >= 1");

    CoupledEvalResult out;
    out.x = x;
    out.R = R;
    out.q = q;
    out.N = N;

    if (q == 0.0) {
        // Order-of-limits fallback: with h -> 0 taken first, only a positive
        // integer order names a classical derivative.
        if (!(R.is_integer() && R.num >= 1))
            throw DegenerateError("q = 0 only names the classical case (positive integer order)");
        const rl::RLValue target = rl::rl_of(f, R, x);
        out.h = 0.0;
        out.gl_value = target.value;
        out.rl_value = target.value;
        out.abs_error = 0.0;
        out.handedness = Handedness::Reverse; // h = 0 is not a forward step
        return out;
    }

    out.h = q * x / static_cast<double>(N);
    out.gl_value = gl_partial_sum(f, x, R, out.h, N);
    out.rl_value = rl::rl_of(f, R, x).value;
    out.abs_error = std::fabs(out.gl_value - out.rl_value);
    out.handedness = out.h > 0.0 ? Handedness::Forward : Handedness::Reverse;
    return out;
}

std::vector<ConvergenceRow> convergence_sweep(const FunctionDescriptor& f, double x,
                                              const Rational& R, double q,
                                              const std::vector<std::int64_t>& schedule,
                                              unsigned max_threads) {
    if (schedule.empty())
        throw ParameterError("convergence schedule must not be empty");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i] < 1)
            throw ParameterError("convergence schedule entries must be >= 1");
        if (i > 0 && schedule[i] <= schedule[i - 1])
            throw ParameterError("convergence schedule must be strictly increasing");
    }

    const std::size_t n = schedule.size();
    std::vector<CoupledEvalResult> results(n);

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    std::size_t pool = max_threads == 0 ? hw : max_threads;
    pool = std::min<std::size_t>(pool, n);

    if (pool <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = gl_coupled(f, x, R, q, schedule[i]);
    } else {
        // Every entry is a pure independent evaluation, so any assignment of
        // entries to threads reproduces the sequential bits exactly.
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        workers.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) {
            workers.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n)
                        return;
                    try {
                        results[i] = gl_coupled(f, x, R, q, schedule[i]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& w : workers)
            w.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    std::vector<ConvergenceRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].N = results[i].N;
        rows[i].h = results[i].h;
        rows[i].gl_value = results[i].gl_value;
        rows[i].rl_value = results[i].rl_value;
        rows[i].abs_error = results[i].abs_error;
        if (i > 0 && rows[i - 1].abs_error > 0.0 && rows[i].abs_error > 0.0) {
            rows[i].observed_order =
                std::log(rows[i - 1].abs_error / rows[i].abs_error) /
                std::log(static_cast<double>(schedule[i]) / static_cast<double>(schedule[i - 1]));
        }
    }
    return rows;
}

} // namespace fraclimit::gl
