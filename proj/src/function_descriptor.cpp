#include "fraclimit/function_descriptor.hpp"

#include <string>

#include "fraclimit/errors.hpp"

namespace fraclimit {

namespace {

void check_terms(int k, const char* kind) {
    if (k < 0)
        throw ParameterError(std::string(kind) + " truncation must be >= 0, got " +
                             std::to_string(k));
}

std::vector<double> taylor_exp_coeffs(int K) {
    std::vector<double> c(static_cast<std::size_t>(K) + 1);
    double term = 1.0;
    for (int m = 0; m <= K; ++m) {
        c[static_cast<std::size_t>(m)] = term;
        term /= static_cast<double>(m + 1);
    }
    return c;
}

std::vector<double> taylor_sin_coeffs(int K) {
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    double inv_fact = 1.0;
    for (int m = 1; m <= K; ++m) {
        inv_fact /= static_cast<double>(m);
        if (m % 2 == 1)
            c[static_cast<std::size_t>(m)] = (((m - 1) / 2) % 2 == 0) ? inv_fact : -inv_fact;
    }
    return c;
}

std::vector<double> taylor_cos_coeffs(int K) {
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    c[0] = 1.0;
    double inv_fact = 1.0;
    for (int m = 1; m <= K; ++m) {
        inv_fact /= static_cast<double>(m);
        if (m % 2 == 0)
            c[static_cast<std::size_t>(m)] = ((m / 2) % 2 == 0) ? inv_fact : -inv_fact;
    }
    return c;
}

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

std::vector<double> to_coefficients(const FunctionDescriptor& f) {
    return std::visit(
        [](const auto& d) -> std::vector<double> {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Power>) {
                if (d.m < 0)
                    throw ParameterError("Power degree must be >= 0, got " + std::to_string(d.m));
                std::vector<double> c(static_cast<std::size_t>(d.m) + 1, 0.0);
                c.back() = 1.0;
                return c;
            } else if constexpr (std::is_same_v<T, Polynomial>) {
                return d.coeffs;
            } else if constexpr (std::is_same_v<T, TaylorExp>) {
                check_terms(d.terms, "TaylorExp");
                return taylor_exp_coeffs(d.terms);
            } else if constexpr (std::is_same_v<T, TaylorSin>) {
                check_terms(d.terms, "TaylorSin");
                return taylor_sin_coeffs(d.terms);
            } else {
                check_terms(d.terms, "TaylorCos");
                return taylor_cos_coeffs(d.terms);
            }
        },
        f);
}

double evaluate_function(const FunctionDescriptor& f, double t) {
    if (const auto* p = std::get_if<Power>(&f)) {
        if (p->m < 0)
            throw ParameterError("Power degree must be >= 0, got " + std::to_string(p->m));
        return pow_by_squaring(t, static_cast<unsigned>(p->m));
    }
    return horner(to_coefficients(f), t);
}

bool is_taylor(const FunctionDescriptor& f) {
    return std::holds_alternative<TaylorExp>(f) || std::holds_alternative<TaylorSin>(f) ||
           std::holds_alternative<TaylorCos>(f);
}

} // namespace fraclimit
