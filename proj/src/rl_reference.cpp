#include "fraclimit/rl_reference.hpp"

#include <cmath>
#include <string>

#include "fraclimit/errors.hpp"
#include "fraclimit/specfun.hpp"
#include "fraclimit/summation.hpp"

namespace fraclimit::rl {

double rl_power(int m, const Rational& R, double x) {
    if (m < 0)
        throw ParameterError("rl_power requires degree m >= 0, got " + std::to_string(m));
    // Gamma(m-R+1) pole <=> integer R >= m+1: reciprocal-gamma zero.
    if (R.is_integer() && R.num >= static_cast<std::int64_t>(m) + 1)
        return 0.0;
    const double md = static_cast<double>(m);
    const double Rv = R.value();
    const auto top = specfun::log_gamma_signed(md + 1.0);
    const auto bot = specfun::log_gamma_signed(md - Rv + 1.0);
    const double coef = static_cast<double>(top.sign * bot.sign) *
                        std::exp(top.log_magnitude - bot.log_magnitude);
    const double xpow = specfun::real_branch_power(x, R.subtract_from(m));
    return coef * xpow;
}

RLValue rl_polynomial(const std::vector<double>& coeffs, const Rational& R, double x) {
    RLValue out;
    out.terms.reserve(coeffs.size());
    CompensatedSum acc;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        RLTerm term;
        term.degree = static_cast<int>(d);
        term.coefficient = coeffs[d];
        term.contribution =
            coeffs[d] == 0.0 ? 0.0 : coeffs[d] * rl_power(term.degree, R, x);
        acc.add(term.contribution);
        out.terms.push_back(term);
    }
    out.value = acc.value();
    return out;
}

RLValue rl_taylor(const FunctionDescriptor& f, const Rational& R, double x) {
    if (!is_taylor(f))
        throw ParameterError("rl_taylor accepts Taylor descriptors only");
    return rl_polynomial(to_coefficients(f), R, x);
}

RLValue rl_of(const FunctionDescriptor& f, const Rational& R, double x) {
    return rl_polynomial(to_coefficients(f), R, x);
}

} // namespace fraclimit::rl
